#include "alice/oracle.hpp"

#include <bit>

#include "alice/codec.hpp"
#include "alice/descriptor.hpp"

namespace alice {

namespace {

Nat charge_phase(std::size_t wire_len, Nat steps) {
  Nat l = static_cast<Nat>(wire_len);
  if (steps == 0) return l;
  return l - 1 + static_cast<Nat>(std::bit_width(steps));
}

std::size_t wire_len_for_ops(Nat k) {
  return 2 * nat_to_bits(k).size() + 1 + 4 * static_cast<std::size_t>(k);
}

// Calls fn for every program with exactly k opcodes, in opcode-lex order.
// Returns false if fn asked to stop.
template <typename Fn>
bool each_program(Nat k, Fn&& fn) {
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(k), 0);
  for (;;) {
    std::vector<Op> ops;
    ops.reserve(digits.size());
    for (std::uint8_t d : digits) ops.push_back(static_cast<Op>(d));
    if (!fn(Program{std::move(ops)})) return false;
    std::size_t i = digits.size();
    while (i > 0 && digits[i - 1] == 15) digits[--i] = 0;
    if (i == 0) return true;
    ++digits[i - 1];
  }
}

// Calls fn for every bitstring of the given length in lex order.
template <typename Fn>
bool each_string(std::size_t len, Fn&& fn) {
  if (len >= 40) throw std::invalid_argument("string sweep too wide");
  Nat total = Nat{1} << len;
  for (Nat v = 0; v < total; ++v)
    if (!fn(bits_of_value(v, len))) return false;
  return true;
}

}  // namespace

std::optional<AwireResult> first_accepting_awire(const BitString& x,
                                                 std::size_t max_a_len,
                                                 Nat step_cap,
                                                 const Scheme& scheme) {
  std::optional<AwireResult> best;
  Nat total = (Nat{1} << (max_a_len + 1)) - 1;
  for (Nat idx = 0; idx < total; ++idx) {
    BitString wire = nat_to_bits(idx);
    auto ae = parse_autoencoder(wire);
    if (!ae) continue;
    RunOutcome enc = run(ae->encoder, x, step_cap);
    if (!enc.halted()) continue;
    RunOutcome feat = run(ae->feature, enc.output, step_cap - enc.steps);
    if (!feat.halted()) continue;
    if (!accepts(x, feat.output, ae->feature.wire_length(), enc.output,
                 scheme))
      continue;
    Nat t = enc.steps + feat.steps;
    Nat phase = charge_phase(wire.size(), t);
    if (!best || phase < best->phase) {
      best = AwireResult{wire, phase, t, enc.output};
    }
  }
  return best;
}

ComplexityResult bounded_complexity(const BitString& x,
                                    const OracleCaps& caps) {
  std::vector<std::vector<Nat>> by_len(caps.max_pair_len + 1);
  for (Nat k = 0;; ++k) {
    std::size_t wl = wire_len_for_ops(k);
    if (wl > caps.max_pair_len) break;
    by_len[wl].push_back(k);
  }
  for (std::size_t total = 1; total <= caps.max_pair_len; ++total) {
    for (std::size_t lw = 1; lw <= total; ++lw) {
      if (by_len[lw].empty()) continue;
      std::size_t lr = total - lw;
      for (Nat k : by_len[lw]) {
        ComplexityResult found;
        bool done = !each_program(k, [&](Program p) {
          bool keep = each_string(lr, [&](BitString r) {
            RunOutcome out = run(p, r, caps.step_cap);
            if (out.halted() && out.output == x) {
              found.value = static_cast<Nat>(total);
              found.exact = true;
              found.witness = PairWitness{p.wire(), r, out.steps};
              return false;
            }
            return true;
          });
          return keep;
        });
        if (done) return found;
      }
    }
  }
  ComplexityResult fallback;
  fallback.value = static_cast<Nat>(trivial_description(x).wire_length());
  fallback.exact = false;
  return fallback;
}

FeatureSearchResult shortest_bounded_features(const BitString& x,
                                              const OracleCaps& caps,
                                              const Scheme& scheme) {
  FeatureSearchResult res;
  std::size_t limit = std::min(caps.max_pair_len,
                               x.size() > 0 ? x.size() - 1 : std::size_t{0});
  for (Nat k = 0;; ++k) {
    std::size_t lw = wire_len_for_ops(k);
    if (lw > limit) break;
    if (!res.wires.empty() && lw > res.wire_length) break;
    each_program(k, [&](Program p) {
      ++res.programs_tried;
      std::size_t max_r = x.size() - lw;  // exclusive
      for (std::size_t lr = 0; lr < max_r; ++lr) {
        if (scheme.kind != Scheme::Kind::Plain &&
            lr * scheme.b_num > x.size() * scheme.b_den)
          break;
        bool hit = !each_string(lr, [&](BitString r) {
          RunOutcome out = run(p, r, caps.step_cap);
          return !(out.halted() && out.output == x);
        });
        if (hit) {
          res.wire_length = lw;
          res.wires.push_back(p.wire());
          return true;
        }
      }
      return true;
    });
    if (!res.wires.empty()) break;
  }
  return res;
}

SingleProgramResult shortest_printer(const BitString& x,
                                     std::size_t max_wire_len, Nat step_cap,
                                     Nat budget) {
  SingleProgramResult res;
  BitString empty;
  for (Nat k = 0;; ++k) {
    std::size_t wl = wire_len_for_ops(k);
    if (wl > max_wire_len) break;
    res.max_wire_len_reached = wl;
    bool complete = each_program(k, [&](Program p) {
      if (res.budget_used >= budget) {
        res.budget_exhausted = true;
        return false;
      }
      Nat fuel = std::min<Nat>(step_cap, budget - res.budget_used);
      RunOutcome out = run(p, empty, fuel);
      ++res.runs;
      res.budget_used += out.steps;
      if (out.halted() && out.output == x) {
        res.wire = p.wire();
        return false;
      }
      return true;
    });
    if (!complete) break;
  }
  return res;
}

}  // namespace alice
