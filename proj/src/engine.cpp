#include "alice/engine.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "alice/codec.hpp"

namespace alice {

Scheme Scheme::b_feature(Nat num, Nat den) {
  if (den == 0 || num <= den)
    throw std::invalid_argument("Scheme: b must be a rational > 1");
  Scheme s;
  s.kind = Kind::BFeature;
  s.b_num = num;
  s.b_den = den;
  return s;
}

Scheme Scheme::b_feature_early(Nat num, Nat den) {
  Scheme s = b_feature(num, den);
  s.kind = Kind::BFeatureEarly;
  return s;
}

std::string Scheme::name() const {
  switch (kind) {
    case Kind::Plain: return "plain";
    case Kind::BFeature:
      return "b:" + std::to_string(b_num) + "/" + std::to_string(b_den);
    case Kind::BFeatureEarly:
      return "b-early:" + std::to_string(b_num) + "/" + std::to_string(b_den);
  }
  return "?";
}

std::optional<Autoencoder> parse_autoencoder(const BitString& wire) {
  std::size_t pos = 0;
  auto encoder = try_parse_program(wire, &pos);
  if (!encoder) return std::nullopt;
  auto feature = try_parse_program(wire, &pos);
  if (!feature || pos != wire.size()) return std::nullopt;
  return Autoencoder{std::move(*encoder), std::move(*feature)};
}

bool accepts(const BitString& x, const BitString& y,
             std::size_t feature_wire_len, const BitString& r,
             const Scheme& scheme) {
  if (y != x) return false;
  if (feature_wire_len + r.size() >= x.size()) return false;
  if (scheme.kind != Scheme::Kind::Plain &&
      r.size() * scheme.b_num > x.size() * scheme.b_den)
    return false;
  return true;
}

std::size_t universal_feature_wire_length() {
  return Program{{Op::EV}}.wire_length();
}

std::string Dyadic::str() const {
  if (exp == 0) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(Nat{1} << exp);
}

namespace {

std::size_t len_of_index(Nat idx) {
  return static_cast<std::size_t>(std::bit_width(idx + 1) - 1);
}

// Shared table of parse results for every bitstring up to a length cap,
// indexed canonically (index n <-> nat_to_bits(n)). Wire validity does not
// depend on the searched string, so this is built once per cap.
class NodeUniverse {
 public:
  static const NodeUniverse& get(std::size_t max_len) {
    static std::map<std::size_t, std::unique_ptr<NodeUniverse>> cache;
    auto& slot = cache[max_len];
    if (!slot) slot = std::unique_ptr<NodeUniverse>(new NodeUniverse(max_len));
    return *slot;
  }

  Nat count() const { return static_cast<Nat>(entries_.size()); }
  const Autoencoder* autoencoder(Nat idx) const {
    return entries_[static_cast<std::size_t>(idx)].get();
  }
  std::size_t l_a_min() const { return l_a_min_; }

  Dyadic theta(std::size_t up_to_len) const {
    std::size_t cap = std::min(up_to_len, max_len_);
    Dyadic d{0, static_cast<unsigned>(cap)};
    for (std::size_t l = 0; l <= cap; ++l)
      d.num += valid_count_[l] << (cap - l);
    while (d.num != 0 && (d.num & 1) == 0 && d.exp > 0) {
      d.num >>= 1;
      --d.exp;
    }
    if (d.num == 0) d.exp = 0;
    return d;
  }

 private:
  explicit NodeUniverse(std::size_t max_len) : max_len_(max_len) {
    if (max_len > 22)
      throw std::invalid_argument("max_a_len too large (limit 22)");
    Nat total = (Nat{1} << (max_len + 1)) - 1;
    entries_.resize(static_cast<std::size_t>(total));
    valid_count_.assign(max_len + 1, 0);
    l_a_min_ = 0;
    for (Nat i = 0; i < total; ++i) {
      BitString wire = nat_to_bits(i);
      auto ae = parse_autoencoder(wire);
      if (ae) {
        entries_[static_cast<std::size_t>(i)] =
            std::make_unique<Autoencoder>(std::move(*ae));
        ++valid_count_[wire.size()];
        if (l_a_min_ == 0) l_a_min_ = wire.size();
      }
    }
  }

  std::size_t max_len_;
  std::vector<std::unique_ptr<Autoencoder>> entries_;
  std::vector<Nat> valid_count_;
  std::size_t l_a_min_;
};

// Resumable two-stage run of W on one candidate: encoder on x, then the
// feature on the residual. Stage transitions and the final comparison are
// bookkeeping and cost no steps.
class WRun {
 public:
  WRun(const Autoencoder& ae, const BitString& x) : ae_(&ae) {
    vm_ = std::make_unique<VmState>(ae.encoder, x);
    settle();
  }

  bool finished() const { return finished_; }
  bool ok() const { return finished_ && ok_; }
  const BitString& y() const { return y_; }
  const BitString& residual() const { return r_; }
  Nat encoder_steps() const { return encoder_steps_; }
  Nat feature_steps() const { return feature_steps_; }

  void advance() {
    assert(!finished_);
    if (stage_ == 1)
      ++encoder_steps_;
    else
      ++feature_steps_;
    vm_->step();
    settle();
  }

 private:
  void settle() {
    for (;;) {
      if (vm_->failed()) {
        finished_ = true;
        ok_ = false;
        return;
      }
      if (!vm_->halted()) return;
      if (stage_ == 1) {
        r_ = vm_->output();
        stage_ = 2;
        vm_ = std::make_unique<VmState>(ae_->feature, r_);
        continue;
      }
      y_ = vm_->output();
      finished_ = true;
      ok_ = true;
      return;
    }
  }

  const Autoencoder* ae_;
  std::unique_ptr<VmState> vm_;
  int stage_ = 1;
  BitString r_, y_;
  Nat encoder_steps_ = 0, feature_steps_ = 0;
  bool finished_ = false, ok_ = false;
};

// One level of the dovetail. In greedy mode the first acceptance stops the
// search; in recursive mode an accepted node spawns a child search on the
// residual and forwards one step into it per further granted step.
class SearchCore {
 public:
  SearchCore(BitString x, const SearchConfig& cfg, bool recursive,
             std::vector<BitString> chain, AliceResult* sink, Nat depth)
      : x_(std::move(x)),
        cfg_(cfg),
        recursive_(recursive),
        chain_(std::move(chain)),
        sink_(sink),
        depth_(depth),
        universe_(&NodeUniverse::get(cfg.max_a_len)) {
    nodes_.resize(static_cast<std::size_t>(universe_->count()));
    if (sink_) {
      ++sink_->searches_spawned;
      sink_->max_depth = std::max(sink_->max_depth, depth_);
    }
    begin_phase();
  }

  bool found() const { return found_.has_value(); }
  const FeatureStep& feature() const { return *found_; }
  bool exhausted() const { return exhausted_; }
  Nat consumed_units() const { return consumed_units_; }

  // Tries to consume exactly one budget unit (a W-step or a parse charge)
  // somewhere in this subtree. Returns false iff nothing can be consumed:
  // either the space is exhausted or (greedy mode) a zero-cost acceptance
  // ended the search.
  bool step() {
    if (found_ || exhausted_) return false;
    for (;;) {
      if (idx_ >= idx_end_) {
        finish_phase();
        if (live_count_ == 0 && idx_end_ == universe_->count()) {
          exhausted_ = true;
          return false;
        }
        ++phase_;
        begin_phase();
        continue;
      }
      Node& node = nodes_[static_cast<std::size_t>(idx_)];
      if (node.st == St::Terminal || grant_left_ == 0) {
        next_node();
        continue;
      }
      switch (node.st) {
        case St::Untouched: {
          const Autoencoder* ae = universe_->autoencoder(idx_);
          if (!ae) {
            node.st = St::Terminal;
            node.consumed = 1;
            --grant_left_;
            ++parse_charges_;
            ++consumed_units_;
            if (sink_) ++sink_->budget_used;
            return true;
          }
          node.w = std::make_unique<WRun>(*ae, x_);
          touched_valid_.push_back(idx_);
          node.st = St::Live;
          ++live_count_;
          continue;
        }
        case St::Live: {
          if (node.w->finished()) {
            resolve_finished(node);
            if (found_) return false;  // zero-cost acceptance
            continue;
          }
          if (cfg_.node_step_cap && node.consumed >= *cfg_.node_step_cap) {
            node.st = St::Terminal;
            --live_count_;
            node.w.reset();
            continue;
          }
          ++node.consumed;
          --grant_left_;
          ++valid_steps_;
          ++consumed_units_;
          if (sink_) ++sink_->budget_used;
          node.w->advance();
          if (node.w->finished()) resolve_finished(node);
          return true;
        }
        case St::Forwarding: {
          if (node.child_exhausted) {
            next_node();
            continue;
          }
          if (node.child->step()) {
            ++node.consumed;
            --grant_left_;
            ++consumed_units_;
            return true;
          }
          node.child_exhausted = true;
          --live_count_;
          continue;
        }
        case St::Terminal:
          break;  // handled above
      }
    }
  }

  DovetailStats stats_snapshot() const {
    DovetailStats s;
    s.last_completed_phase = phase_ > 0 ? phase_ - 1 : 0;
    s.valid_steps = valid_steps_;
    s.parse_charges = parse_charges_;
    s.theta = theta_;
    s.l_a_min = universe_->l_a_min();
    s.space_exhausted = exhausted_;
    s.audited_phases = audited_phases_;
    s.audit_violations = audit_violations_;
    for (Nat idx : touched_valid_) {
      const Node& n = nodes_[static_cast<std::size_t>(idx)];
      if (n.consumed > 0) s.per_node.emplace_back(nat_to_bits(idx).str(), n.consumed);
    }
    return s;
  }

 private:
  enum class St : std::uint8_t { Untouched, Live, Terminal, Forwarding };
  struct Node {
    St st = St::Untouched;
    bool child_exhausted = false;
    Nat consumed = 0;
    std::unique_ptr<WRun> w;
    std::unique_ptr<SearchCore> child;
  };

  void begin_phase() {
    std::size_t reach = std::min<std::size_t>(static_cast<std::size_t>(phase_),
                                              cfg_.max_a_len);
    idx_end_ = (Nat{1} << (reach + 1)) - 1;
    idx_ = 0;
    init_grant();
  }

  void next_node() {
    ++idx_;
    if (idx_ < idx_end_) init_grant();
  }

  void init_grant() {
    std::size_t len = len_of_index(idx_);
    Nat ph = phase_;
    if (static_cast<Nat>(len) == ph) {
      grant_left_ = 1;
    } else {
      Nat d = ph - static_cast<Nat>(len);
      grant_left_ = d >= 62 ? ~Nat{0} : (Nat{1} << d);
    }
  }

  void finish_phase() {
    theta_.push_back(universe_->theta(static_cast<std::size_t>(
        std::min<Nat>(phase_, static_cast<Nat>(cfg_.max_a_len)))));
    if (cfg_.audit) audit_phase();
  }

  void audit_phase() {
    ++audited_phases_;
    if (phase_ <= 61 && valid_steps_ > (Nat{1} << (phase_ + 1)))
      audit_violations_.push_back("phase " + std::to_string(phase_) +
                                  ": total valid steps " +
                                  std::to_string(valid_steps_) + " > 2^" +
                                  std::to_string(phase_ + 1));
    for (Nat i = 0; i < idx_end_; ++i) {
      const Node& n = nodes_[static_cast<std::size_t>(i)];
      bool live = n.st == St::Live ||
                  (n.st == St::Forwarding && !n.child_exhausted);
      if (!live) continue;
      Nat d = phase_ - static_cast<Nat>(len_of_index(i));
      if (d >= 62) continue;
      Nat expected = (Nat{1} << (d + 1)) - 1;
      if (n.consumed != expected)
        audit_violations_.push_back(
            "phase " + std::to_string(phase_) + " node " +
            nat_to_bits(i).str() + ": consumed " + std::to_string(n.consumed) +
            " expected " + std::to_string(expected));
    }
  }

  void resolve_finished(Node& node) {
    WRun& w = *node.w;
    const Autoencoder* ae = universe_->autoencoder(idx_);
    bool acc = w.ok() && accepts(x_, w.y(), ae->feature.wire_length(),
                                 w.residual(), cfg_.scheme);
    if (!acc) {
      node.st = St::Terminal;
      --live_count_;
      node.w.reset();
      return;
    }
    FeatureStep fs;
    fs.feature_wire = ae->feature.wire();
    fs.encoder_wire = ae->encoder.wire();
    fs.a_wire = nat_to_bits(idx_);
    fs.residual = w.residual();
    fs.feature_steps = w.feature_steps();
    fs.encoder_steps = w.encoder_steps();
    fs.phase_found = phase_;
    if (!recursive_) {
      found_ = std::move(fs);
      node.st = St::Terminal;
      --live_count_;
      node.w.reset();
      return;
    }
    std::vector<BitString> chain;
    chain.reserve(chain_.size() + 1);
    chain.push_back(fs.feature_wire);
    chain.insert(chain.end(), chain_.begin(), chain_.end());
    sink_->descriptions.push_back(AliceDescription{
        chain, w.residual(), sink_->budget_used, depth_ + 1});
    node.child = std::make_unique<SearchCore>(w.residual(), cfg_, true,
                                              std::move(chain), sink_,
                                              depth_ + 1);
    node.st = St::Forwarding;  // still counted live while the child runs
    node.w.reset();
  }

  BitString x_;
  SearchConfig cfg_;
  bool recursive_;
  std::vector<BitString> chain_;
  AliceResult* sink_;
  Nat depth_;
  const NodeUniverse* universe_;

  std::vector<Node> nodes_;
  std::vector<Nat> touched_valid_;
  Nat phase_ = 1;
  Nat idx_ = 0;
  Nat idx_end_ = 0;
  Nat grant_left_ = 0;
  Nat live_count_ = 0;
  Nat valid_steps_ = 0;
  Nat parse_charges_ = 0;
  Nat consumed_units_ = 0;
  Nat audited_phases_ = 0;
  std::vector<Dyadic> theta_;
  std::vector<std::string> audit_violations_;
  std::optional<FeatureStep> found_;
  bool exhausted_ = false;
};

}  // namespace

DovetailResult dovetail_search(const BitString& x, const SearchConfig& cfg,
                               Nat budget) {
  SearchCore core(x, cfg, /*recursive=*/false, {}, nullptr, 0);
  Nat used = 0;
  while (used < budget && !core.found() && !core.exhausted()) {
    if (core.step())
      ++used;
    else
      break;
  }
  DovetailResult r;
  r.consumed = used;
  if (core.found()) r.step = core.feature();
  r.stats = core.stats_snapshot();
  return r;
}

GreedyResult greedy_alice(const BitString& x, const SearchConfig& cfg) {
  GreedyResult res;
  res.residual = x;
  Nat budget_left = cfg.budget;
  for (;;) {
    if (cfg.scheme.kind == Scheme::Kind::BFeatureEarly) {
      Nat c = static_cast<Nat>(universal_feature_wire_length());
      if (res.residual.size() * (cfg.scheme.b_num - cfg.scheme.b_den) <=
          c * cfg.scheme.b_num) {
        res.early_stopped = true;
        break;
      }
    }
    DovetailResult d = dovetail_search(res.residual, cfg, budget_left);
    budget_left -= d.consumed;
    res.budget_used += d.consumed;
    if (d.step) {
      BitString r = d.step->residual;
      res.steps.push_back(GreedyStep{std::move(*d.step), std::move(d.stats)});
      res.residual = std::move(r);
      continue;
    }
    res.space_exhausted = d.stats.space_exhausted;
    res.budget_exhausted = budget_left == 0;
    break;
  }
  return res;
}

AliceResult full_alice(const BitString& x, const SearchConfig& cfg) {
  AliceResult res;
  SearchCore root(x, cfg, /*recursive=*/true, {}, &res, 0);
  while (res.budget_used < cfg.budget && !root.exhausted()) {
    if (!root.step()) break;
  }
  res.space_exhausted = root.exhausted();
  res.root_stats = root.stats_snapshot();
  return res;
}

namespace {

boost::multiprecision::cpp_int predicted_budget_int(
    const std::vector<GreedyStep>& steps, Nat c) {
  boost::multiprecision::cpp_int total = 0;
  Nat len_sum = 0;
  for (std::size_t i = 1; i <= steps.size(); ++i) {
    const FeatureStep& st = steps[i - 1].step;
    len_sum += st.feature_wire.size() + st.encoder_wire.size();
    boost::multiprecision::cpp_int term =
        st.feature_steps + st.encoder_steps;
    term <<= static_cast<unsigned>(c * i + len_sum);
    total += term;
  }
  return total;
}

}  // namespace

std::string predicted_budget(const std::vector<GreedyStep>& steps, Nat c) {
  return predicted_budget_int(steps, c).str();
}

bool predicted_budget_covers(const std::vector<GreedyStep>& steps, Nat c,
                             Nat measured) {
  return predicted_budget_int(steps, c) >= measured;
}

}  // namespace alice
