#include "alice/vm.hpp"

#include <cassert>

#include "alice/codec.hpp"

namespace alice {

BitString Program::wire() const {
  BitString s = e1_encode(nat_to_bits(static_cast<Nat>(ops.size())));
  for (Op op : ops) {
    auto v = static_cast<std::uint8_t>(op);
    s.push_back((v >> 3) & 1);
    s.push_back((v >> 2) & 1);
    s.push_back((v >> 1) & 1);
    s.push_back(v & 1);
  }
  return s;
}

std::size_t Program::wire_length() const {
  return 2 * nat_to_bits(static_cast<Nat>(ops.size())).size() + 1 +
         4 * ops.size();
}

std::optional<Program> try_parse_program(const BitString& s, std::size_t* pos) {
  std::size_t p = *pos;
  auto count_bits = try_e1_decode(s, &p);
  if (!count_bits) return std::nullopt;
  Nat count = 0;
  if (!try_bits_to_nat(*count_bits, &count)) return std::nullopt;
  if (count > (s.size() - p) / 4) return std::nullopt;
  Program prog;
  prog.ops.reserve(static_cast<std::size_t>(count));
  for (Nat i = 0; i < count; ++i) {
    std::uint8_t v = 0;
    for (int b = 0; b < 4; ++b) v = static_cast<std::uint8_t>((v << 1) | s.at(p + b));
    p += 4;
    prog.ops.push_back(static_cast<Op>(v));
  }
  *pos = p;
  return prog;
}

std::pair<Program, BitString> parse_program(const BitString& bits) {
  std::size_t pos = 0;
  auto prog = try_parse_program(bits, &pos);
  if (!prog) throw MalformedProgram("parse_program: truncated envelope or body");
  return {*prog, bits.slice(pos, bits.size() - pos)};
}

const char* fail_reason_name(FailReason r) {
  switch (r) {
    case FailReason::InputExhausted: return "InputExhausted";
    case FailReason::BadLoop: return "BadLoop";
    case FailReason::Reserved: return "Reserved";
    case FailReason::Malformed: return "Malformed";
    case FailReason::Overflow: return "Overflow";
    case FailReason::OutputLimit: return "OutputLimit";
  }
  return "?";
}

VmState::VmState(const Program& program, BitString input,
                 std::size_t output_limit)
    : input_(std::move(input)), output_limit_(output_limit) {
  frames_.push_back(Frame{program.ops, 0, 0, 0, {}});
  settle();
}

void VmState::fail(FailReason r) {
  failed_ = true;
  reason_ = r;
}

bool VmState::append_guard(std::size_t extra) {
  if (extra > output_limit_ || output_.size() > output_limit_ - extra) {
    fail(FailReason::OutputLimit);
    return false;
  }
  return true;
}

// Pops frames whose pc has passed the last opcode. Costs no steps. A frame
// abandoned with an open loop is an unmatched LP.
void VmState::settle() {
  while (!frames_.empty() && frames_.back().pc == frames_.back().ops.size()) {
    if (!frames_.back().loops.empty()) {
      fail(FailReason::BadLoop);
      return;
    }
    frames_.pop_back();
  }
  if (frames_.empty()) halted_ = true;
}

void VmState::step() {
  assert(running());
  Frame& f = frames_.back();
  Op op = f.ops[f.pc];
  ++steps_;
  switch (op) {
    case Op::W0:
      if (!append_guard(1)) return;
      output_.push_back(0);
      ++f.pc;
      break;
    case Op::W1:
      if (!append_guard(1)) return;
      output_.push_back(1);
      ++f.pc;
      break;
    case Op::RB:
      if (cursor_ >= input_.size()) return fail(FailReason::InputExhausted);
      if (!append_guard(1)) return;
      output_.push_back(input_.at(cursor_++));
      ++f.pc;
      break;
    case Op::RN: {
      Nat k = 0;
      while (cursor_ < input_.size() && input_.at(cursor_) == 1) {
        ++k;
        ++cursor_;
      }
      if (cursor_ >= input_.size()) return fail(FailReason::InputExhausted);
      ++cursor_;  // the terminating 0
      f.acc = k;
      ++f.pc;
      break;
    }
    case Op::WN: {
      if (f.acc > output_limit_) return fail(FailReason::OutputLimit);
      auto n = static_cast<std::size_t>(f.acc);
      if (!append_guard(n + 1)) return;
      output_.append_run(1, n);
      output_.push_back(0);
      ++f.pc;
      break;
    }
    case Op::RNB: {
      auto payload = try_e1_decode(input_, &cursor_);
      if (!payload) return fail(FailReason::InputExhausted);
      Nat v = 0;
      if (!try_bits_to_nat(*payload, &v)) return fail(FailReason::Overflow);
      f.acc = v;
      ++f.pc;
      break;
    }
    case Op::WNB: {
      BitString code = e1_encode(nat_to_bits(f.acc));
      if (!append_guard(code.size())) return;
      output_.append(code);
      ++f.pc;
      break;
    }
    case Op::LP: {
      if (f.acc == 0) {
        std::size_t depth = 1;
        std::size_t j = f.pc + 1;
        for (; j < f.ops.size(); ++j) {
          if (f.ops[j] == Op::LP) ++depth;
          if (f.ops[j] == Op::EP && --depth == 0) break;
        }
        if (depth != 0) return fail(FailReason::BadLoop);
        f.pc = j + 1;
      } else {
        f.loops.emplace_back(f.pc + 1, f.acc);
        ++f.pc;
      }
      break;
    }
    case Op::EP: {
      if (f.loops.empty()) return fail(FailReason::BadLoop);
      auto& [body, remaining] = f.loops.back();
      if (--remaining == 0) {
        f.loops.pop_back();
        ++f.pc;
      } else {
        f.pc = body;
      }
      break;
    }
    case Op::CR: {
      std::size_t n = input_.size() - cursor_;
      if (!append_guard(n)) return;
      output_.append(input_.slice(cursor_, n));
      cursor_ = input_.size();
      ++f.pc;
      break;
    }
    case Op::INC:
      if (f.acc == ~Nat{0}) return fail(FailReason::Overflow);
      ++f.acc;
      ++f.pc;
      break;
    case Op::DEC:
      if (f.acc > 0) --f.acc;
      ++f.pc;
      break;
    case Op::EV: {
      auto payload = try_e2_decode(input_, &cursor_);
      if (!payload) return fail(FailReason::InputExhausted);
      std::size_t ppos = 0;
      auto inner = try_parse_program(*payload, &ppos);
      if (!inner || ppos != payload->size()) return fail(FailReason::Malformed);
      ++f.pc;  // resume after EV once the inner frame pops
      frames_.push_back(Frame{inner->ops, 0, 0, 0, {}});
      break;
    }
    case Op::RLE: {
      if (cursor_ < input_.size()) {
        if (!append_guard(1)) return;
        int polarity = input_.at(cursor_);
        output_.push_back(polarity);
        while (cursor_ < input_.size()) {
          int bit = input_.at(cursor_);
          Nat len = 0;
          while (cursor_ < input_.size() && input_.at(cursor_) == bit) {
            ++len;
            ++cursor_;
          }
          BitString code = e1_encode(nat_to_bits(len));
          if (!append_guard(code.size())) return;
          output_.append(code);
        }
      }
      ++f.pc;
      break;
    }
    case Op::RLD: {
      if (cursor_ < input_.size()) {
        int bit = input_.at(cursor_++);
        while (cursor_ < input_.size()) {
          auto payload = try_e1_decode(input_, &cursor_);
          if (!payload) return fail(FailReason::InputExhausted);
          Nat len = 0;
          if (!try_bits_to_nat(*payload, &len)) return fail(FailReason::Overflow);
          if (len > output_limit_) return fail(FailReason::OutputLimit);
          if (!append_guard(static_cast<std::size_t>(len))) return;
          output_.append_run(bit, static_cast<std::size_t>(len));
          bit ^= 1;
        }
      }
      ++f.pc;
      break;
    }
    case Op::RSV:
      return fail(FailReason::Reserved);
  }
  settle();
}

RunOutcome run(const Program& program, const BitString& input, Nat fuel,
               std::size_t output_limit) {
  return resume(VmState(program, input, output_limit), fuel);
}

RunOutcome resume(VmState state, Nat fuel) {
  Nat start = state.steps_used();
  while (state.running() && state.steps_used() - start < fuel) state.step();
  RunOutcome out;
  out.steps = state.steps_used();
  if (state.halted()) {
    out.kind = RunOutcome::Kind::Halted;
    out.output = state.output();
  } else if (state.failed()) {
    out.kind = RunOutcome::Kind::Failed;
    out.reason = state.fail_reason();
  } else {
    out.kind = RunOutcome::Kind::OutOfFuel;
    out.state = std::move(state);
  }
  return out;
}

}  // namespace alice
