#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "alice/bitstring.hpp"

namespace alice {

// 4-bit opcodes, written MSB-first on the wire.
enum class Op : std::uint8_t {
  W0 = 0x0,   // append 0 to output
  W1 = 0x1,   // append 1 to output
  RB = 0x2,   // copy one input bit to output
  RN = 0x3,   // read 1^k 0 from input, A := k
  WN = 0x4,   // append 1^A 0
  RNB = 0x5,  // read e1-framed nat into A
  WNB = 0x6,  // append e1_encode(nat_to_bits(A))
  LP = 0x7,   // loop begin, repetition count = A at entry
  EP = 0x8,   // loop end
  CR = 0x9,   // copy all remaining input to output
  INC = 0xA,  // A := A + 1
  DEC = 0xB,  // A := max(A - 1, 0)
  EV = 0xC,   // parse one e2-framed program from input, run it inline
  RLE = 0xD,  // run-length encode all remaining input
  RLD = 0xE,  // run-length decode all remaining input
  RSV = 0xF,  // reserved: parses, fails when executed
};

struct MalformedProgram : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A program is a flat opcode list. The wire format is
// e1_encode(nat_to_bits(opcode_count)) followed by 4 bits per opcode, which
// makes the set of program wires prefix-free with Kraft sum exactly 1.
struct Program {
  std::vector<Op> ops;

  BitString wire() const;
  std::size_t wire_length() const;
  bool empty() const { return ops.empty(); }
};

// Cursor-based parser; nullopt if the envelope or body is truncated or the
// count does not fit a Nat. On success *pos moves past the wire.
std::optional<Program> try_parse_program(const BitString& s, std::size_t* pos);

// Parses one program from the front of `bits`, returning it with the
// unconsumed remainder. Throws MalformedProgram.
std::pair<Program, BitString> parse_program(const BitString& bits);

enum class FailReason {
  InputExhausted,  // a read ran past the end of input
  BadLoop,         // EP without LP, or LP without a matching EP
  Reserved,        // opcode 0xF executed
  Malformed,       // EV payload is not exactly one program wire
  Overflow,        // a decoded nat does not fit 63 bits, or A overflowed
  OutputLimit,     // appended output exceeded the per-run cap
};

const char* fail_reason_name(FailReason r);

// Resource cap on appended output per run: 2^23 bits (1 MiB packed). A single
// opcode can append A+1 bits, so an explicit cap is needed for adversarial
// inputs.
inline constexpr std::size_t kDefaultOutputLimit = std::size_t{1} << 23;

// Resumable interpreter state. EV runs nested programs on a frame stack that
// shares the input cursor, output tape, fuel and step counter with the outer
// program; registers and loop stacks are per-frame.
class VmState {
 public:
  VmState(const Program& program, BitString input,
          std::size_t output_limit = kDefaultOutputLimit);

  bool running() const { return !halted_ && !failed_; }
  bool halted() const { return halted_; }
  bool failed() const { return failed_; }
  FailReason fail_reason() const { return reason_; }

  // Executes exactly one opcode (cost 1 step). Precondition: running().
  void step();

  Nat steps_used() const { return steps_; }
  const BitString& output() const { return output_; }
  std::size_t input_cursor() const { return cursor_; }
  const BitString& input() const { return input_; }

 private:
  struct Frame {
    std::vector<Op> ops;
    std::size_t pc = 0;
    Nat acc = 0;  // register A
    Nat aux = 0;  // register B, reserved
    std::vector<std::pair<std::size_t, Nat>> loops;  // (body start, remaining)
  };

  void settle();
  void fail(FailReason r);
  bool append_guard(std::size_t extra);

  BitString input_;
  std::size_t cursor_ = 0;
  BitString output_;
  std::vector<Frame> frames_;
  Nat steps_ = 0;
  bool halted_ = false;
  bool failed_ = false;
  FailReason reason_ = FailReason::InputExhausted;
  std::size_t output_limit_;
};

struct RunOutcome {
  enum class Kind { Halted, Failed, OutOfFuel };
  Kind kind;
  BitString output;                // Halted
  FailReason reason;               // Failed
  Nat steps = 0;                   // steps executed in all cases
  std::optional<VmState> state;    // OutOfFuel: resumable snapshot

  bool halted() const { return kind == Kind::Halted; }
};

// Runs `program` on `input` for at most `fuel` opcode executions.
RunOutcome run(const Program& program, const BitString& input, Nat fuel,
               std::size_t output_limit = kDefaultOutputLimit);

// Resumes a suspended state for at most `fuel` further steps.
RunOutcome resume(VmState state, Nat fuel);

}  // namespace alice
