#pragma once

#include <optional>
#include <vector>

#include "alice/bitstring.hpp"
#include "alice/engine.hpp"
#include "alice/vm.hpp"

namespace alice {

struct OracleCaps {
  std::size_t max_pair_len = 16;
  Nat step_cap = Nat{1} << 12;
};

// Replays the dovetail outcome without running the scheduler. Every parseable
// wire up to the length cap is run to completion (censored at step_cap); a
// run accepted after t steps becomes chargeable at phase
// l(a) + max(0, ceil_log2(t + 1) - 1), and the winner is the least
// (phase, canonical index). Censoring is sound for winners whose phase is
// below l_min + log2(step_cap), since a censored run cannot be charged
// earlier than that.
struct AwireResult {
  BitString a_wire;
  Nat phase = 0;
  Nat steps = 0;
  BitString residual;
};
std::optional<AwireResult> first_accepting_awire(const BitString& x,
                                                 std::size_t max_a_len,
                                                 Nat step_cap,
                                                 const Scheme& scheme);

struct PairWitness {
  BitString program_wire;
  BitString input;
  Nat steps = 0;
};

// Least l(p) + l(r) over pairs where program p halts on input r with output
// x, within the caps. Falls back to the one-level description length of x
// when nothing qualifies.
struct ComplexityResult {
  Nat value = 0;
  bool exact = false;
  std::optional<PairWitness> witness;
};
ComplexityResult bounded_complexity(const BitString& x, const OracleCaps& caps);

// All minimal-length feature wires that reproduce x from some residual short
// enough to pass the acceptance test.
struct FeatureSearchResult {
  std::size_t wire_length = 0;
  std::vector<BitString> wires;
  Nat programs_tried = 0;
};
FeatureSearchResult shortest_bounded_features(const BitString& x,
                                              const OracleCaps& caps,
                                              const Scheme& scheme);

// Canonical-order scan over single programs run on empty input, looking for
// the shortest one that prints x. The budget counts VM steps across all runs;
// hitting it censors the scan.
struct SingleProgramResult {
  std::optional<BitString> wire;
  Nat runs = 0;
  Nat budget_used = 0;
  bool budget_exhausted = false;
  std::size_t max_wire_len_reached = 0;
};
SingleProgramResult shortest_printer(const BitString& x,
                                     std::size_t max_wire_len, Nat step_cap,
                                     Nat budget);

}  // namespace alice
