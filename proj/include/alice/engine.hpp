#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alice/bitstring.hpp"
#include "alice/vm.hpp"

namespace alice {

// Acceptance schemes. Plain requires the strict compression condition
// l(f.wire) + l(r) < l(x). The b variants additionally require
// l(r) * b_num <= l(x) * b_den with b = b_num/b_den > 1. The early variant
// also stops the greedy loop once the residual is short enough that a
// universal-feature step could no longer pay for itself.
struct Scheme {
  enum class Kind { Plain, BFeature, BFeatureEarly };
  Kind kind = Kind::Plain;
  Nat b_num = 1;
  Nat b_den = 1;

  static Scheme plain() { return {}; }
  static Scheme b_feature(Nat num, Nat den);
  static Scheme b_feature_early(Nat num, Nat den);
  std::string name() const;
};

// Autoencoder wire a = encoder.wire() ++ feature.wire(). The encoder is the
// descriptive map f' (x -> r), the feature f rebuilds x from r.
struct Autoencoder {
  Program encoder;
  Program feature;
};

// Strict parse: the wire must be exactly two program wires back to back.
std::optional<Autoencoder> parse_autoencoder(const BitString& wire);

bool accepts(const BitString& x, const BitString& y,
             std::size_t feature_wire_len, const BitString& r,
             const Scheme& scheme);

// Wire length of the one-opcode [EV] program, the cost constant of the
// universal feature.
std::size_t universal_feature_wire_length();

struct SearchConfig {
  Nat budget = 10'000'000;  // W-step budget, parse charges included
  Scheme scheme{};
  std::size_t max_a_len = 16;
  std::optional<Nat> node_step_cap;  // per-node fuel cap (oracle parity)
  bool audit = false;                // per-phase scheduler self-checks
};

// Dyadic rational num / 2^exp.
struct Dyadic {
  Nat num = 0;
  unsigned exp = 0;
  std::string str() const;
};

struct DovetailStats {
  Nat last_completed_phase = 0;
  Nat valid_steps = 0;    // W-steps executed on parseable wires
  Nat parse_charges = 0;  // 1 per unparseable bitstring touched
  Nat budget_charged() const { return valid_steps + parse_charges; }
  std::vector<Dyadic> theta;  // Kraft sum of parseable wires, per phase
  std::size_t l_a_min = 0;
  bool space_exhausted = false;
  Nat audited_phases = 0;
  std::vector<std::string> audit_violations;
  // Parseable wires that executed at least one step: (wire, steps).
  std::vector<std::pair<std::string, Nat>> per_node;
};

struct FeatureStep {
  BitString feature_wire;
  BitString encoder_wire;
  BitString a_wire;
  BitString residual;
  Nat feature_steps = 0;  // stage running f on r
  Nat encoder_steps = 0;  // stage running f' on x
  Nat phase_found = 0;
};

struct DovetailResult {
  std::optional<FeatureStep> step;
  DovetailStats stats;
  Nat consumed = 0;  // budget units used by this search
};

// One level of the search: dovetails every bitstring a with l(a) <= max_a_len
// as a candidate autoencoder wire, returning the first accepted feature under
// (phase, canonical order, intra-phase step) priority. A node first runs in
// phase i = l(a) with a single step and receives 2^(i-l(a)) fresh steps in
// each later phase, so its cumulative allotment after phase n is
// 2^(n-l(a)+1) - 1. Unparseable strings fail at a one-step charge. Returns
// with no step when the budget runs out or when every candidate has
// terminated (the instruction set is total, so this is reachable).
DovetailResult dovetail_search(const BitString& x, const SearchConfig& cfg,
                               Nat budget);

struct GreedyStep {
  FeatureStep step;
  DovetailStats stats;
};

struct GreedyResult {
  std::vector<GreedyStep> steps;  // outermost first
  BitString residual;             // r_s
  Nat budget_used = 0;
  bool budget_exhausted = false;
  bool space_exhausted = false;  // final search ran out of candidates
  bool early_stopped = false;    // b-early residual threshold reached
};

// Greedy feature chain: repeatedly dovetail, replace x by the residual,
// restart phases fresh, until no further feature is found.
GreedyResult greedy_alice(const BitString& x, const SearchConfig& cfg);

// One <s, r, features> acceptance record of the recursive search. Features
// are innermost first (the newest acceptance at the front).
struct AliceDescription {
  std::vector<BitString> features;
  BitString residual;
  Nat found_at_unit = 0;  // budget units consumed when this was recorded
  Nat depth = 0;          // == features.size()
};

struct AliceResult {
  std::vector<AliceDescription> descriptions;
  Nat budget_used = 0;
  bool space_exhausted = false;
  DovetailStats root_stats;
  Nat searches_spawned = 0;
  Nat max_depth = 0;
};

// Recursive tree search: every level dovetails its own candidate set; once a
// node's run is accepted, each further step granted to that node forwards
// exactly one step into a child search on the residual. Every acceptance
// anywhere in the tree appends a description record.
AliceResult full_alice(const BitString& x, const SearchConfig& cfg);

// Exact integer sum_i (t_i + t'_i) * 2^(c*i + sum_{k<=i} l(f_k)+l(f'_k))
// as a decimal string (arbitrary precision).
std::string predicted_budget(const std::vector<GreedyStep>& steps, Nat c);

// True when predicted_budget(steps, c) >= measured, for bench fitting.
bool predicted_budget_covers(const std::vector<GreedyStep>& steps, Nat c,
                             Nat measured);

}  // namespace alice
