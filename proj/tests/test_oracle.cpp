#include <doctest.h>

#include "alice/codec.hpp"
#include "alice/engine.hpp"
#include "alice/oracle.hpp"

using namespace alice;

namespace {

BitString rle_of_single_run(std::size_t n) {
  BitString r("1");
  r.append(e1_encode(nat_to_bits(static_cast<Nat>(n))));
  return r;
}

}  // namespace

TEST_CASE("complexity of the empty string is one bit") {
  ComplexityResult c = bounded_complexity(BitString(), OracleCaps{});
  CHECK(c.value == 1);
  CHECK(c.exact);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->program_wire == BitString("0"));
  CHECK(c.witness->input == BitString());
  CHECK(c.witness->steps == 0);
}

TEST_CASE("complexity goldens for tiny strings") {
  ComplexityResult zero = bounded_complexity(BitString("0"), OracleCaps{});
  CHECK(zero.value == 7);
  CHECK(zero.exact);
  REQUIRE(zero.witness.has_value());
  CHECK(zero.witness->program_wire == Program{{Op::W0}}.wire());
  CHECK(zero.witness->input == BitString());

  ComplexityResult ones = bounded_complexity(BitString("11"), OracleCaps{});
  CHECK(ones.value == 9);
  CHECK(ones.exact);
  REQUIRE(ones.witness.has_value());
  CHECK(ones.witness->program_wire == Program{{Op::CR}}.wire());
  CHECK(ones.witness->input == BitString("11"));
}

TEST_CASE("complexity falls back to the plain description when capped out") {
  BitString x = BitString::ones(20);
  ComplexityResult capped = bounded_complexity(x, OracleCaps{});  // pairs <= 16
  CHECK(capped.value == 30);  // one-level description: 1 + 9 + 20
  CHECK_FALSE(capped.exact);
  CHECK_FALSE(capped.witness.has_value());

  OracleCaps wide;
  wide.max_pair_len = 17;
  ComplexityResult found = bounded_complexity(x, wide);
  CHECK(found.value == 17);
  CHECK(found.exact);
  REQUIRE(found.witness.has_value());
  CHECK(found.witness->program_wire == Program{{Op::RLD}}.wire());
  CHECK(found.witness->input == rle_of_single_run(20));
}

TEST_CASE("raising caps never increases an exact complexity") {
  OracleCaps tight;
  tight.max_pair_len = 9;
  tight.step_cap = 4;
  OracleCaps wide;
  wide.max_pair_len = 14;
  wide.step_cap = 4096;
  for (const char* s : {"", "0", "1", "11"}) {
    ComplexityResult a = bounded_complexity(BitString(s), tight);
    ComplexityResult b = bounded_complexity(BitString(s), wide);
    REQUIRE(a.exact);
    REQUIRE(b.exact);
    CHECK(b.value <= a.value);
  }
}

TEST_CASE("greedy chains respect bounded subadditivity") {
  BitString x = BitString::ones(20);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  GreedyResult g = greedy_alice(x, cfg);
  REQUIRE(g.steps.size() == 1);

  OracleCaps caps;
  caps.max_pair_len = 17;
  ComplexityResult kx = bounded_complexity(x, caps);
  ComplexityResult kr = bounded_complexity(g.residual, caps);
  REQUIRE(kx.exact);
  REQUIRE(kr.exact);
  Nat feature_sum = 0;
  for (const GreedyStep& s : g.steps) feature_sum += s.step.feature_wire.size();
  CHECK(feature_sum + kr.value >= kx.value);
  CHECK(feature_sum == 7);
  CHECK(kr.value == 17);
  CHECK(kx.value == 17);
}

TEST_CASE("the replay oracle agrees with the scheduler") {
  SearchConfig cfg;
  cfg.max_a_len = 14;
  cfg.node_step_cap = 4096;
  for (const char* s : {"0", "0110", "11111111"}) {
    BitString x(s);
    auto replay = first_accepting_awire(x, 14, 4096, Scheme::plain());
    DovetailResult live = dovetail_search(x, cfg, cfg.budget);
    CHECK_FALSE(replay.has_value());
    CHECK_FALSE(live.step.has_value());
  }

  BitString x = BitString::ones(20);
  auto replay = first_accepting_awire(x, 14, 4096, Scheme::plain());
  DovetailResult live = dovetail_search(x, cfg, cfg.budget);
  REQUIRE(replay.has_value());
  REQUIRE(live.step.has_value());
  CHECK(replay->a_wire == live.step->a_wire);
  CHECK(replay->residual == live.step->residual);
  CHECK(replay->phase == live.step->phase_found);
  CHECK(replay->steps == live.step->encoder_steps + live.step->feature_steps);
  CHECK(replay->phase == 15);

  auto again = first_accepting_awire(x, 14, 4096, Scheme::plain());
  REQUIRE(again.has_value());
  CHECK(again->a_wire == replay->a_wire);
}

TEST_CASE("the minimal feature for a one-run string is the run-length decoder") {
  FeatureSearchResult f =
      shortest_bounded_features(BitString::ones(20), OracleCaps{},
                                Scheme::plain());
  CHECK(f.wire_length == 7);
  REQUIRE(f.wires.size() == 1);
  CHECK(f.wires[0] == Program{{Op::RLD}}.wire());
  CHECK(f.programs_tried == 17);

  FeatureSearchResult none =
      shortest_bounded_features(BitString("0110"), OracleCaps{},
                                Scheme::plain());
  CHECK(none.wires.empty());
  CHECK(none.wire_length == 0);
}

TEST_CASE("canonical printer scan") {
  SingleProgramResult zero = shortest_printer(BitString("0"), 16, 256, 100000);
  REQUIRE(zero.wire.has_value());
  CHECK(*zero.wire == Program{{Op::W0}}.wire());
  CHECK(zero.runs == 2);
  CHECK(zero.budget_used == 1);
  CHECK_FALSE(zero.budget_exhausted);

  SingleProgramResult pair = shortest_printer(BitString("10"), 16, 256, 100000);
  REQUIRE(pair.wire.has_value());
  CHECK(*pair.wire == Program{{Op::W1, Op::W0}}.wire());
  CHECK(pair.max_wire_len_reached == 11);

  SingleProgramResult starved = shortest_printer(BitString("10"), 16, 256, 3);
  CHECK_FALSE(starved.wire.has_value());
  CHECK(starved.budget_exhausted);
  CHECK(starved.budget_used == 3);

  SingleProgramResult empty = shortest_printer(BitString(), 16, 256, 100);
  REQUIRE(empty.wire.has_value());
  CHECK(*empty.wire == BitString("0"));
  CHECK(empty.runs == 1);
  CHECK(empty.budget_used == 0);
}
