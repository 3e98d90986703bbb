#include <doctest.h>

#include "alice/codec.hpp"
#include "alice/engine.hpp"

using namespace alice;

namespace {

BitString rle_rld_wire() {
  return Program{{Op::RLE}}.wire() + Program{{Op::RLD}}.wire();
}

BitString ones_zeros(std::size_t a, std::size_t b) {
  return BitString::ones(a) + BitString::zeros(b);
}

}  // namespace

TEST_CASE("autoencoder wires hold exactly two programs") {
  auto both_empty = parse_autoencoder(BitString("00"));
  REQUIRE(both_empty.has_value());
  CHECK(both_empty->encoder.ops.empty());
  CHECK(both_empty->feature.ops.empty());

  auto pair = parse_autoencoder(rle_rld_wire());
  REQUIRE(pair.has_value());
  CHECK(pair->encoder.ops == std::vector<Op>{Op::RLE});
  CHECK(pair->feature.ops == std::vector<Op>{Op::RLD});

  CHECK_FALSE(parse_autoencoder(BitString("0")).has_value());
  CHECK_FALSE(parse_autoencoder(BitString("000")).has_value());
  CHECK_FALSE(parse_autoencoder(rle_rld_wire() + BitString("1")).has_value());
}

TEST_CASE("acceptance test") {
  BitString x = ones_zeros(16, 4);
  BitString r("110011");
  CHECK(accepts(x, x, 7, r, Scheme::plain()));
  CHECK_FALSE(accepts(x, ones_zeros(16, 3), 7, r, Scheme::plain()));
  CHECK_FALSE(accepts(x, x, 14, r, Scheme::plain()));  // 14 + 6 == 20
  CHECK(accepts(x, x, 13, r, Scheme::plain()));
  // residual bound: 6 * 4 <= 20 * 1 fails, 6 * 2 <= 20 * 1 fails, 6*3 <= 20*2 holds
  CHECK_FALSE(accepts(x, x, 7, r, Scheme::b_feature(4, 1)));
  CHECK(accepts(x, x, 7, r, Scheme::b_feature(3, 2)));
  CHECK(universal_feature_wire_length() == 7);
  CHECK_THROWS_AS(Scheme::b_feature(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Scheme::b_feature(2, 0), std::invalid_argument);
  CHECK(Scheme::plain().name() == "plain");
  CHECK(Scheme::b_feature(2, 1).name() == "b:2/1");
}

TEST_CASE("dyadic rendering") {
  CHECK(Dyadic{0, 0}.str() == "0");
  CHECK(Dyadic{3, 0}.str() == "3");
  CHECK(Dyadic{1, 2}.str() == "1/4");
  CHECK(Dyadic{33, 6}.str() == "33/64");
}

TEST_CASE("dovetail finds the run-length pair on a long two-run string") {
  BitString x = ones_zeros(200, 50);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  DovetailResult r = dovetail_search(x, cfg, cfg.budget);
  REQUIRE(r.step.has_value());
  CHECK(r.step->a_wire == rle_rld_wire());
  CHECK(r.step->encoder_wire == Program{{Op::RLE}}.wire());
  CHECK(r.step->feature_wire == Program{{Op::RLD}}.wire());
  CHECK(r.step->phase_found == 15);
  CHECK(r.step->encoder_steps == 1);
  CHECK(r.step->feature_steps == 1);
  CHECK(r.step->residual.size() == 27);
  CHECK(r.consumed == r.stats.budget_charged());
  CHECK(r.consumed < 100000);
  CHECK(r.stats.l_a_min == 2);
  REQUIRE(r.stats.theta.size() == 14);
  CHECK(r.stats.theta[0].str() == "0");
  CHECK(r.stats.theta[1].str() == "1/4");
  CHECK(r.stats.theta.back().str() == "33/64");

  DovetailResult again = dovetail_search(x, cfg, cfg.budget);
  CHECK(again.consumed == r.consumed);
  REQUIRE(again.step.has_value());
  CHECK(again.step->a_wire == r.step->a_wire);
}

TEST_CASE("audited schedule shows no deviations") {
  BitString x = ones_zeros(200, 50);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  cfg.audit = true;
  DovetailResult r = dovetail_search(x, cfg, cfg.budget);
  CHECK(r.step.has_value());
  CHECK(r.stats.audited_phases == 14);
  CHECK(r.stats.audit_violations.empty());
}

TEST_CASE("per-candidate step caps censor long runs") {
  BitString x = ones_zeros(200, 50);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  cfg.node_step_cap = 1;  // the winning pair needs 2 steps
  DovetailResult r = dovetail_search(x, cfg, cfg.budget);
  CHECK_FALSE(r.step.has_value());
  CHECK(r.stats.space_exhausted);

  cfg.node_step_cap = 2;
  DovetailResult r2 = dovetail_search(x, cfg, cfg.budget);
  REQUIRE(r2.step.has_value());
  CHECK(r2.step->a_wire == rle_rld_wire());
}

TEST_CASE("a tight budget stops the search without exhausting it") {
  BitString x = ones_zeros(200, 50);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  DovetailResult r = dovetail_search(x, cfg, 100);
  CHECK(r.consumed == 100);
  CHECK_FALSE(r.step.has_value());
  CHECK_FALSE(r.stats.space_exhausted);
}

TEST_CASE("short or empty inputs exhaust the space with no acceptance") {
  SearchConfig cfg;
  cfg.max_a_len = 10;
  for (const char* s : {"", "0", "1", "0110"}) {
    DovetailResult r = dovetail_search(BitString(s), cfg, cfg.budget);
    CHECK_FALSE(r.step.has_value());
    CHECK(r.stats.space_exhausted);
  }
}

TEST_CASE("greedy chain on a two-run string stops after one step") {
  BitString x = ones_zeros(200, 50);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  GreedyResult g = greedy_alice(x, cfg);
  REQUIRE(g.steps.size() == 1);
  CHECK(g.steps[0].step.feature_wire == Program{{Op::RLD}}.wire());
  CHECK(g.residual.size() == 27);
  CHECK(g.space_exhausted);
  CHECK_FALSE(g.budget_exhausted);
  CHECK_FALSE(g.early_stopped);
  CHECK(g.budget_used < 1000000);
}

TEST_CASE("ratio schemes gate acceptance by residual size") {
  // 1^19: the run-length residual is 10 bits; 10*2 > 19 blocks it at b=2.
  SearchConfig plain_cfg;
  plain_cfg.max_a_len = 14;
  GreedyResult plain = greedy_alice(BitString::ones(19), plain_cfg);
  CHECK(plain.steps.size() == 1);

  SearchConfig b_cfg = plain_cfg;
  b_cfg.scheme = Scheme::b_feature(2, 1);
  GreedyResult halved = greedy_alice(BitString::ones(19), b_cfg);
  CHECK(halved.steps.empty());

  // 1^20: 10*2 <= 20, so b=2 admits the same step.
  GreedyResult ok = greedy_alice(BitString::ones(20), b_cfg);
  CHECK(ok.steps.size() == 1);
}

TEST_CASE("early stopping fires once the residual is near the floor") {
  BitString x = ones_zeros(200, 50);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  cfg.scheme = Scheme::b_feature_early(4, 3);
  GreedyResult g = greedy_alice(x, cfg);
  // 250*(4-3) > 7*4 lets the first search run; 27*(4-3) <= 28 stops the next.
  CHECK(g.steps.size() == 1);
  CHECK(g.early_stopped);

  SearchConfig no_early = cfg;
  no_early.scheme = Scheme::b_feature(4, 3);
  GreedyResult g2 = greedy_alice(x, no_early);
  CHECK(g2.steps.size() == 1);
  CHECK_FALSE(g2.early_stopped);
  CHECK(g2.space_exhausted);
}

TEST_CASE("recursive search records descriptions and forwards into children") {
  BitString x = ones_zeros(60, 20);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  cfg.budget = 3'000'000;
  AliceResult a = full_alice(x, cfg);
  REQUIRE(a.descriptions.size() == 1);
  const AliceDescription& d = a.descriptions[0];
  CHECK(d.depth == 1);
  REQUIRE(d.features.size() == 1);
  CHECK(d.features[0] == Program{{Op::RLD}}.wire());
  CHECK(d.residual.size() == 21);
  CHECK(d.found_at_unit <= a.budget_used);
  CHECK(a.searches_spawned == 2);
  CHECK(a.max_depth == 1);
  CHECK(a.space_exhausted);
  CHECK(a.budget_used <= cfg.budget);
}

TEST_CASE("predicted budget grows by shift amounts") {
  BitString x = ones_zeros(200, 50);
  SearchConfig cfg;
  cfg.max_a_len = 14;
  DovetailResult r = dovetail_search(x, cfg, cfg.budget);
  REQUIRE(r.step.has_value());
  std::vector<GreedyStep> steps;
  steps.push_back(GreedyStep{*r.step, r.stats});
  // one step, 2 VM steps, wires 7+7: 2 << (c*1 + 14)
  CHECK(predicted_budget(steps, 1) == "65536");
  CHECK(predicted_budget(steps, 2) == "131072");
  CHECK(predicted_budget_covers(steps, 1, 65536));
  CHECK_FALSE(predicted_budget_covers(steps, 1, 65537));
  CHECK(predicted_budget_covers(steps, 1, r.consumed));
}
