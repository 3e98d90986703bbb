#include "alice/report.hpp"

namespace alice {

Json json_stats(const DovetailStats& s) {
  Json j;
  j["last_completed_phase"] = s.last_completed_phase;
  j["valid_steps"] = s.valid_steps;
  j["parse_charges"] = s.parse_charges;
  j["budget_charged"] = s.budget_charged();
  j["l_a_min"] = s.l_a_min;
  j["space_exhausted"] = s.space_exhausted;
  Json theta = Json::array();
  for (const Dyadic& d : s.theta) theta.push_back(d.str());
  j["theta"] = theta;
  if (s.audited_phases > 0) {
    j["audited_phases"] = s.audited_phases;
    j["audit_violations"] = s.audit_violations;
  }
  return j;
}

Json json_feature_step(const FeatureStep& f) {
  Json j;
  j["a_wire"] = f.a_wire.str();
  j["encoder_wire"] = f.encoder_wire.str();
  j["feature_wire"] = f.feature_wire.str();
  j["residual_bits"] = f.residual.size();
  j["residual"] = f.residual.str();
  j["encoder_steps"] = f.encoder_steps;
  j["feature_steps"] = f.feature_steps;
  j["phase_found"] = f.phase_found;
  return j;
}

Json json_greedy(const BitString& x, const GreedyResult& g,
                 const SearchConfig& cfg) {
  Json j;
  j["input_bits"] = x.size();
  j["scheme"] = cfg.scheme.name();
  j["budget"] = cfg.budget;
  j["budget_used"] = g.budget_used;
  j["budget_exhausted"] = g.budget_exhausted;
  j["space_exhausted"] = g.space_exhausted;
  j["early_stopped"] = g.early_stopped;
  j["depth"] = g.steps.size();
  Json steps = Json::array();
  for (const GreedyStep& s : g.steps) {
    Json e = json_feature_step(s.step);
    e["stats"] = json_stats(s.stats);
    steps.push_back(std::move(e));
  }
  j["steps"] = steps;
  j["final_residual_bits"] = g.residual.size();
  return j;
}

Json json_alice(const BitString& x, const AliceResult& a,
                const SearchConfig& cfg) {
  Json j;
  j["input_bits"] = x.size();
  j["budget"] = cfg.budget;
  j["budget_used"] = a.budget_used;
  j["space_exhausted"] = a.space_exhausted;
  j["searches_spawned"] = a.searches_spawned;
  j["max_depth"] = a.max_depth;
  Json ds = Json::array();
  for (const AliceDescription& d : a.descriptions) {
    Json e;
    e["depth"] = d.depth;
    Json feats = Json::array();
    for (const BitString& f : d.features) feats.push_back(f.str());
    e["features"] = feats;
    e["residual_bits"] = d.residual.size();
    e["found_at_unit"] = d.found_at_unit;
    ds.push_back(std::move(e));
  }
  j["descriptions"] = ds;
  return j;
}

Json json_description(const Description& d) {
  Json j;
  j["depth"] = d.depth;
  Json feats = Json::array();
  for (const BitString& f : d.features) feats.push_back(f.str());
  j["features"] = feats;
  j["residual_bits"] = d.residual.size();
  j["wire_bits"] = d.wire_length();
  return j;
}

Json json_awire(const std::optional<AwireResult>& r) {
  Json j;
  j["found"] = r.has_value();
  if (r) {
    j["a_wire"] = r->a_wire.str();
    j["phase"] = r->phase;
    j["steps"] = r->steps;
    j["residual_bits"] = r->residual.size();
  }
  return j;
}

Json json_complexity(const ComplexityResult& r) {
  Json j;
  j["value"] = r.value;
  j["exact"] = r.exact;
  if (r.witness) {
    j["program_wire"] = r.witness->program_wire.str();
    j["input"] = r.witness->input.str();
    j["steps"] = r.witness->steps;
  }
  return j;
}

Json json_power_bound(const PowerBoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["count_at_least"] = r.count_at_least;
  j["violated"] = r.violated;
  return j;
}

}  // namespace alice
