#pragma once

#include <json.hpp>

#include "alice/descriptor.hpp"
#include "alice/engine.hpp"
#include "alice/mltest.hpp"
#include "alice/oracle.hpp"

namespace alice {

using Json = nlohmann::ordered_json;

Json json_stats(const DovetailStats& s);
Json json_feature_step(const FeatureStep& f);
Json json_greedy(const BitString& x, const GreedyResult& g,
                 const SearchConfig& cfg);
Json json_alice(const BitString& x, const AliceResult& a,
                const SearchConfig& cfg);
Json json_description(const Description& d);
Json json_awire(const std::optional<AwireResult>& r);
Json json_complexity(const ComplexityResult& r);
Json json_power_bound(const PowerBoundReport& r);

}  // namespace alice
