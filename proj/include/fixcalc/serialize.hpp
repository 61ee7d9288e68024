#pragma once

// JSON shapes for reports. All top-level documents carry "schema": 1.

#include <json.hpp>

#include "fixcalc/arithmetic.hpp"
#include "fixcalc/duality.hpp"
#include "fixcalc/fixpoint.hpp"
#include "fixcalc/real_analysis.hpp"

namespace fixcalc {

inline nlohmann::json to_json(const Subset& s) { return s.to_string(); }

inline nlohmann::json to_json(const std::vector<Subset>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Subset& s : trace) arr.push_back(s.to_string());
  return arr;
}

inline nlohmann::json to_json(const FixpointReport& r) {
  return nlohmann::json{
      {"schema", 1},
      {"generator", r.generator_name},
      {"lfp", to_json(r.lfp)},
      {"gfp", to_json(r.gfp)},
      {"lfp_trace", to_json(r.lfp_trace)},
      {"gfp_trace", to_json(r.gfp_trace)},
      {"partition",
       {{"mu", to_json(r.partition.mu)},
        {"nu_minus_mu", to_json(r.partition.nu_minus_mu)},
        {"outside", to_json(r.partition.outside)}}},
  };
}

inline nlohmann::json to_json(const std::string& generator_name, const ClassificationTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [subset, cls] : t.rows) {
    classes.push_back({{"subset", subset.to_string()}, {"class", to_string(cls)}});
  }
  return nlohmann::json{
      {"schema", 1},
      {"generator", generator_name},
      {"classes", std::move(classes)},
      {"counts",
       {{"proper-pre-fixed", t.counts[static_cast<int>(PointClass::ProperPreFixed)]},
        {"proper-post-fixed", t.counts[static_cast<int>(PointClass::ProperPostFixed)]},
        {"fixed", t.counts[static_cast<int>(PointClass::Fixed)]},
        {"neither", t.counts[static_cast<int>(PointClass::Neither)]}}},
  };
}

inline nlohmann::json to_json(const DualityReport& r) {
  return nlohmann::json{
      {"schema", 1},
      {"generator", r.generator_name},
      {"gfp_direct", to_json(r.gfp_direct)},
      {"rejected", to_json(r.rejected)},
      {"gfp_via_duality", to_json(r.gfp_via_duality)},
      {"agrees", r.agrees},
  };
}

inline nlohmann::json to_json(const ClassCensus& c) {
  return nlohmann::json{
      {"schema", 1},
      {"limit", c.limit},
      {"deficient", c.deficient},
      {"perfect", c.perfect},
      {"abundant", c.abundant},
      {"perfect_numbers", c.perfect_numbers},
  };
}

inline const char* to_string(FixedPointResult::Method m) {
  switch (m) {
    case FixedPointResult::Method::Bisection: return "bisection";
    case FixedPointResult::Method::Newton: return "newton";
    case FixedPointResult::Method::Iteration: return "iteration";
  }
  return "?";
}

inline nlohmann::json to_json(const FixedPointResult& r) {
  nlohmann::json j{
      {"location", r.location},
      {"residual", r.residual},
      {"method", to_string(r.method)},
      {"iterations", r.iterations},
  };
  if (r.bracket) j["bracket"] = {r.bracket->first, r.bracket->second};
  return j;
}

inline nlohmann::json to_json(const FixedPointScan& scan) {
  nlohmann::json points = nlohmann::json::array();
  for (const FixedPointResult& p : scan.points) points.push_back(to_json(p));
  nlohmann::json intervals = nlohmann::json::array();
  for (const FixedInterval& iv : scan.intervals) intervals.push_back({iv.lo, iv.hi});
  return nlohmann::json{{"schema", 1}, {"points", std::move(points)},
                        {"intervals", std::move(intervals)}};
}

}  // namespace fixcalc
