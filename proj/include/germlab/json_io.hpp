#pragma once

// JSON views of every result type. Numbers stay exact: integers are emitted
// as JSON integers, rationals as canonical "a/b" strings, never as floats.
// nlohmann::json orders object keys, so serialization is deterministic; the
// only wall-clock dependent key is the top-level "timing" object, which
// consumers strip when comparing runs.

#include <json.hpp>

#include <string>

#include "germlab/catalog.hpp"
#include "germlab/map_germ.hpp"
#include "germlab/milnor.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

inline nlohmann::json to_json(const MilnorResult& r) {
  nlohmann::json j;
  switch (r.kind) {
    case MilnorResult::Kind::NotThroughOrigin: j["kind"] = "not_through_origin"; break;
    case MilnorResult::Kind::SmoothPoint: j["kind"] = "smooth_point"; break;
    case MilnorResult::Kind::Finite: j["kind"] = "finite"; break;
    case MilnorResult::Kind::NonIsolated: j["kind"] = "non_isolated"; break;
  }
  if (r.has_mu()) j["mu"] = r.mu;
  return j;
}

inline nlohmann::json to_json(const ReducedPreimage& rp) {
  return {{"pullback", rp.pullback.to_string()},
          {"h", rp.h.to_string()},
          {"r", rp.r},
          {"pure", rp.pure}};
}

inline nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["g_reduced"] = rep.g_reduced.to_string();
  if (rep.mu_v) j["mu_v"] = to_json(*rep.mu_v);
  if (rep.mu_w) j["mu_w"] = to_json(*rep.mu_w);
  if (rep.multiplicity) j["multiplicity"] = *rep.multiplicity;
  if (rep.preimage) j["preimage"] = to_json(*rep.preimage);
  j["inequality"] = to_string(rep.inequality);
  j["corollary"] = to_string(rep.corollary);
  if (rep.skip_reason != SkipReason::None) j["skip_reason"] = to_string(rep.skip_reason);
  return j;
}

inline nlohmann::json to_json(const SuiteConfig& cfg) {
  return {{"seed", cfg.seed},
          {"num_cases", cfg.num_cases},
          {"n", cfg.n},
          {"max_degree", cfg.max_degree},
          {"degree_cap", cfg.degree_cap},
          {"generated_germs", cfg.generated_germs},
          {"identity_maps", cfg.identity_maps}};
}

inline nlohmann::json to_json(const SuiteCase& c) {
  nlohmann::json j;
  j["index"] = c.index;
  j["case_seed"] = c.case_seed;
  j["germ_name"] = c.germ_name;
  if (c.germ) j["germ"] = c.germ->to_string();
  if (c.map) {
    nlohmann::json comps = nlohmann::json::array();
    for (const Polynomial& p : c.map->components()) comps.push_back(p.to_string());
    j["map"] = comps;
  }
  if (c.report) j["report"] = to_json(*c.report);
  j["classification"] = c.classification;
  return j;
}

inline nlohmann::json to_json(const SuiteCounters& c) {
  nlohmann::json skipped = nlohmann::json::object();
  for (const auto& [reason, count] : c.skipped) skipped[reason] = count;
  return {{"holds", c.holds},
          {"violated", c.violated},
          {"outside_hypotheses", c.outside_hypotheses},
          {"equality_cases", c.equality_cases},
          {"skipped", skipped},
          {"skipped_total", c.skipped_total()}};
}

// Deliberately excludes elapsed time; timing belongs to the document level.
inline nlohmann::json to_json(const SuiteReport& rep) {
  nlohmann::json cases = nlohmann::json::array();
  for (const SuiteCase& c : rep.cases) cases.push_back(to_json(c));
  return {{"config", to_json(rep.config)},
          {"counters", to_json(rep.counters)},
          {"cases", cases}};
}

inline nlohmann::json make_document(const std::string& command, nlohmann::json inputs,
                                    nlohmann::json result, double elapsed_seconds) {
  nlohmann::json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  doc["timing"] = {{"elapsed_seconds", elapsed_seconds}};
  return doc;
}

}  // namespace germlab
