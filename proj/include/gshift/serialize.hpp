#pragma once

#include <string>

#include <json.hpp>

#include "gshift/literals.hpp"
#include "gshift/relations.hpp"
#include "gshift/topology.hpp"
#include "gshift/witnesses.hpp"

namespace gshift {

using Json = nlohmann::ordered_json;

inline Json to_json(const Verdict& v, RelationKind relation, SemigroupKind kind,
                    const Config& x, const Config& y) {
  Json j;
  j["relation"] = relation_name(relation);
  j["semigroup"] = semigroup_name(kind);
  j["x"] = print_config(x);
  j["y"] = print_config(y);
  j["value"] = v.value;
  j["method"] = v.method == Method::Oracle ? "oracle" : "decider";
  if (v.hint_beta) j["witness_hint"] = {{"agreement_index", *v.hint_beta}};
  if (v.hint_construction) j["witness_hint"] = {{"construction", *v.hint_construction}};
  return j;
}

inline Json to_json(const ConvergenceReport& r) {
  Json j;
  j["window"] = r.window;
  j["stabilization_index"] =
      r.stabilization_index ? static_cast<std::int64_t>(*r.stabilization_index) : -1;
  j["limit"] = r.limit_on_window;
  j["bound"] = r.checked_bound;
  return j;
}

inline Json to_json(const WitnessTrace& t) {
  Json j;
  j["construction"] = construction_name(t.construction);
  Json params = Json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  j["parameters"] = params;
  Json reports = Json::array();
  for (const auto& r : t.reports) {
    Json entry = to_json(r.report);
    entry["label"] = r.label;
    reports.push_back(entry);
  }
  j["reports"] = reports;
  Json checks = Json::array();
  for (const auto& c : t.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  j["claim"] = t.claim;
  j["valid"] = t.valid();
  return j;
}

inline Json to_json(const HarnessReport& r) {
  Json j;
  j["relation"] = relation_name(r.relation);
  j["semigroup"] = semigroup_name(r.semigroup);
  j["alphabet"] = r.alphabet->tokens();
  j["gamma"] = r.gamma;
  j["pairs_checked"] = r.pairs_checked;
  j["true_count"] = r.true_count;
  Json mism = Json::array();
  for (const auto& m : r.mismatches)
    mism.push_back({{"x", print_config(m.x)},
                    {"y", print_config(m.y)},
                    {"oracle", m.oracle},
                    {"decider", m.decider}});
  j["mismatches"] = mism;
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// One row per ordered pair, in enumeration order.
inline std::string to_csv(const HarnessReport& r) {
  std::string out = "x,y,oracle,decider,match\n";
  // mismatches carry full verdicts; matched rows are reconstructed by a
  // fresh sweep so the CSV stays a faithful pair-by-pair record
  detail::for_each_dense_config(r.alphabet, r.gamma, [&](const Config& x) {
    detail::for_each_dense_config(r.alphabet, r.gamma, [&](const Config& y) {
      const bool oracle = oracle_for(r.relation, r.semigroup, x, y).value;
      const bool decider = decide_for(r.relation, r.semigroup, x, y).value;
      out += detail::csv_field(print_config(x)) + "," + detail::csv_field(print_config(y)) +
             "," + (oracle ? "true" : "false") + "," + (decider ? "true" : "false") + "," +
             (oracle == decider ? "true" : "false") + "\n";
    });
  });
  return out;
}

}  // namespace gshift
