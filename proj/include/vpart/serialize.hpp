#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "vpart/decomposer.hpp"
#include "vpart/io.hpp"
#include "vpart/oracle.hpp"
#include "vpart/verifier.hpp"

namespace vpart::json {

using nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

inline std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline ordered_json to_json(const Witness& w) {
  ordered_json j;
  j["kind"] = w.kind;
  j["vertices"] = w.vertices;
  j["note"] = w.note;
  return j;
}

inline ordered_json to_json(const Potential& p) { return ordered_json::array({p.g_copies, p.comp_edges}); }

inline ordered_json report_body(const Report& r) {
  ordered_json j;
  j["kind"] = r.kind;
  j["passed"] = r.passed();
  auto& checks = j["checks"] = ordered_json::array();
  for (auto& c : r.checks) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["passed"] = c.passed;
    if (!c.passed) cj["witness"] = to_json(c.witness);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  return j;
}

/// Content hash of the report body; decompositions refer to reports by it.
inline std::string report_id(const Report& r) {
  const std::string body = report_body(r).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : body) h = (h ^ c) * 1099511628211ULL;
  return hex64(h);
}

inline ordered_json to_json(const Report& r) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["id"] = report_id(r);
  j.update(report_body(r));
  return j;
}

inline ordered_json trace_summary(const RefineResult& r, bool used_fallback) {
  ordered_json j;
  j["steps"] = r.trace.size();
  j["status"] = r.status == RefineStatus::Converged ? "converged" : "stalled";
  j["cap"] = r.cap;
  j["final_potential"] = to_json(r.final_potential);
  j["used_fallback"] = used_fallback;
  auto& steps = j["swaps"] = ordered_json::array();
  for (auto& s : r.trace) {
    ordered_json sj;
    sj["in"] = s.v_in;
    sj["out"] = s.y_out;
    sj["before"] = to_json(s.potential_before);
    sj["after"] = to_json(s.potential_after);
    steps.push_back(std::move(sj));
  }
  return j;
}

/// Versioned decomposition record.
inline ordered_json decomposition_record(const Graph& g, const Decomposition& d, const Report& r,
                                         ordered_json trace = ordered_json::object()) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["graph_hash"] = hex64(graph_hash(g));
  auto& parts = j["parts"] = ordered_json::array();
  for (auto& p : d.parts) parts.push_back(p.to_vector());
  j["trace"] = std::move(trace);
  j["report_id"] = report_id(r);
  return j;
}

inline ordered_json to_json(const oracle::ClaimParams& cp) {
  ordered_json j = ordered_json::object();
  if (!cp.ps.empty()) j["ps"] = cp.ps;
  else j["p"] = cp.p, j["q"] = cp.q;
  if (cp.spec) j["family"] = cp.spec->label();
  if (!cp.reading.empty()) j["reading"] = cp.reading;
  return j;
}

inline ordered_json to_json(const oracle::HuntRecord& r, bool timings = true) {
  ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["max_degree"] = r.max_degree;
  j["params"] = to_json(r.params);
  j["oracle"] = r.oracle_present ? ordered_json{{"present", true}, {"v1", r.oracle_v1}} : ordered_json{{"present", false}};
  j["engine"] = {{"verdict", r.engine}, {"stalled", r.engine_stalled}, {"v1", r.engine_v1}};
  if (timings) j["timings_ms"] = {{"oracle", r.oracle_ms}, {"engine", r.engine_ms}};
  return j;
}

inline ordered_json to_json(const oracle::HuntSummary& s) {
  ordered_json j;
  j["claim"] = s.claim;
  j["hosts"] = s.hosts;
  j["cells"] = s.cells;
  j["oracle_present"] = s.oracle_present;
  j["oracle_absent"] = s.oracle_absent;
  j["engine_verdicts"] = s.engine_verdicts;
  j["refine_stalls"] = s.refine_stalls;
  auto list = [](const std::vector<oracle::HuntRecord>& v) {
    ordered_json a = ordered_json::array();
    for (auto& r : v) a.push_back(to_json(r, false));
    return a;
  };
  j["counterexample_candidates"] = list(s.counterexample_candidates);
  j["engine_gaps"] = list(s.engine_gaps);
  j["negative_results"] = list(s.negative_results);
  return j;
}

}  // namespace vpart::json
