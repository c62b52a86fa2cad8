// Copyright 2026 The strongclique Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Per-graph analysis reports and their JSON form.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strongclique/line_analysis.hpp"
#include "strongclique/oracles.hpp"
#include "strongclique/predicates.hpp"
#include "strongclique/recognizers.hpp"

namespace strongclique {

using Json = nlohmann::ordered_json;

enum class Method { auto_select, oracle, triangle_free, c4_free, cubic, line, undecided };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::auto_select: return "auto";
    case Method::oracle: return "oracle";
    case Method::triangle_free: return "triangle-free";
    case Method::c4_free: return "c4-free";
    case Method::cubic: return "cubic";
    case Method::line: return "line-theorem";
    case Method::undecided: return "undecided";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  for (Method m : {Method::auto_select, Method::oracle, Method::triangle_free, Method::c4_free, Method::cubic,
                   Method::line})
    if (s == to_string(m)) return m;
  if (s == "line") return Method::line;
  throw InputError("unknown method \"" + s + "\"");
}

inline Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

inline Json to_json(const EdgeSet& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline Json to_json(const CliquePartition& p) {
  Json out = Json::array();
  for (const VertexSet& part : p.parts) out.push_back(to_json(part));
  return out;
}

inline Json to_json(const Witness& w) {
  return std::visit(
      [](const auto& value) -> Json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, VertexSet>) return {{"kind", "maximal_independent_set"}, {"value", to_json(value)}};
        else if constexpr (std::is_same_v<T, EdgeSet>) return {{"kind", "maximal_matching"}, {"value", to_json(value)}};
        else return {{"kind", "bull"}, {"value", Json(std::vector<Vertex>(value.begin(), value.end()))}};
      },
      w);
}

struct ReportOptions {
  Method method = Method::auto_select;
  bool chi_prime = false;
  OracleConfig oracle = OracleConfig::from_env();
};

/// Everything `analyze` prints for one graph.
struct AnalysisReport {
  std::string input_id;
  int n = 0;
  int m = 0;
  std::optional<InvariantRecord> invariants;
  std::string invariants_reason;
  std::optional<bool> well_covered, very_well_covered, co_well_covered, semi_perfect, localizable;
  bool triangle_free = false, c4_free = false, bipartite = false;
  std::optional<int> regular_k;
  std::optional<CliquePartition> certificate;
  Json witnesses = Json::array();
  Method method = Method::undecided;
  std::string reason;

  bool decided() const { return localizable.has_value(); }
};

namespace detail {

inline bool is_line_graph(const Graph& g) {
  for (const VertexSet& comp : components(g))
    if (root_graph(induced_subgraph(g, comp).graph).empty()) return false;
  return true;
}

inline Json refutation_json(const Refutation& r) {
  Json j{{"name", "localizable"}, {"kind", "refutation"}, {"reason", r.reason}};
  if (r.idom) j["idom"] = *r.idom;
  if (r.theta) j["theta"] = *r.theta;
  if (r.clique) j["clique"] = to_json(*r.clique);
  if (r.independent_set) j["independent_set"] = to_json(*r.independent_set);
  if (r.vertex) j["vertex"] = *r.vertex;
  return j;
}

/// Picks the recognizer for `auto`: the first class the graph belongs to.
inline Method select_method(const AnalysisReport& r, const Graph& g, const OracleConfig& cfg) {
  if (r.triangle_free) return Method::triangle_free;
  if (r.regular_k == 3) return Method::cubic;
  if (r.c4_free) return Method::c4_free;
  if (is_line_graph(g)) return Method::line;
  if (g.order() <= cfg.max_vertices) return Method::oracle;
  return Method::undecided;
}

inline LocalizabilityVerdict run_method(Method m, const Graph& g, const OracleConfig& cfg) {
  switch (m) {
    case Method::oracle: return is_localizable_oracle(g, cfg);
    case Method::triangle_free: return is_localizable_triangle_free(g);
    case Method::c4_free: return is_localizable_c4_free(g);
    case Method::cubic: return is_localizable_cubic(g);
    case Method::line: return is_localizable_line(g);
    default: throw std::logic_error("no recognizer for this method");
  }
}

}  // namespace detail

/// Computes the full report. Exponential parts run only under the oracle
/// cap; the localizability verdict may still come from a polynomial
/// recognizer above it.
inline AnalysisReport analyze(const Graph& g, std::string input_id, const ReportOptions& opt = {}) {
  AnalysisReport r;
  r.input_id = std::move(input_id);
  r.n = g.order();
  r.m = g.edge_count();
  r.triangle_free = is_triangle_free(g);
  r.c4_free = is_c4_free(g);
  r.bipartite = is_bipartite(g);
  r.regular_k = regular_degree(g);
  const OracleConfig& cfg = opt.oracle;

  if (g.order() <= cfg.max_vertices) {
    r.invariants = invariants(g, false, cfg);
    if (opt.chi_prime) {
      if (g.edge_count() <= cfg.max_vertices) r.invariants->chi_prime = chromatic_index(g);
      else r.invariants_reason = "chromatic index skipped: edge count exceeds the oracle cap";
    }
    const CoverVerdict wc = is_well_covered(g, cfg);
    r.well_covered = wc.holds;
    if (wc.witness)
      r.witnesses.push_back({{"name", "well_covered"},
                             {"kind", "maximal_independent_sets"},
                             {"value", {to_json(wc.witness->first), to_json(wc.witness->second)}}});
    const CoverVerdict cwc = is_co_well_covered(g, cfg);
    r.co_well_covered = cwc.holds;
    if (cwc.witness)
      r.witnesses.push_back({{"name", "co_well_covered"},
                             {"kind", "maximal_cliques"},
                             {"value", {to_json(cwc.witness->first), to_json(cwc.witness->second)}}});
    r.very_well_covered = is_very_well_covered(g, cfg);
    r.semi_perfect = r.invariants->theta == r.invariants->alpha;
  } else {
    r.invariants_reason = "order " + std::to_string(g.order()) + " exceeds the oracle cap " +
                          std::to_string(cfg.max_vertices);
  }

  Method m = opt.method == Method::auto_select ? detail::select_method(r, g, cfg) : opt.method;
  if (m == Method::oracle && g.order() > cfg.max_vertices) m = Method::undecided;
  r.method = m;
  if (m == Method::undecided) {
    r.reason = "no polynomial recognizer applies and the graph exceeds the oracle cap";
    return r;
  }
  const LocalizabilityVerdict v = detail::run_method(m, g, cfg);
  r.localizable = v.localizable;
  r.certificate = v.certificate;
  if (v.refutation) {
    Json j = detail::refutation_json(*v.refutation);
    if (r.invariants && !j.contains("idom")) {
      j["idom"] = r.invariants->idom;
      j["theta"] = r.invariants->theta;
    }
    r.witnesses.push_back(std::move(j));
  }
  return r;
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["input_id"] = r.input_id;
  j["n"] = r.n;
  j["m"] = r.m;
  if (r.invariants) {
    const InvariantRecord& inv = *r.invariants;
    j["invariants"] = {{"alpha", inv.alpha}, {"idom", inv.idom}, {"omega", inv.omega}, {"theta", inv.theta},
                       {"chi", inv.chi}};
    if (inv.chi_prime) j["invariants"]["chi_prime"] = *inv.chi_prime;
  } else {
    j["invariants"] = nullptr;
  }
  if (!r.invariants_reason.empty()) j["invariants_reason"] = r.invariants_reason;
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  j["flags"] = {{"well_covered", opt(r.well_covered)},
                {"very_well_covered", opt(r.very_well_covered)},
                {"co_well_covered", opt(r.co_well_covered)},
                {"semi_perfect", opt(r.semi_perfect)},
                {"localizable", opt(r.localizable)},
                {"triangle_free", r.triangle_free},
                {"c4_free", r.c4_free},
                {"bipartite", r.bipartite},
                {"regular_k", r.regular_k ? Json(*r.regular_k) : Json(nullptr)}};
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  j["witnesses"] = r.witnesses;
  j["method"] = to_string(r.method);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

}  // namespace strongclique
