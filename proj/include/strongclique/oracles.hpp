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

// Exact, exponential-time ground truth for desk-scale graphs. Every
// polynomial recognizer in the library is validated against these.

#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strongclique/coloring.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/transforms.hpp"

namespace strongclique {

/// Size caps for the enumeration oracles. `max_vertices` bounds the order of
/// any graph whose maximal independent sets or cliques get enumerated (for
/// matchings: the number of edges of the host).
struct OracleConfig {
  int max_vertices = 24;

  /// Default caps, overridden by STRONGCLIQUE_ORACLE_CAP when it is set to a
  /// positive integer.
  static OracleConfig from_env() {
    OracleConfig cfg;
    if (const char* raw = std::getenv("STRONGCLIQUE_ORACLE_CAP")) {
      char* end = nullptr;
      const long v = std::strtol(raw, &end, 10);
      if (end != raw && *end == '\0' && v > 0) cfg.max_vertices = static_cast<int>(v);
    }
    return cfg;
  }

  void require(int size, const char* what) const {
    if (size > max_vertices) throw OracleScaleError(what, size, max_vertices);
  }
};

/// Return false from a visitor to stop the enumeration.
using SetVisitor = std::function<bool(const VertexSet&)>;

namespace detail {

/// Bron-Kerbosch with Tomita pivoting over an arbitrary symmetric
/// "compatible" relation (adjacency for cliques, non-adjacency for
/// independent sets). Pivot: maximizes |P & compat(u)|, lowest label on
/// ties. Branches in ascending label order. Returns false if stopped.
inline bool bron_kerbosch(const std::vector<VertexSet>& compat, VertexSet& r, VertexSet p, VertexSet x,
                          const SetVisitor& visit) {
  if (p.empty()) return x.empty() ? visit(r) : true;
  Vertex pivot = -1;
  int best = -1;
  for (Vertex u : p | x) {
    const int k = p.intersection_size(compat[u]);
    if (k > best) {
      best = k;
      pivot = u;
    }
  }
  for (Vertex v : p - compat[pivot]) {
    r.insert(v);
    const bool go_on = bron_kerbosch(compat, r, p & compat[v], x & compat[v], visit);
    r.erase(v);
    if (!go_on) return false;
    p.erase(v);
    x.insert(v);
  }
  return true;
}

inline std::vector<VertexSet> non_adjacency(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet row = ~g.neighbors(v);
    row.erase(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<VertexSet> adjacency(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v));
  return rows;
}

}  // namespace detail

/// Visits every maximal independent set exactly once, in a deterministic
/// order. Returns false if the visitor stopped early.
inline bool for_each_maximal_independent_set(const Graph& g, const SetVisitor& visit,
                                             const OracleConfig& cfg = OracleConfig::from_env()) {
  cfg.require(g.order(), "maximal independent set enumeration");
  VertexSet r(g.order());
  return detail::bron_kerbosch(detail::non_adjacency(g), r, g.vertices(), g.empty_set(), visit);
}

/// Visits every maximal clique exactly once; the dual of the above.
inline bool for_each_maximal_clique(const Graph& g, const SetVisitor& visit,
                                    const OracleConfig& cfg = OracleConfig::from_env()) {
  cfg.require(g.order(), "maximal clique enumeration");
  VertexSet r(g.order());
  return detail::bron_kerbosch(detail::adjacency(g), r, g.vertices(), g.empty_set(), visit);
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                       const OracleConfig& cfg = OracleConfig::from_env()) {
  std::vector<VertexSet> out;
  for_each_maximal_independent_set(g, [&](const VertexSet& s) { return out.push_back(s), true; }, cfg);
  return out;
}

inline std::vector<VertexSet> maximal_cliques(const Graph& g, const OracleConfig& cfg = OracleConfig::from_env()) {
  std::vector<VertexSet> out;
  for_each_maximal_clique(g, [&](const VertexSet& s) { return out.push_back(s), true; }, cfg);
  return out;
}

/// Maps a set of line-graph vertices back to host edges.
inline EdgeSet to_edges(const LineGraph& lg, const VertexSet& s) {
  EdgeSet out;
  for (Vertex i : s) out.push_back(lg.edge_of[i]);
  return out;
}

/// Visits every maximal matching of `h` exactly once, as maximal independent
/// sets of L(h). The cap applies to |E(h)|.
inline bool for_each_maximal_matching(const Graph& h, const std::function<bool(const EdgeSet&)>& visit,
                                      const OracleConfig& cfg = OracleConfig::from_env()) {
  cfg.require(h.edge_count(), "maximal matching enumeration");
  const LineGraph lg = line_graph(h);
  return for_each_maximal_independent_set(lg.graph, [&](const VertexSet& s) { return visit(to_edges(lg, s)); },
                                          cfg);
}

inline std::vector<EdgeSet> maximal_matchings(const Graph& h, const OracleConfig& cfg = OracleConfig::from_env()) {
  std::vector<EdgeSet> out;
  for_each_maximal_matching(h, [&](const EdgeSet& m) { return out.push_back(m), true; }, cfg);
  return out;
}

/// alpha(G): maximum clique of the complement.
inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

inline VertexSet maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }

/// A smallest maximal independent set (branch and bound over the
/// Bron-Kerbosch tree, pruning once the partial set reaches the incumbent).
inline VertexSet minimum_maximal_independent_set(const Graph& g, const OracleConfig& cfg = OracleConfig::from_env()) {
  cfg.require(g.order(), "independent domination number");
  const auto compat = detail::non_adjacency(g);
  std::optional<VertexSet> best;
  VertexSet r(g.order());
  auto search = [&](auto&& self, VertexSet p, VertexSet x) -> void {
    if (best && r.size() + (p.empty() ? 0 : 1) >= best->size()) return;
    if (p.empty()) {
      if (x.empty()) best = r;
      return;
    }
    Vertex pivot = -1;
    int most = -1;
    for (Vertex u : p | x) {
      const int k = p.intersection_size(compat[u]);
      if (k > most) {
        most = k;
        pivot = u;
      }
    }
    for (Vertex v : p - compat[pivot]) {
      r.insert(v);
      self(self, p & compat[v], x & compat[v]);
      r.erase(v);
      p.erase(v);
      x.insert(v);
    }
  };
  search(search, g.vertices(), g.empty_set());
  return best.value_or(VertexSet(g.order()));
}

/// i(G), the minimum size of a maximal independent set.
inline int independent_domination_number(const Graph& g, const OracleConfig& cfg = OracleConfig::from_env()) {
  return minimum_maximal_independent_set(g, cfg).size();
}

/// theta(G) = chi(complement of G).
inline int clique_cover_number(const Graph& g) { return chromatic_number(complement(g)); }

/// A partition of V(G) into theta(G) cliques.
inline std::vector<VertexSet> minimum_clique_cover(const Graph& g) { return minimum_coloring(complement(g)).classes(); }

/// chi'(H) = chi(L(H)).
inline int chromatic_index(const Graph& h) { return chromatic_number(line_graph(h).graph); }

struct InvariantRecord {
  int alpha = 0;
  int idom = 0;
  int omega = 0;
  int theta = 0;
  int chi = 0;
  std::optional<int> chi_prime;
};

inline InvariantRecord invariants(const Graph& g, bool with_chi_prime = false,
                                  const OracleConfig& cfg = OracleConfig::from_env()) {
  InvariantRecord r;
  r.idom = independent_domination_number(g, cfg);
  r.alpha = independence_number(g);
  r.omega = clique_number(g);
  r.theta = clique_cover_number(g);
  r.chi = chromatic_number(g);
  if (with_chi_prime) r.chi_prime = chromatic_index(g);
  return r;
}

/// Two maximal sets of different sizes: the first one in stream order and
/// the first later one whose size differs.
struct SizeWitness {
  VertexSet first;
  VertexSet second;
};

struct CoverVerdict {
  bool holds = false;
  std::optional<SizeWitness> witness;
};

inline CoverVerdict is_well_covered(const Graph& g, const OracleConfig& cfg = OracleConfig::from_env()) {
  CoverVerdict v{true, std::nullopt};
  std::optional<VertexSet> first;
  for_each_maximal_independent_set(
      g,
      [&](const VertexSet& s) {
        if (!first) {
          first = s;
          return true;
        }
        if (s.size() != first->size()) {
          v = {false, SizeWitness{*first, s}};
          return false;
        }
        return true;
      },
      cfg);
  return v;
}

/// Complement well-covered: all maximal cliques share one size. The witness
/// holds two maximal cliques of `g`.
inline CoverVerdict is_co_well_covered(const Graph& g, const OracleConfig& cfg = OracleConfig::from_env()) {
  return is_well_covered(complement(g), cfg);
}

/// Well-covered, no isolated vertices, and alpha = n/2.
inline bool is_very_well_covered(const Graph& g, const OracleConfig& cfg = OracleConfig::from_env()) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return false;
  if (g.order() % 2 != 0) return false;
  return independence_number(g) * 2 == g.order() && is_well_covered(g, cfg).holds;
}

/// theta = alpha.
inline bool is_semi_perfect(const Graph& g) {
  const int alpha = independence_number(g);
  return k_coloring(complement(g), alpha).has_value();
}

/// Some maximal independent set meets every maximal clique. Equivalent to
/// the complement having a strong clique, since every strong independent
/// set extends to a maximal one.
inline std::optional<VertexSet> find_strong_independent_set(const Graph& g,
                                                            const OracleConfig& cfg = OracleConfig::from_env()) {
  const auto cliques = maximal_cliques(g, cfg);
  std::optional<VertexSet> found;
  for_each_maximal_independent_set(
      g,
      [&](const VertexSet& s) {
        for (const auto& c : cliques)
          if (!c.intersects(s)) return true;
        found = s;
        return false;
      },
      cfg);
  return found;
}

}  // namespace strongclique
