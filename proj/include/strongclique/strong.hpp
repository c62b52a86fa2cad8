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

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strongclique/errors.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/oracles.hpp"
#include "strongclique/predicates.hpp"

namespace strongclique {

/// Bull subgraph (a, b, c, d, e) with edges ab, bc, cd, be, ce.
using Bull = std::array<Vertex, 5>;

/// Refutation evidence: a maximal independent set, a maximal matching, or a
/// bull.
using Witness = std::variant<VertexSet, EdgeSet, Bull>;

struct StrongnessVerdict {
  bool strong = false;
  std::optional<Witness> witness;
};

namespace detail {

inline void require_clique(const Graph& g, const VertexSet& c) {
  if (c.universe() != g.order()) throw InputError("vertex set does not match graph order");
  if (!g.is_clique(c)) throw InputError("vertex set is not a clique");
}

inline void require_edge(const Graph& g, const Edge& e) {
  if (!g.contains_vertex(e.u) || !g.contains_vertex(e.v) || !g.adjacent(e.u, e.v))
    throw InputError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
}

/// Greedy lowest-label extension of an independent set to a maximal one.
inline VertexSet extend_to_maximal(const Graph& g, VertexSet s) {
  VertexSet free = g.vertices() - s;
  for (Vertex v : s) free -= g.neighbors(v);
  while (!free.empty()) {
    const Vertex v = free.first();
    s.insert(v);
    free.erase(v);
    free -= g.neighbors(v);
  }
  return s;
}

/// An independent set inside N(C) that dominates C, if any. Branches on the
/// undominated clique vertex with the fewest candidates.
inline std::optional<VertexSet> dominating_independent_set(const Graph& g, const VertexSet& c) {
  const VertexSet outside = g.neighborhood(c);
  VertexSet chosen(g.order());
  auto search = [&](auto&& self, const VertexSet& undominated, const VertexSet& allowed) -> bool {
    if (undominated.empty()) return true;
    Vertex pick = -1;
    int fewest = g.order() + 1;
    for (Vertex v : undominated) {
      const int k = g.neighbors(v).intersection_size(allowed);
      if (k < fewest) {
        fewest = k;
        pick = v;
      }
    }
    if (fewest == 0) return false;
    for (Vertex w : g.neighbors(pick) & allowed) {
      chosen.insert(w);
      if (self(self, undominated - g.neighbors(w), allowed - g.closed_neighborhood(w))) return true;
      chosen.erase(w);
    }
    return false;
  };
  if (search(search, c, outside)) return chosen;
  return std::nullopt;
}

inline bool avoids_clique(const Graph& g, const VertexSet& witness, const VertexSet& c) {
  return g.is_maximal_independent(witness) && !witness.intersects(c);
}

}  // namespace detail

/// A clique is strong when it meets every maximal independent set. Searches
/// for an independent subset of N(C) dominating C; any such set extends to a
/// maximal independent set avoiding C. Non-maximal cliques come out as not
/// strong.
inline StrongnessVerdict is_strong_clique(const Graph& g, const VertexSet& c,
                                          const OracleConfig& cfg = OracleConfig::from_env()) {
  detail::require_clique(g, c);
  cfg.require(g.order(), "strong clique test");
  auto dominating = detail::dominating_independent_set(g, c);
  if (!dominating) return {true, std::nullopt};
  VertexSet witness = detail::extend_to_maximal(g, *dominating);
  if (!detail::avoids_clique(g, witness, c)) throw std::logic_error("strong clique witness failed verification");
  return {false, witness};
}

/// Same decision by full maximal independent set enumeration.
inline StrongnessVerdict is_strong_clique_enum(const Graph& g, const VertexSet& c,
                                               const OracleConfig& cfg = OracleConfig::from_env()) {
  detail::require_clique(g, c);
  StrongnessVerdict verdict{true, std::nullopt};
  for_each_maximal_independent_set(
      g,
      [&](const VertexSet& s) {
        if (s.intersects(c)) return true;
        verdict = {false, s};
        return false;
      },
      cfg);
  return verdict;
}

/// uv is strong iff it lies in no triangle and N(u) is complete to N(v).
inline bool is_strong_edge(const Graph& g, const Edge& e) {
  detail::require_edge(g, e);
  const VertexSet nu = g.neighbors(e.u) - VertexSet(g.order(), {e.v});
  const VertexSet nv = g.neighbors(e.v) - VertexSet(g.order(), {e.u});
  if (nu.intersects(nv)) return false;
  for (Vertex a : nu)
    if (!nv.is_subset_of(g.neighbors(a))) return false;
  return true;
}

struct SimplicialCliques {
  /// (v, N[v]) for every simplicial v, ascending in v.
  std::vector<std::pair<Vertex, VertexSet>> by_vertex;
  /// Distinct simplicial cliques, sorted.
  std::vector<VertexSet> cliques;
};

inline SimplicialCliques simplicial_cliques(const Graph& g) {
  SimplicialCliques out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet closed = g.closed_neighborhood(v);
    if (!g.is_clique(closed)) continue;
    out.by_vertex.emplace_back(v, closed);
    out.cliques.push_back(closed);
  }
  std::sort(out.cliques.begin(), out.cliques.end());
  out.cliques.erase(std::unique(out.cliques.begin(), out.cliques.end()), out.cliques.end());
  return out;
}

inline void require_c4_free(const Graph& g) {
  if (auto c4 = find_induced_c4(g))
    throw InputError("graph has an induced C4 on " + std::to_string((*c4)[0]) + "," + std::to_string((*c4)[1]) + "," +
                     std::to_string((*c4)[2]) + "," + std::to_string((*c4)[3]));
}

/// In a C4-free graph a clique is strong iff it equals N[v] for one of its
/// members v.
inline bool is_strong_clique_c4free(const Graph& g, const VertexSet& c) {
  detail::require_clique(g, c);
  require_c4_free(g);
  return std::any_of(c.begin(), c.end(), [&](Vertex v) { return g.closed_neighborhood(v) == c; });
}

/// A vertex is strong when every maximal matching covers it (oracle).
inline StrongnessVerdict is_strong_vertex(const Graph& h, Vertex v,
                                          const OracleConfig& cfg = OracleConfig::from_env()) {
  if (!h.contains_vertex(v)) throw InputError("vertex label " + std::to_string(v) + " out of range");
  StrongnessVerdict verdict{true, std::nullopt};
  for_each_maximal_matching(
      h,
      [&](const EdgeSet& m) {
        if (std::any_of(m.begin(), m.end(), [&](const Edge& e) { return e.touches(v); })) return true;
        verdict = {false, m};
        return false;
      },
      cfg);
  return verdict;
}

namespace detail {

inline std::array<Vertex, 3> require_triangle(const Graph& h, const VertexSet& t) {
  if (t.universe() != h.order() || t.size() != 3 || !h.is_clique(t)) throw InputError("vertex set is not a triangle");
  auto v = t.to_vector();
  return {v[0], v[1], v[2]};
}

/// Two disjoint edges xp, yq with x != y in T and p != q outside T.
inline std::optional<Bull> find_bull(const Graph& h, const VertexSet& t, const std::array<Vertex, 3>& tv) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const Vertex x = tv[i], y = tv[j], z = tv[3 - i - j];
      for (Vertex p : h.neighbors(x) - t)
        for (Vertex q : h.neighbors(y) - t)
          if (p != q) return Bull{p, x, y, q, z};
    }
  return std::nullopt;
}

inline bool is_bull(const Graph& h, const Bull& b) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (b[i] == b[j]) return false;
  const int pairs[5][2] = {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}};
  for (auto& e : pairs)
    if (!h.adjacent(b[e[0]], b[e[1]])) return false;
  return true;
}

}  // namespace detail

/// A triangle is strong when every maximal matching uses one of its edges,
/// which happens iff no bull contains it. The witness is a bull.
inline StrongnessVerdict is_strong_triangle(const Graph& h, const VertexSet& t) {
  const auto tv = detail::require_triangle(h, t);
  auto bull = detail::find_bull(h, t, tv);
  if (!bull) return {true, std::nullopt};
  if (!detail::is_bull(h, *bull)) throw std::logic_error("bull witness failed verification");
  return {false, *bull};
}

/// Oracle version through maximal matchings.
inline StrongnessVerdict is_strong_triangle_oracle(const Graph& h, const VertexSet& t,
                                                   const OracleConfig& cfg = OracleConfig::from_env()) {
  detail::require_triangle(h, t);
  StrongnessVerdict verdict{true, std::nullopt};
  for_each_maximal_matching(
      h,
      [&](const EdgeSet& m) {
        for (const Edge& e : m)
          if (t.contains(e.u) && t.contains(e.v)) return true;
        verdict = {false, m};
        return false;
      },
      cfg);
  return verdict;
}

enum class TriangleClass {
  /// Two vertices of degree 2, the third (the root) of larger degree.
  pendant_triangle,
  /// Inside a diamond whose degree-2 tip lies in the triangle.
  pendant_diamond,
  /// Inside a K4 with three degree-3 vertices.
  pendant_k4,
  /// The whole component is K3, K4, or the diamond.
  small_component,
  not_strong,
};

inline const char* to_string(TriangleClass c) {
  switch (c) {
    case TriangleClass::pendant_triangle: return "pendant-triangle";
    case TriangleClass::pendant_diamond: return "in-pendant-diamond";
    case TriangleClass::pendant_k4: return "in-pendant-K4";
    case TriangleClass::small_component: return "small-component";
    case TriangleClass::not_strong: return "not-strong";
  }
  return "?";
}

struct TriangleClassification {
  TriangleClass kind = TriangleClass::not_strong;
  /// Attachment vertex for the three pendant classes.
  std::optional<Vertex> root;
  /// The diamond or K4 vertex set for those two classes.
  std::optional<VertexSet> pendant;
  std::optional<Bull> bull;
};

inline TriangleClassification classify_strong_triangle(const Graph& h, const VertexSet& t) {
  const auto tv = detail::require_triangle(h, t);
  TriangleClassification out;
  if (auto bull = detail::find_bull(h, t, tv)) {
    out.bull = bull;
    return out;
  }
  VertexSet attached(h.order());
  VertexSet outside(h.order());
  for (Vertex v : tv)
    if (!(h.neighbors(v) - t).empty()) {
      attached.insert(v);
      outside |= h.neighbors(v) - t;
    }
  // Bull-free with two or more attached vertices forces a single outside
  // neighbor d; with one attached vertex c, that vertex is the root.
  if (attached.size() == 1) {
    out.kind = TriangleClass::pendant_triangle;
    out.root = attached.first();
    return out;
  }
  if (attached.empty()) {
    out.kind = TriangleClass::small_component;
    return out;
  }
  const Vertex d = outside.first();
  const bool root_reaches_out = h.degree(d) > attached.size();
  if (!root_reaches_out) {
    out.kind = TriangleClass::small_component;
    return out;
  }
  out.kind = attached.size() == 2 ? TriangleClass::pendant_diamond : TriangleClass::pendant_k4;
  out.root = d;
  VertexSet sub = t;
  sub.insert(d);
  out.pendant = sub;
  return out;
}

/// Every vertex lies in some strong clique (exact, via maximal cliques).
inline bool every_vertex_in_strong_clique(const Graph& g, const OracleConfig& cfg = OracleConfig::from_env()) {
  VertexSet covered(g.order());
  for (const VertexSet& c : maximal_cliques(g, cfg))
    if (!c.is_subset_of(covered) && is_strong_clique(g, c, cfg).strong) covered |= c;
  return covered.size() == g.order();
}

}  // namespace strongclique
