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

// Localizability: a partition of V(G) into strong cliques exists, which is
// the same as i(G) = theta(G).

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strongclique/coloring.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/matching.hpp"
#include "strongclique/oracles.hpp"
#include "strongclique/predicates.hpp"
#include "strongclique/strong.hpp"
#include "strongclique/transforms.hpp"

namespace strongclique {

struct CliquePartition {
  std::vector<VertexSet> parts;

  /// Parts sorted by smallest member; members are already sorted.
  CliquePartition& normalize() {
    std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return *this;
  }
};

/// Why a graph is not localizable. Only the fields relevant to `reason` are
/// set.
struct Refutation {
  std::string reason;
  std::optional<int> idom;
  std::optional<int> theta;
  /// A clique that is not strong, with a maximal independent set avoiding it.
  std::optional<VertexSet> clique;
  std::optional<VertexSet> independent_set;
  std::optional<Vertex> vertex;
};

struct LocalizabilityVerdict {
  bool localizable = false;
  std::optional<CliquePartition> certificate;
  std::optional<Refutation> refutation;
};

struct PartitionCheck {
  bool valid = false;
  /// One verdict per part, in input order.
  std::vector<StrongnessVerdict> parts;
};

/// Checks that `p` partitions V(g) into cliques (input error otherwise) and
/// tests every part for strongness.
inline PartitionCheck verify_strong_partition(const Graph& g, const CliquePartition& p,
                                              const OracleConfig& cfg = OracleConfig::from_env()) {
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const VertexSet& part = p.parts[i];
    if (part.universe() != g.order()) throw InputError("part " + std::to_string(i) + " has the wrong universe");
    if (part.empty()) throw InputError("part " + std::to_string(i) + " is empty");
    if (part.intersects(seen)) throw InputError("not a partition: parts overlap");
    if (!g.is_clique(part)) throw InputError("part " + std::to_string(i) + " is not a clique");
    seen |= part;
  }
  if (seen.size() != g.order()) throw InputError("not a partition: some vertices are uncovered");
  PartitionCheck out{true, {}};
  for (const VertexSet& part : p.parts) {
    out.parts.push_back(is_strong_clique(g, part, cfg));
    if (!out.parts.back().strong) out.valid = false;
  }
  return out;
}

namespace detail {

/// Partition of V(g) into at most k cliques by backtracking: the uncovered
/// vertex with the fewest compatible parts goes first.
inline std::optional<std::vector<VertexSet>> clique_partition_at_most(const Graph& g, int k) {
  const int n = g.order();
  std::vector<VertexSet> parts;
  // joinable[i]: vertices adjacent to every member of parts[i].
  std::vector<VertexSet> joinable;
  VertexSet left = g.vertices();
  auto search = [&](auto&& self) -> bool {
    if (left.empty()) return true;
    Vertex pick = -1;
    int options = n + 2;
    for (Vertex v : left) {
      int c = static_cast<int>(parts.size()) < k ? 1 : 0;
      for (const auto& j : joinable) c += j.contains(v);
      if (c < options) {
        options = c;
        pick = v;
      }
      if (options == 0) return false;
    }
    left.erase(pick);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!joinable[i].contains(pick)) continue;
      const VertexSet saved = joinable[i];
      parts[i].insert(pick);
      joinable[i] &= g.neighbors(pick);
      if (self(self)) return true;
      parts[i].erase(pick);
      joinable[i] = saved;
    }
    if (static_cast<int>(parts.size()) < k) {
      parts.emplace_back(n, std::initializer_list<Vertex>{pick});
      joinable.push_back(g.neighbors(pick));
      if (self(self)) return true;
      parts.pop_back();
      joinable.pop_back();
    }
    left.insert(pick);
    return false;
  };
  if (!search(search)) return std::nullopt;
  return parts;
}

}  // namespace detail

/// An alpha-clique cover, returned only for well-covered graphs; in that case
/// every clique of every alpha-clique cover is strong, and each returned part
/// is re-verified.
inline std::optional<CliquePartition> strong_partition_search(const Graph& g,
                                                              const OracleConfig& cfg = OracleConfig::from_env()) {
  const int alpha = independence_number(g);
  if (independent_domination_number(g, cfg) != alpha) return std::nullopt;
  auto parts = detail::clique_partition_at_most(g, alpha);
  if (!parts) return std::nullopt;
  CliquePartition p{std::move(*parts)};
  p.normalize();
  if (!verify_strong_partition(g, p, cfg).valid)
    throw std::logic_error("alpha-clique cover of a well-covered graph has a non-strong part");
  return p;
}

/// Exact decision: localizable iff i(G) = theta(G).
inline LocalizabilityVerdict is_localizable_oracle(const Graph& g, const OracleConfig& cfg = OracleConfig::from_env()) {
  const int idom = independent_domination_number(g, cfg);
  const Graph co = complement(g);
  if (auto cover = k_coloring(co, idom)) {
    CliquePartition p{cover->classes()};
    p.normalize();
    if (!verify_strong_partition(g, p, cfg).valid)
      throw std::logic_error("minimum clique cover with i = theta has a non-strong part");
    return {true, std::move(p), std::nullopt};
  }
  Refutation r;
  r.reason = "independent domination number is below the clique cover number";
  r.idom = idom;
  r.theta = chromatic_number(co);
  return {false, std::nullopt, std::move(r)};
}

inline void require_triangle_free(const Graph& g) {
  if (auto t = find_triangle(g))
    throw InputError("graph has a triangle on " + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," +
                     std::to_string((*t)[2]));
}

/// Triangle-free graphs: isolated vertices are singleton strong cliques; the
/// rest is localizable iff it has a perfect matching and every edge of that
/// matching is strong.
inline LocalizabilityVerdict is_localizable_triangle_free(const Graph& g) {
  require_triangle_free(g);
  CliquePartition p;
  VertexSet isolated(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) {
      isolated.insert(v);
      p.parts.emplace_back(g.order(), std::initializer_list<Vertex>{v});
    }
  const Relabeled rest = remove_vertices(g, isolated);
  const Matching m = maximum_matching(rest.graph);
  if (2 * m.size() != rest.graph.order()) {
    Refutation r;
    r.reason = "no perfect matching on the non-isolated vertices";
    return {false, std::nullopt, std::move(r)};
  }
  for (const Edge& local : m.edges) {
    const Edge e(rest.origin[local.u], rest.origin[local.v]);
    if (!is_strong_edge(g, e)) {
      // Two non-adjacent outside neighbors of u and v dominate the edge.
      Refutation r;
      r.reason = "perfect matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not strong";
      r.clique = VertexSet(g.order(), {e.u, e.v});
      for (Vertex a : g.neighbors(e.u) - *r.clique) {
        const VertexSet far = g.neighbors(e.v) - *r.clique - g.neighbors(a);
        if (!far.empty()) {
          r.independent_set = detail::extend_to_maximal(g, VertexSet(g.order(), {a, far.first()}));
          break;
        }
      }
      return {false, std::nullopt, std::move(r)};
    }
    p.parts.push_back(VertexSet(g.order(), {e.u, e.v}));
  }
  p.normalize();
  return {true, std::move(p), std::nullopt};
}

/// C4-free graphs: localizable iff every vertex lies in exactly one
/// simplicial clique.
inline LocalizabilityVerdict is_localizable_c4_free(const Graph& g) {
  require_c4_free(g);
  const SimplicialCliques sc = simplicial_cliques(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto k = std::count_if(sc.cliques.begin(), sc.cliques.end(), [&](const VertexSet& c) { return c.contains(v); });
    if (k != 1) {
      Refutation r;
      r.reason = "vertex " + std::to_string(v) + " lies in " + std::to_string(k) + " simplicial cliques";
      r.vertex = v;
      return {false, std::nullopt, std::move(r)};
    }
  }
  CliquePartition p{sc.cliques};
  p.normalize();
  return {true, std::move(p), std::nullopt};
}

namespace detail {

/// Connected cubic component; fills `parts` when localizable, otherwise
/// returns the reason. `origin` names vertices in the reason.
inline std::optional<std::string> classify_cubic_component(const Graph& g, const std::vector<Vertex>& origin,
                                                           std::vector<VertexSet>& parts) {
  const int n = g.order();
  auto name = [&](Vertex v) { return std::to_string(origin[v]); };
  if (n == 4) {
    parts.push_back(g.vertices());
    return std::nullopt;
  }
  const auto tris = triangles(g);
  if (tris.empty()) {
    if (n != 6 || !is_bipartite(g)) return std::string("triangle-free cubic, not K_{3,3}");
    for (const Edge& e : maximum_matching(g).edges) parts.push_back(VertexSet(n, {e.u, e.v}));
    return std::nullopt;
  }
  std::vector<int> owner(n, -1);
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (Vertex v : tris[t]) {
      if (owner[v] >= 0) return "vertex " + name(v) + " lies in more than one triangle";
      owner[v] = static_cast<int>(t);
    }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] < 0) return "vertex " + name(v) + " lies in no triangle";
  // Each vertex now has exactly one neighbor outside its triangle.
  for (std::size_t t = 0; t < tris.size(); ++t) {
    std::map<int, int> links;
    for (Vertex v : tris[t]) {
      VertexSet out = g.neighbors(v);
      for (Vertex w : tris[t]) out.erase(w);
      ++links[owner[out.first()]];
    }
    // Prism: all three links reach the other triangle. F_n: two links reach
    // the partner triangle, the third reaches a different one.
    const bool prism = links.size() == 1 && n == 6;
    if (!prism && links.size() != 2)
      return "triangle {" + name(tris[t][0]) + "," + name(tris[t][1]) + "," + name(tris[t][2]) +
             "} is not attached like a prism or F_n triangle";
  }
  for (const auto& t : tris) parts.push_back(VertexSet(n, {t[0], t[1], t[2]}));
  return std::nullopt;
}

}  // namespace detail

/// Cubic graphs: localizable iff every component is K4, K_{3,3}, the
/// complement of C6, or some F_n.
inline LocalizabilityVerdict is_localizable_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3)
      throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", not 3");
  CliquePartition p;
  for (const VertexSet& comp : components(g)) {
    const Relabeled sub = induced_subgraph(g, comp);
    std::vector<VertexSet> local;
    if (auto reason = detail::classify_cubic_component(sub.graph, sub.origin, local)) {
      Refutation r;
      r.reason = *reason;
      return {false, std::nullopt, std::move(r)};
    }
    for (const VertexSet& part : local) p.parts.push_back(sub.lift(part, g.order()));
  }
  p.normalize();
  return {true, std::move(p), std::nullopt};
}

}  // namespace strongclique
