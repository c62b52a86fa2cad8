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
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "strongclique/graph.hpp"
#include "strongclique/transforms.hpp"

namespace strongclique {

/// Connected components, each as a vertex set, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.order()), frontier(g.order(), {s});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) { return g.order() == 0 || components(g).size() == 1; }

/// Non-increasing.
inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

/// Common degree if every vertex has it, otherwise nullopt.
inline std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  const int k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

inline bool is_regular(const Graph& g, int k) {
  auto d = regular_degree(g);
  return d && *d == k;
}

/// All triangles {a < b < c}, lexicographic.
inline std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = g.neighbors(a).next(a); b >= 0; b = g.neighbors(a).next(b)) {
      VertexSet common = g.neighbors(a) & g.neighbors(b);
      for (Vertex c = common.next(b); c >= 0; c = common.next(c)) out.push_back({a, b, c});
    }
  return out;
}

inline std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = g.neighbors(a).next(a); b >= 0; b = g.neighbors(a).next(b)) {
      Vertex c = (g.neighbors(a) & g.neighbors(b)).next(b);
      if (c >= 0) return std::array<Vertex, 3>{a, b, c};
    }
  return std::nullopt;
}

inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

/// An induced 4-cycle (a, b, c, d) in cyclic order, if any.
inline std::optional<std::array<Vertex, 4>> find_induced_c4(const Graph& g) {
  // a and c are the non-adjacent pair; b, d two non-adjacent common neighbors.
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex c = a + 1; c < g.order(); ++c) {
      if (g.adjacent(a, c)) continue;
      VertexSet common = g.neighbors(a) & g.neighbors(c);
      for (Vertex b : common) {
        VertexSet rest = common - g.closed_neighborhood(b);
        Vertex d = rest.next(b);
        if (d >= 0) return std::array<Vertex, 4>{a, b, c, d};
      }
    }
  return std::nullopt;
}

/// C4-free in the induced sense: C4 subgraphs with a chord do not count.
inline bool is_c4_free(const Graph& g) { return !find_induced_c4(g).has_value(); }

struct Bipartition {
  bool bipartite = false;
  /// Side of each vertex (0 or 1) when bipartite; side 0 holds the smallest
  /// label of every component.
  std::vector<int> side;
  /// Closed odd walk v0 v1 ... vk (v0 adjacent to vk) when not bipartite.
  std::vector<Vertex> odd_cycle;

  VertexSet part(int which) const {
    VertexSet s(static_cast<int>(side.size()));
    for (std::size_t v = 0; v < side.size(); ++v)
      if (side[v] == which) s.insert(static_cast<Vertex>(v));
    return s;
  }
};

inline Bipartition bipartition(const Graph& g) {
  const int n = g.order();
  Bipartition r;
  r.side.assign(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (r.side[s] >= 0) continue;
    r.side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (r.side[w] < 0) {
          r.side[w] = 1 - r.side[v];
          parent[w] = v;
          queue.push_back(w);
        } else if (r.side[w] == r.side[v]) {
          // Both tree paths climb to the same root; splice them at the LCA.
          std::vector<Vertex> pv{v}, pw{w};
          while (parent[pv.back()] >= 0) pv.push_back(parent[pv.back()]);
          while (parent[pw.back()] >= 0) pw.push_back(parent[pw.back()]);
          while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
            pv.pop_back();
            pw.pop_back();
          }
          r.odd_cycle.assign(pv.begin(), pv.end());
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) r.odd_cycle.push_back(*it);
          r.bipartite = false;
          r.side.clear();
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  return r;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

/// Some induced cycle with at least `min_length` (>= 4) vertices, as a
/// vertex sequence. Exponential search; meant for desk-scale graphs.
inline std::optional<std::vector<Vertex>> find_long_hole(const Graph& g, int min_length) {
  std::vector<Vertex> path;
  // Grow induced paths s p1 ... pt whose vertices all exceed s, the smallest
  // cycle vertex. `blocked` = {s} plus N[p1] .. N[p(t-1)].
  std::function<bool(const VertexSet&)> extend = [&](const VertexSet& blocked) {
    const Vertex s = path.front();
    const Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail) - blocked) {
      if (w <= s) continue;
      if (g.adjacent(w, s)) {
        if (static_cast<int>(path.size()) + 1 >= min_length) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      path.push_back(w);
      if (extend(blocked | g.closed_neighborhood(tail))) return true;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < g.order(); ++s)
    for (Vertex first : g.neighbors(s)) {
      if (first <= s) continue;
      path = {s, first};
      if (extend(VertexSet(g.order(), {s}))) return path;
    }
  return std::nullopt;
}

/// No induced cycle of length >= 5 in the graph or its complement.
inline bool is_weakly_chordal(const Graph& g) {
  return !find_long_hole(g, 5) && !find_long_hole(complement(g), 5);
}

}  // namespace strongclique
