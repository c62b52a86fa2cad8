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

// Isomorphism testing and exhaustive generation of small graphs up to
// isomorphism. Orders are limited to 32.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "strongclique/errors.hpp"
#include "strongclique/graph.hpp"

namespace strongclique {

/// Dense adjacency for graphs with at most 32 vertices.
struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, 32> row{};

  static SmallGraph from(const Graph& g) {
    if (g.order() > 32) throw InputError("small graph routines are limited to 32 vertices");
    SmallGraph s;
    s.n = g.order();
    for (const Edge& e : g.edges()) s.add(e.u, e.v);
    return s;
  }

  Graph to_graph() const {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (row[u] >> v & 1u) edges.emplace_back(u, v);
    return Graph(n, edges);
  }

  void add(int u, int v) {
    row[u] |= 1u << v;
    row[v] |= 1u << u;
  }
  void remove(int u, int v) {
    row[u] &= ~(1u << v);
    row[v] &= ~(1u << u);
  }
  bool adjacent(int u, int v) const { return row[u] >> v & 1u; }
  int degree(int v) const { return std::popcount(row[v]); }
};

namespace detail {

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Color refinement seeded with (degree, triangles through v). Colors are
/// label-independent, so they can be compared across graphs.
inline std::array<std::uint64_t, 32> refined_colors(const SmallGraph& g) {
  std::array<std::uint64_t, 32> color{}, next{};
  for (int v = 0; v < g.n; ++v) {
    int tri = 0;
    for (std::uint32_t r = g.row[v]; r; r &= r - 1) tri += std::popcount(g.row[std::countr_zero(r)] & g.row[v]);
    color[v] = mix(static_cast<std::uint64_t>(g.degree(v)) << 16 | static_cast<std::uint64_t>(tri));
  }
  for (int round = 0; round < g.n; ++round) {
    for (int v = 0; v < g.n; ++v) {
      std::uint64_t acc = 0;
      for (std::uint32_t r = g.row[v]; r; r &= r - 1) acc += mix(color[std::countr_zero(r)]);
      next[v] = mix(color[v] ^ mix(acc));
    }
    color = next;
  }
  return color;
}

inline std::uint64_t invariant_key(const std::array<std::uint64_t, 32>& color, int n) {
  std::uint64_t acc = mix(static_cast<std::uint64_t>(n));
  for (int v = 0; v < n; ++v) acc += mix(color[v] + 1);
  return acc;
}

class IsoSearch {
 public:
  IsoSearch(const SmallGraph& a, const SmallGraph& b, const std::array<std::uint64_t, 32>& ca,
            const std::array<std::uint64_t, 32>& cb)
      : a_(a), b_(b), ca_(ca), cb_(cb) {}

  bool run() {
    if (a_.n != b_.n) return false;
    std::vector<std::uint64_t> sa(ca_.begin(), ca_.begin() + a_.n), sb(cb_.begin(), cb_.begin() + b_.n);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    // BFS order from the rarest color keeps later vertices attached to
    // already-mapped ones.
    std::vector<int> count(a_.n);
    for (int v = 0; v < a_.n; ++v)
      count[v] = static_cast<int>(std::count(sa.begin(), sa.end(), ca_[v]));
    std::uint32_t placed = 0;
    while (static_cast<int>(order_.size()) < a_.n) {
      int start = -1;
      for (int v = 0; v < a_.n; ++v)
        if (!(placed >> v & 1u) && (start < 0 || count[v] < count[start])) start = v;
      std::size_t head = order_.size();
      order_.push_back(start);
      placed |= 1u << start;
      while (head < order_.size()) {
        const int v = order_[head++];
        for (std::uint32_t r = a_.row[v] & ~placed; r; r &= r - 1) {
          const int w = std::countr_zero(r);
          order_.push_back(w);
          placed |= 1u << w;
        }
      }
    }
    map_.fill(-1);
    return extend(0, 0);
  }

 private:
  bool extend(std::size_t k, std::uint32_t used) {
    if (k == order_.size()) return true;
    const int v = order_[k];
    for (int w = 0; w < b_.n; ++w) {
      if (used >> w & 1u || cb_[w] != ca_[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = a_.adjacent(v, order_[i]) == b_.adjacent(w, map_[order_[i]]);
      if (!ok) continue;
      map_[v] = w;
      if (extend(k + 1, used | 1u << w)) return true;
    }
    map_[v] = -1;
    return false;
  }

  const SmallGraph &a_, &b_;
  const std::array<std::uint64_t, 32>&ca_, &cb_;
  std::vector<int> order_;
  std::array<int, 32> map_{};
};

/// Collects graphs up to isomorphism, bucketed by a refinement invariant.
class IsoClassSet {
 public:
  /// Adds `g` unless an isomorphic graph is already present.
  bool insert(const SmallGraph& g) {
    const auto color = refined_colors(g);
    auto& bucket = buckets_[invariant_key(color, g.n)];
    for (std::size_t i : bucket)
      if (IsoSearch(graphs_[i], g, colors_[i], color).run()) return false;
    bucket.push_back(graphs_.size());
    graphs_.push_back(g);
    colors_.push_back(color);
    return true;
  }

  const std::vector<SmallGraph>& graphs() const { return graphs_; }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<SmallGraph> graphs_;
  std::vector<std::array<std::uint64_t, 32>> colors_;
};

}  // namespace detail

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const SmallGraph sa = SmallGraph::from(a), sb = SmallGraph::from(b);
  const auto ca = detail::refined_colors(sa), cb = detail::refined_colors(sb);
  return detail::IsoSearch(sa, sb, ca, cb).run();
}

/// All graphs of order 0..max_order up to isomorphism; result[n] lists the
/// graphs of order n. Every graph of order n arises from one of order n - 1
/// by adding a vertex of minimum degree, which bounds the candidates.
inline std::vector<std::vector<SmallGraph>> all_graphs_up_to(int max_order) {
  if (max_order < 0 || max_order > 12) throw InputError("exhaustive generation is limited to order 12");
  std::vector<std::vector<SmallGraph>> out(max_order + 1);
  out[0].push_back(SmallGraph{});
  for (int n = 1; n <= max_order; ++n) {
    detail::IsoClassSet classes;
    const int m = n - 1;
    for (const SmallGraph& parent : out[m]) {
      for (std::uint32_t s = 0; s < (1u << m); ++s) {
        const int d = std::popcount(s);
        bool min_degree = true;
        for (int v = 0; v < m && min_degree; ++v) min_degree = parent.degree(v) + static_cast<int>(s >> v & 1u) >= d;
        if (!min_degree) continue;
        SmallGraph child = parent;
        child.n = n;
        child.row[m] = s;
        for (int v = 0; v < m; ++v)
          if (s >> v & 1u) child.row[v] |= 1u << m;
        classes.insert(child);
      }
    }
    out[n] = classes.graphs();
  }
  return out;
}

inline bool is_connected_small(const SmallGraph& g) {
  if (g.n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t r = frontier; r; r &= r - 1) next |= g.row[std::countr_zero(r)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == (g.n == 32 ? ~0u : (1u << g.n) - 1);
}

/// Connected cubic graphs of order 4..max_order up to isomorphism, keyed by
/// order. Grown from K4 by three operations: subdivide two distinct edges and
/// join the new vertices (+2), replace an edge uv by u-t-D-t'-v where D is a
/// diamond with tips t, t' (+4), or subdivide one edge in each of two smaller
/// graphs and join the new vertices by a bridge.
inline std::vector<std::vector<SmallGraph>> connected_cubic_graphs_up_to(int max_order) {
  if (max_order > 32) throw InputError("small graph routines are limited to 32 vertices");
  std::vector<std::vector<SmallGraph>> out(std::max(max_order, 4) + 1);
  SmallGraph k4;
  k4.n = 4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add(u, v);
  if (max_order >= 4) out[4].push_back(k4);
  auto edge_list = [](const SmallGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v)
        if (g.adjacent(u, v)) edges.emplace_back(u, v);
    return edges;
  };
  for (int n = 6; n <= max_order; n += 2) {
    detail::IsoClassSet classes;
    for (int a = 4; 2 * a <= n - 2; a += 2)
      for (const SmallGraph& left : out[a])
        for (const SmallGraph& right : out[n - 2 - a])
          for (auto [u, v] : edge_list(left))
            for (auto [x, y] : edge_list(right)) {
              SmallGraph child = left;
              child.n = n;
              for (int w = 0; w < right.n; ++w) child.row[a + w] = right.row[w] << a;
              const int s = n - 2, t = n - 1;
              child.remove(u, v);
              child.remove(a + x, a + y);
              for (auto [p, q] : {std::pair{u, s}, {v, s}, {a + x, t}, {a + y, t}, {s, t}}) child.add(p, q);
              classes.insert(child);
            }
    if (n >= 8)
      for (const SmallGraph& parent : out[n - 4])
        for (auto [u, v] : edge_list(parent)) {
          SmallGraph child = parent;
          child.n = n;
          const int t = n - 4, b = n - 3, c = n - 2, tp = n - 1;
          child.remove(u, v);
          child.add(u, t);
          child.add(tp, v);
          for (auto [x, y] : {std::pair{t, b}, {t, c}, {b, c}, {b, tp}, {c, tp}}) child.add(x, y);
          classes.insert(child);
        }
    for (const SmallGraph& parent : out[n - 2]) {
      const auto edges = edge_list(parent);
      for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          SmallGraph child = parent;
          child.n = n;
          const int a = n - 2, b = n - 1;
          for (auto [e, x] : {std::pair{edges[i], a}, std::pair{edges[j], b}}) {
            child.remove(e.first, e.second);
            child.add(e.first, x);
            child.add(e.second, x);
          }
          child.add(a, b);
          classes.insert(child);
        }
    }
    out[n] = classes.graphs();
  }
  return out;
}

}  // namespace strongclique
