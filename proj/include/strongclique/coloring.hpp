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
#include <optional>
#include <vector>

#include "strongclique/graph.hpp"

namespace strongclique {

/// Maximum clique by branch and bound with a greedy-coloring bound.
/// Ties resolve to the lexicographically first clique found.
inline VertexSet maximum_clique(const Graph& g) {
  const int n = g.order();
  VertexSet best(n), current(n);

  // Greedy sequential coloring of `p` in label order; returns vertices in
  // nondecreasing color order together with their color numbers.
  auto color_sort = [&](const VertexSet& p, std::vector<Vertex>& order, std::vector<int>& bound) {
    order.clear();
    bound.clear();
    VertexSet uncolored = p;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      VertexSet candidates = uncolored;
      while (!candidates.empty()) {
        Vertex v = candidates.first();
        candidates.erase(v);
        candidates -= g.neighbors(v);
        uncolored.erase(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  };

  auto expand = [&](auto&& self, VertexSet p) -> void {
    std::vector<Vertex> order;
    std::vector<int> bound;
    color_sort(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + bound[i] <= best.size()) return;
      const Vertex v = order[i];
      current.insert(v);
      VertexSet next = p & g.neighbors(v);
      if (next.empty()) {
        if (current.size() > best.size()) best = current;
      } else {
        self(self, next);
      }
      current.erase(v);
      p.erase(v);
    }
  };
  if (n > 0) expand(expand, g.vertices());
  return best;
}

inline int clique_number(const Graph& g) { return maximum_clique(g).size(); }

/// A proper vertex coloring: color[v] in 0..colors-1.
struct Coloring {
  int colors = 0;
  std::vector<int> color;

  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out(colors, VertexSet(static_cast<int>(color.size())));
    for (std::size_t v = 0; v < color.size(); ++v) out[color[v]].insert(static_cast<Vertex>(v));
    return out;
  }
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.order()) return false;
  for (const Edge& e : g.edges())
    if (c.color[e.u] == c.color[e.v]) return false;
  return std::all_of(c.color.begin(), c.color.end(), [&](int x) { return x >= 0 && x < c.colors; });
}

namespace detail {

/// DSATUR backtracking for a coloring with at most `limit` colors. A maximum
/// clique is precolored with 0..omega-1. Branching vertex: highest
/// saturation, then lowest label.
class DsaturSearch {
 public:
  explicit DsaturSearch(const Graph& g, VertexSet clique) : g_(g), n_(g.order()), clique_(std::move(clique)) {}

  std::optional<Coloring> run(int limit) {
    if (n_ == 0) return Coloring{0, {}};
    color_.assign(n_, -1);
    forbidden_.assign(static_cast<std::size_t>(n_) * n_, 0);
    saturation_.assign(n_, 0);
    best_.clear();

    limit_ = limit;
    if (clique_.size() > limit_) return std::nullopt;
    int used = 0;
    for (Vertex v : clique_) assign(v, used++);
    if (!search(used, n_ - used)) return std::nullopt;
    return Coloring{best_colors_, best_};
  }

 private:
  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v))
      if (forbidden_[w * n_ + c]++ == 0) ++saturation_[w];
  }
  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex w : g_.neighbors(v))
      if (--forbidden_[w * n_ + c] == 0) --saturation_[w];
  }

  bool search(int used, int remaining) {
    if (remaining == 0) {
      best_colors_ = used;
      best_ = color_;
      return true;
    }
    Vertex pick = -1;
    for (Vertex v = 0; v < n_; ++v)
      if (color_[v] < 0 && (pick < 0 || saturation_[v] > saturation_[pick])) pick = v;
    // Colors above `used` are interchangeable, so only one new color is tried.
    for (int c = 0; c <= used && c < limit_; ++c) {
      if (forbidden_[pick * n_ + c]) continue;
      assign(pick, c);
      const bool done = search(std::max(used, c + 1), remaining - 1);
      unassign(pick);
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  VertexSet clique_;
  int limit_ = 0;
  int best_colors_ = 0;
  std::vector<int> color_;
  std::vector<int> best_;
  std::vector<int> forbidden_;
  std::vector<int> saturation_;
};

}  // namespace detail

/// Minimum coloring (exact): decision searches for k = omega, omega + 1, ...
/// Each failed k is a proof that chi > k.
inline Coloring minimum_coloring(const Graph& g) {
  const VertexSet clique = maximum_clique(g);
  for (int k = clique.size();; ++k)
    if (auto c = detail::DsaturSearch(g, clique).run(k)) return *c;
}

inline int chromatic_number(const Graph& g) { return minimum_coloring(g).colors; }

/// A coloring with at most k colors, if one exists.
inline std::optional<Coloring> k_coloring(const Graph& g, int k) {
  if (k < 0) return std::nullopt;
  return detail::DsaturSearch(g, maximum_clique(g)).run(k);
}

}  // namespace strongclique
