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

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strongclique/errors.hpp"
#include "strongclique/vertex_set.hpp"

namespace strongclique {

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const noexcept { return u == w || v == w; }
  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(check_order(n), VertexSet(n)) {}

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add(e.u, e.v);
  }
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
    for (auto [a, b] : edges) add(a, b);
  }

  /// Builds from explicit neighbor sets; rejects loops and asymmetric input.
  static Graph from_adjacency(std::vector<VertexSet> adj) {
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
      if (adj[v].universe() != n) throw InputError("adjacency row has wrong universe");
      if (adj[v].contains(v)) throw InputError("self-loop at vertex " + std::to_string(v));
      for (Vertex w : adj[v])
        if (!adj[w].contains(v)) throw InputError("asymmetric adjacency");
    }
    Graph g;
    g.adj_ = std::move(adj);
    return g;
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
  }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighborhood(Vertex v) const {
    VertexSet s = adj_[v];
    s.insert(v);
    return s;
  }
  /// N(X): vertices outside X with a neighbor in X.
  VertexSet neighborhood(const VertexSet& x) const {
    VertexSet s(order());
    for (Vertex v : x) s |= adj_[v];
    return s - x;
  }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const { return adj_[a].contains(b); }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
  bool contains_vertex(Vertex v) const noexcept { return v >= 0 && v < order(); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
  }

  bool is_clique(const VertexSet& s) const {
    for (Vertex v : s)
      if ((s - adj_[v]).size() != 1) return false;
    return true;
  }
  bool is_independent(const VertexSet& s) const {
    for (Vertex v : s)
      if (adj_[v].intersects(s)) return false;
    return true;
  }
  /// Every vertex outside `s` has a neighbor in `s`.
  bool dominates(const VertexSet& s) const {
    VertexSet covered = s;
    for (Vertex v : s) covered |= adj_[v];
    return covered.size() == order();
  }
  bool is_maximal_independent(const VertexSet& s) const { return is_independent(s) && dominates(s); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static std::size_t check_order(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return static_cast<std::size_t>(n);
  }
  void add(Vertex a, Vertex b) {
    if (!contains_vertex(a) || !contains_vertex(b))
      throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has a label outside 0.." +
                       std::to_string(order() - 1));
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    adj_[a].insert(b);
    adj_[b].insert(a);
  }

  std::vector<VertexSet> adj_;
};

/// A set of edges of some host graph.
using EdgeSet = std::vector<Edge>;

}  // namespace strongclique
