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

#include <string>
#include <vector>

#include "strongclique/graph.hpp"

namespace strongclique {

/// A derived graph together with the label each of its vertices had in the
/// graph it was derived from.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> origin;

  /// Maps a set over `graph` back to labels of the source graph.
  VertexSet lift(const VertexSet& s, int source_order) const {
    VertexSet out(source_order);
    for (Vertex v : s) out.insert(origin[v]);
    return out;
  }
};

/// L(H) plus the host edge behind every line-graph vertex.
struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;

  /// Index of `e` among the line-graph vertices, or -1.
  Vertex vertex_of(const Edge& e) const {
    for (std::size_t i = 0; i < edge_of.size(); ++i)
      if (edge_of[i] == e) return static_cast<Vertex>(i);
    return -1;
  }
};

inline Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> adj;
  adj.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row = ~g.neighbors(v);
    row.erase(v);
    adj.push_back(std::move(row));
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Subgraph induced by `s`; vertices keep their relative order.
inline Relabeled induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw InputError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                     std::to_string(g.order()));
  Relabeled r;
  r.origin = s.to_vector();
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < r.origin.size(); ++i) index[r.origin[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex v : r.origin)
    for (Vertex w : g.neighbors(v))
      if (index[w] > index[v]) edges.emplace_back(index[v], index[w]);
  r.graph = Graph(static_cast<int>(r.origin.size()), edges);
  return r;
}

/// Induced subgraph on an explicit label list; rejects out-of-range labels.
inline Relabeled induced_subgraph(const Graph& g, const std::vector<Vertex>& labels) {
  VertexSet s(g.order());
  for (Vertex v : labels) {
    if (!g.contains_vertex(v)) throw InputError("vertex label " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return induced_subgraph(g, s);
}

/// G - X.
inline Relabeled remove_vertices(const Graph& g, const VertexSet& x) { return induced_subgraph(g, ~x); }

/// Line graph; vertex i stands for the i-th edge of `h` in `h.edges()` order.
inline LineGraph line_graph(const Graph& h) {
  LineGraph lg;
  lg.edge_of = h.edges();
  const int m = static_cast<int>(lg.edge_of.size());
  std::vector<VertexSet> incident(h.order(), VertexSet(m));
  for (int i = 0; i < m; ++i) {
    incident[lg.edge_of[i].u].insert(i);
    incident[lg.edge_of[i].v].insert(i);
  }
  std::vector<VertexSet> adj;
  adj.reserve(m);
  for (int i = 0; i < m; ++i) {
    VertexSet row = incident[lg.edge_of[i].u] | incident[lg.edge_of[i].v];
    row.erase(i);
    adj.push_back(std::move(row));
  }
  lg.graph = Graph::from_adjacency(std::move(adj));
  return lg;
}

/// Adds a private pendant neighbor n+i to every vertex i.
inline Graph corona(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return Graph(2 * n, edges);
}

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), edges);
}

/// Relabels so that vertex v becomes perm[v].
inline Graph permute(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

}  // namespace strongclique
