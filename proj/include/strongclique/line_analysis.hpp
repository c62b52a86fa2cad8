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

// Localizability of line graphs, decided on the root graph H of G = L(H).

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strongclique/errors.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/matching.hpp"
#include "strongclique/predicates.hpp"
#include "strongclique/recognizers.hpp"
#include "strongclique/strong.hpp"
#include "strongclique/transforms.hpp"

namespace strongclique {

/// H with L(H) = G under the labeling vertex v of G <-> edge edge_of[v] of H.
struct RootGraph {
  Graph graph;
  std::vector<Edge> edge_of;
};

namespace detail {

inline bool is_k3(const Graph& g) { return g.order() == 3 && g.edge_count() == 3; }

/// Builds H from a Krausz family: every vertex of G lies in one or two of
/// the cliques, and every edge of G in exactly one. Fails on parallel edges.
inline std::optional<RootGraph> root_from_cliques(const Graph& g, const std::vector<VertexSet>& cliques) {
  const int n = g.order();
  std::vector<std::vector<int>> member(n);
  for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
    for (Vertex v : cliques[i]) member[v].push_back(i);
  int next = static_cast<int>(cliques.size());
  RootGraph r;
  r.edge_of.resize(n);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    if (member[v].size() > 2) return std::nullopt;
    const int a = member[v].empty() ? next++ : member[v][0];
    const int b = member[v].size() == 2 ? member[v][1] : next++;
    r.edge_of[v] = Edge(a, b);
    edges.push_back(r.edge_of[v]);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
  r.graph = Graph(next, edges);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const Edge &e = r.edge_of[u], &f = r.edge_of[v];
      const bool share = e.touches(f.u) || e.touches(f.v);
      if (share != g.adjacent(u, v)) return std::nullopt;
    }
  return r;
}

/// Backtracking over Krausz families. The clique through an uncovered edge
/// uv holds u, v and all common neighbors except at most one.
inline std::optional<RootGraph> krausz_search(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> cliques;
  std::vector<int> load(n, 0);
  std::vector<VertexSet> uncovered;  // uncovered[v]: neighbors w with vw not yet in a clique
  for (Vertex v = 0; v < n; ++v) uncovered.push_back(g.neighbors(v));
  std::optional<RootGraph> found;

  auto search = [&](auto&& self) -> bool {
    Vertex u = -1;
    for (Vertex v = 0; v < n && u < 0; ++v)
      if (!uncovered[v].empty()) u = v;
    if (u < 0) {
      found = root_from_cliques(g, cliques);
      return found.has_value();
    }
    const Vertex v = uncovered[u].first();
    if (load[u] >= 2 || load[v] >= 2) return false;
    const VertexSet common = g.neighbors(u) & g.neighbors(v);
    std::vector<Vertex> drops{-1};
    for (Vertex w : common) drops.push_back(w);
    for (Vertex drop : drops) {
      VertexSet k = common;
      if (drop >= 0) k.erase(drop);
      k.insert(u);
      k.insert(v);
      if (!g.is_clique(k)) continue;
      bool ok = true;
      for (Vertex a : k) {
        if (load[a] >= 2 || !(k - VertexSet(n, {a})).is_subset_of(uncovered[a])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (Vertex a : k) {
        ++load[a];
        uncovered[a] -= k;
      }
      cliques.push_back(k);
      if (self(self)) return true;
      cliques.pop_back();
      for (Vertex a : k) {
        --load[a];
        uncovered[a] |= k - VertexSet(n, {a});
      }
    }
    return false;
  };
  search(search);
  return found;
}

}  // namespace detail

/// Root graphs of a connected graph: one for a line graph, none otherwise,
/// and both K3 and K_{1,3} for K3. Only simple roots are considered.
inline std::vector<RootGraph> root_graph(const Graph& g) {
  if (!is_connected(g)) throw InputError("graph is not connected");
  if (detail::is_k3(g)) {
    RootGraph triangle{Graph(3, {{0, 1}, {0, 2}, {1, 2}}), {Edge(0, 1), Edge(0, 2), Edge(1, 2)}};
    RootGraph claw{Graph(4, {{0, 1}, {0, 2}, {0, 3}}), {Edge(0, 1), Edge(0, 2), Edge(0, 3)}};
    return {triangle, claw};
  }
  if (auto r = detail::krausz_search(g)) return {*r};
  return {};
}

struct PendantTriangle {
  VertexSet triangle;
  Vertex root;
};

struct PendantDiamond {
  VertexSet vertices;
  std::array<Vertex, 2> tips;
  Vertex root;
};

struct PendantK4 {
  VertexSet vertices;
  Vertex root;
};

struct PendantDecomposition {
  std::vector<PendantTriangle> triangles;
  std::vector<PendantDiamond> diamonds;
  std::vector<PendantK4> k4s;
  /// The pendant reduction F with its labels in H.
  Relabeled reduction;

  VertexSet triangle_roots(int n) const {
    VertexSet s(n);
    for (const auto& t : triangles) s.insert(t.root);
    return s;
  }
  VertexSet diamond_roots(int n) const {
    VertexSet s(n);
    for (const auto& d : diamonds) s.insert(d.root);
    return s;
  }
  VertexSet k4_roots(int n) const {
    VertexSet s(n);
    for (const auto& k : k4s) s.insert(k.root);
    return s;
  }
};

namespace detail {

inline bool is_k4(const Graph& h) { return h.order() == 4 && h.edge_count() == 6; }

inline bool is_diamond(const Graph& h) {
  return h.order() == 4 && h.edge_count() == 5;  // K4 minus an edge is the only such graph
}

inline std::vector<VertexSet> triangle_sets(const Graph& h) {
  std::vector<VertexSet> out;
  for (const auto& t : triangles(h)) out.push_back(VertexSet(h.order(), {t[0], t[1], t[2]}));
  return out;
}

}  // namespace detail

/// Pendant triangles, diamonds and K4s of a connected H other than K3, K4 and
/// the diamond, plus the pendant reduction.
inline PendantDecomposition pendant_decomposition(const Graph& h) {
  if (!is_connected(h)) throw InputError("graph is not connected");
  if (detail::is_k3(h) || detail::is_k4(h) || detail::is_diamond(h))
    throw InputError("pendant subgraphs are undefined for K3, K4 and the diamond");
  PendantDecomposition d;
  VertexSet removed(h.order());
  for (const VertexSet& t : detail::triangle_sets(h)) {
    const TriangleClassification c = classify_strong_triangle(h, t);
    switch (c.kind) {
      case TriangleClass::pendant_triangle:
        d.triangles.push_back({t, *c.root});
        removed |= t - VertexSet(h.order(), {*c.root});
        break;
      case TriangleClass::pendant_diamond: {
        const Vertex tip = (t - h.neighbors(*c.root)).first();
        d.diamonds.push_back({*c.pendant, {tip, *c.root}, *c.root});
        removed |= *c.pendant - VertexSet(h.order(), {*c.root});
        break;
      }
      case TriangleClass::pendant_k4:
        d.k4s.push_back({*c.pendant, *c.root});
        removed |= *c.pendant - VertexSet(h.order(), {*c.root});
        break;
      case TriangleClass::small_component:
      case TriangleClass::not_strong:
        break;
    }
  }
  d.reduction = remove_vertices(h, removed);
  return d;
}

/// (S, T): S an independent set of strong vertices, T strong triangles
/// decomposing H - S.
struct LineCertifier {
  VertexSet star_centers;
  std::vector<VertexSet> triangles;
};

struct LineVerdict {
  bool localizable = false;
  std::optional<LineCertifier> certifier;
  std::string reason;
};

/// Localizability of L(h) for connected h, decided on h.
inline LineVerdict is_line_localizable(const Graph& h) {
  if (!is_connected(h)) throw InputError("graph is not connected");
  const int n = h.order();
  if (detail::is_k3(h)) return {true, LineCertifier{VertexSet(n), {h.vertices()}}, "root is K3"};
  if (detail::is_k4(h)) return {true, LineCertifier{VertexSet(n, {0}), {VertexSet(n, {1, 2, 3})}}, "root is K4"};
  if (detail::is_diamond(h)) return {false, std::nullopt, "root is the diamond"};

  const PendantDecomposition d = pendant_decomposition(h);
  const Graph& f = d.reduction.graph;
  if (!is_connected(f)) return {false, std::nullopt, "pendant reduction is disconnected"};
  const Bipartition bp = bipartition(f);
  if (!bp.bipartite) return {false, std::nullopt, "pendant reduction is not bipartite"};

  // Everything below works in F's labels.
  std::vector<Vertex> local(n, -1);
  for (std::size_t i = 0; i < d.reduction.origin.size(); ++i) local[d.reduction.origin[i]] = static_cast<Vertex>(i);
  auto to_f = [&](const VertexSet& s) {
    VertexSet out(f.order());
    for (Vertex v : s) out.insert(local[v]);
    return out;
  };
  const VertexSet r_tri = to_f(d.triangle_roots(n));
  const VertexSet r_dia = to_f(d.diamond_roots(n));
  const VertexSet r_k4 = to_f(d.k4_roots(n));

  std::string reason = "no bipartition side satisfies the pendant-root conditions";
  for (int side : {0, 1}) {
    const VertexSet u = bp.part(side);
    const VertexSet w = bp.part(1 - side);
    if (!(r_dia | r_k4).is_subset_of(u) || !r_tri.is_subset_of(w)) continue;
    bool ok = true;
    for (Vertex x : u - r_k4) {
      const Relabeled sub = remove_vertices(f, f.neighbors(x) & r_tri);
      const auto pos = std::find(sub.origin.begin(), sub.origin.end(), x) - sub.origin.begin();
      if (!is_strong_vertex_bipartite(sub.graph, static_cast<Vertex>(pos))) {
        ok = false;
        reason = "vertex " + std::to_string(d.reduction.origin[x]) + " is not strong in its reduced graph";
        break;
      }
    }
    if (!ok) continue;
    LineCertifier cert{d.reduction.lift(u, n), {}};
    for (const VertexSet& t : detail::triangle_sets(h))
      if (is_strong_triangle(h, t).strong) cert.triangles.push_back(t);
    return {true, std::move(cert), "pendant reduction conditions hold"};
  }
  return {false, std::nullopt, reason};
}

/// Connected triangle-free h: L(h) is localizable iff h is bipartite and
/// equimatchable.
inline bool is_line_localizable_triangle_free_root(const Graph& h) {
  require_triangle_free(h);
  return is_bipartite(h) && is_equimatchable_bipartite(h);
}

struct CertifierCheck {
  bool valid = false;
  std::string failure;
};

/// Checks a certifier with the strong-vertex and strong-triangle oracles.
inline CertifierCheck verify_line_certifier(const Graph& h, const LineCertifier& c,
                                            const OracleConfig& cfg = OracleConfig::from_env()) {
  const int n = h.order();
  if (c.star_centers.universe() != n) return {false, "star center set has the wrong universe"};
  if (!h.is_independent(c.star_centers)) return {false, "star centers are not independent"};
  for (Vertex s : c.star_centers)
    if (!is_strong_vertex(h, s, cfg).strong) return {false, "star center " + std::to_string(s) + " is not strong"};
  std::vector<Edge> used;
  for (const VertexSet& t : c.triangles) {
    if (t.universe() != n || t.size() != 3 || !h.is_clique(t)) return {false, "certifier lists a non-triangle"};
    if (t.intersects(c.star_centers)) return {false, "a triangle meets a star center"};
    if (!is_strong_triangle_oracle(h, t, cfg).strong) return {false, "a listed triangle is not strong"};
    const auto v = t.to_vector();
    used.insert(used.end(), {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])});
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) return {false, "triangles share an edge"};
  std::vector<Edge> rest;
  for (const Edge& e : h.edges())
    if (!c.star_centers.contains(e.u) && !c.star_centers.contains(e.v)) rest.push_back(e);
  if (rest != used) return {false, "triangles do not decompose H - S"};
  return {true, {}};
}

/// The clique partition of L(h) induced by a certifier: one star per center
/// and one clique per triangle, in the labels of `lg`.
inline CliquePartition certifier_partition(const LineGraph& lg, const LineCertifier& c) {
  const int m = static_cast<int>(lg.edge_of.size());
  CliquePartition p;
  for (Vertex s : c.star_centers) {
    VertexSet star(m);
    for (int i = 0; i < m; ++i)
      if (lg.edge_of[i].touches(s)) star.insert(i);
    if (!star.empty()) p.parts.push_back(star);
  }
  for (const VertexSet& t : c.triangles) {
    VertexSet part(m);
    for (int i = 0; i < m; ++i)
      if (t.contains(lg.edge_of[i].u) && t.contains(lg.edge_of[i].v)) part.insert(i);
    p.parts.push_back(part);
  }
  p.normalize();
  return p;
}

/// Localizability of an arbitrary graph through its root graphs, component
/// by component. Fails with an input error if some component is not the line
/// graph of a simple graph.
inline LocalizabilityVerdict is_localizable_line(const Graph& g) {
  CliquePartition p;
  for (const VertexSet& comp : components(g)) {
    const Relabeled sub = induced_subgraph(g, comp);
    const auto roots = root_graph(sub.graph);
    if (roots.empty()) throw InputError("not a (simple) line graph");
    std::optional<LineVerdict> accepted;
    std::string reason;
    const RootGraph* root = nullptr;
    for (const RootGraph& r : roots) {
      LineVerdict v = is_line_localizable(r.graph);
      if (v.localizable) {
        accepted = std::move(v);
        root = &r;
        break;
      }
      reason = v.reason;
    }
    if (!accepted) {
      Refutation ref;
      ref.reason = reason;
      return {false, std::nullopt, std::move(ref)};
    }
    LineGraph lg{sub.graph, root->edge_of};
    for (const VertexSet& part : certifier_partition(lg, *accepted->certifier).parts)
      p.parts.push_back(sub.lift(part, g.order()));
  }
  p.normalize();
  return {true, std::move(p), std::nullopt};
}

}  // namespace strongclique
