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
#include <deque>
#include <optional>
#include <variant>
#include <vector>

#include "strongclique/errors.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/oracles.hpp"
#include "strongclique/predicates.hpp"

namespace strongclique {

/// Pairwise vertex-disjoint edges of a host graph.
struct Matching {
  EdgeSet edges;

  int size() const noexcept { return static_cast<int>(edges.size()); }

  /// mate[v], or -1 for exposed vertices.
  std::vector<Vertex> mates(int n) const {
    std::vector<Vertex> mate(n, -1);
    for (const Edge& e : edges) {
      mate[e.u] = e.v;
      mate[e.v] = e.u;
    }
    return mate;
  }

  VertexSet covered(int n) const {
    VertexSet s(n);
    for (const Edge& e : edges) {
      s.insert(e.u);
      s.insert(e.v);
    }
    return s;
  }
};

namespace detail {

inline Matching from_mates(const std::vector<Vertex>& mate) {
  Matching m;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
    if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
  return m;
}

/// Edmonds' blossom algorithm, O(n^3). Roots and neighbors are scanned in
/// ascending label order so the returned matching is reproducible.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<Vertex> run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] >= 0) continue;
      Vertex v = augmenting_path_end(root);
      while (v >= 0) {
        const Vertex pv = parent_[v];
        const Vertex next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return mate_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex augmenting_path_end(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const Vertex b = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

inline Bipartition require_bipartite(Bipartition bp) {
  if (!bp.bipartite) throw InputError("graph is not bipartite");
  return bp;
}

/// Augmenting-path matching from `left` into the rest of the graph, in label
/// order. Only edges between `left` and `right` are used.
inline std::vector<Vertex> kuhn(const Graph& g, const VertexSet& left, const VertexSet& right) {
  std::vector<Vertex> mate(g.order(), -1);
  std::vector<char> visited(g.order());
  auto augment = [&](auto&& self, Vertex u) -> bool {
    for (Vertex w : g.neighbors(u) & right) {
      if (visited[w]) continue;
      visited[w] = 1;
      if (mate[w] < 0 || self(self, mate[w])) {
        mate[w] = u;
        mate[u] = w;
        return true;
      }
    }
    return false;
  };
  for (Vertex u : left) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, u);
  }
  return mate;
}

}  // namespace detail

/// Maximum matching of an arbitrary graph (blossom algorithm).
inline Matching maximum_matching(const Graph& g) { return detail::from_mates(detail::Blossom(g).run()); }

inline bool has_perfect_matching(const Graph& g) { return 2 * maximum_matching(g).size() == g.order(); }

/// Maximum matching of a bipartite graph by augmenting paths.
inline Matching maximum_matching_bipartite(const Graph& g) {
  const Bipartition bp = detail::require_bipartite(bipartition(g));
  return detail::from_mates(detail::kuhn(g, bp.part(0), bp.part(1)));
}

/// Hall violator: X with |N(X)| < |X|.
struct HallViolator {
  VertexSet x;
  VertexSet neighborhood;
};

/// A matching saturating `s`, or a Hall violator X within `s`. `s` must lie
/// inside one side of the bipartition of `g`.
inline std::variant<Matching, HallViolator> matching_saturating(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("vertex set does not match graph order");
  const Bipartition bp = detail::require_bipartite(bipartition(g));
  const VertexSet side0 = bp.part(0);
  if (!s.is_subset_of(side0) && !s.is_subset_of(~side0)) throw InputError("set straddles both bipartition sides");
  const VertexSet other = g.neighborhood(s);
  std::vector<Vertex> mate = detail::kuhn(g, s, other);
  for (Vertex root : s) {
    if (mate[root] >= 0) continue;
    // Alternating BFS: reachable s-vertices form the violator.
    VertexSet x(g.order(), {root}), nx(g.order());
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (nx.contains(w)) continue;
        nx.insert(w);
        if (mate[w] >= 0 && !x.contains(mate[w])) {
          x.insert(mate[w]);
          queue.push_back(mate[w]);
        }
      }
    }
    return HallViolator{x, nx};
  }
  Matching m;
  for (Vertex u : s) m.edges.emplace_back(u, mate[u]);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

/// Every maximal matching of `h` covers `v`, decided in polynomial time for
/// bipartite `h`: no matching of h - v saturates N(v). Only vertices within
/// distance two of `v` take part.
inline bool is_strong_vertex_bipartite(const Graph& h, Vertex v) {
  if (!h.contains_vertex(v)) throw InputError("vertex label " + std::to_string(v) + " out of range");
  if (!is_bipartite(h)) throw InputError("graph is not bipartite");
  const VertexSet nv = h.neighbors(v);
  if (nv.empty()) return false;
  VertexSet second = h.neighborhood(nv);
  second.erase(v);
  const std::vector<Vertex> mate = detail::kuhn(h, nv, second);
  return std::any_of(nv.begin(), nv.end(), [&](Vertex u) { return mate[u] < 0; });
}

/// Two maximal matchings of different sizes.
struct MatchingSizeWitness {
  EdgeSet smaller;
  EdgeSet larger;
};

struct EquimatchableVerdict {
  bool equimatchable = false;
  std::optional<MatchingSizeWitness> witness;
};

/// Polynomial test for connected bipartite `h`: some bipartition side
/// consists of strong vertices only.
inline bool is_equimatchable_bipartite(const Graph& h) {
  if (!is_connected(h)) throw InputError("graph is not connected");
  const Bipartition bp = detail::require_bipartite(bipartition(h));
  for (int side : {0, 1}) {
    const VertexSet part = bp.part(side);
    if (std::all_of(part.begin(), part.end(), [&](Vertex u) { return is_strong_vertex_bipartite(h, u); }))
      return true;
  }
  return false;
}

/// Oracle: the first maximal matching whose size differs from the first one.
inline EquimatchableVerdict is_equimatchable_oracle(const Graph& h, const OracleConfig& cfg = OracleConfig::from_env()) {
  EquimatchableVerdict verdict{true, std::nullopt};
  std::optional<EdgeSet> first;
  for_each_maximal_matching(
      h,
      [&](const EdgeSet& m) {
        if (!first) {
          first = m;
          return true;
        }
        if (m.size() == first->size()) return true;
        verdict.equimatchable = false;
        verdict.witness = m.size() < first->size() ? MatchingSizeWitness{m, *first} : MatchingSizeWitness{*first, m};
        return false;
      },
      cfg);
  return verdict;
}

/// Bipartite graphs take the polynomial route per component (a witness is
/// then attached only when the oracle fits under the cap); everything else
/// goes to the oracle.
inline EquimatchableVerdict is_equimatchable(const Graph& h, const OracleConfig& cfg = OracleConfig::from_env()) {
  if (!is_bipartite(h)) return is_equimatchable_oracle(h, cfg);
  bool all = true;
  for (const VertexSet& comp : components(h))
    if (!is_equimatchable_bipartite(induced_subgraph(h, comp).graph)) {
      all = false;
      break;
    }
  if (all) return {true, std::nullopt};
  if (h.edge_count() <= cfg.max_vertices) return is_equimatchable_oracle(h, cfg);
  return {false, std::nullopt};
}

}  // namespace strongclique
