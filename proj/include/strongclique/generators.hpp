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
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "strongclique/coloring.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/io.hpp"
#include "strongclique/oracles.hpp"
#include "strongclique/predicates.hpp"
#include "strongclique/transforms.hpp"

namespace strongclique {

/// F_n for n >= 2: n six-vertex gadgets on a cycle. Gadget i uses labels
/// 6i..6i+5 for x, x', y, y', z, z'; it has triangles xyz and x'y'z' and
/// rungs yy', zz'. Consecutive gadgets are joined by x_i x'_{i+1}.
inline Graph gen_Fn(int n) {
  if (n < 2) throw InputError("F_n needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const Vertex x = 6 * i, xp = x + 1, y = x + 2, yp = x + 3, z = x + 4, zp = x + 5;
    edges.insert(edges.end(), {Edge(x, y), Edge(x, z), Edge(y, z), Edge(xp, yp), Edge(xp, zp), Edge(yp, zp),
                               Edge(y, yp), Edge(z, zp), Edge(x, 6 * ((i + 1) % n) + 1)});
  }
  return Graph(6 * n, edges);
}

/// 3-CNF formula; literal +i is x_i and -i its negation (1-based).
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  /// Throws unless every literal names a variable in 1..num_vars and, when
  /// `strict`, no clause holds both x_i and its negation.
  void validate(bool strict = true) const {
    if (num_vars < 0) throw InputError("negative variable count");
    for (std::size_t j = 0; j < clauses.size(); ++j)
      for (int a : clauses[j]) {
        if (a == 0 || std::abs(a) > num_vars)
          throw InputError("clause " + std::to_string(j + 1) + " has literal " + std::to_string(a) + " out of range");
        if (strict)
          for (int b : clauses[j])
            if (a == -b)
              throw InputError("clause " + std::to_string(j + 1) + " contains a complementary pair");
      }
  }
};

/// Reads DIMACS CNF ("p cnf V C", clauses terminated by 0, 'c' comments).
/// Every clause must have exactly three literals.
inline CnfFormula parse_dimacs(std::string_view text) {
  using Kind = ParseError::Kind;
  CnfFormula f;
  long declared = -1;
  std::vector<int> pending;
  std::size_t line_no = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c" || tokens[0].front() == '%') continue;
    if (tokens[0] == "p") {
      long v = 0, c = 0;
      if (declared >= 0 || tokens.size() != 4 || tokens[1] != "cnf" || !detail::parse_int(tokens[2], v) ||
          !detail::parse_int(tokens[3], c) || v < 0 || c < 0)
        throw ParseError("malformed problem line", line_no, Kind::line);
      f.num_vars = static_cast<int>(v);
      declared = c;
      continue;
    }
    if (declared < 0) throw ParseError("clause before the problem line", line_no, Kind::line);
    for (std::string_view tok : tokens) {
      long lit = 0;
      if (!detail::parse_int(tok, lit)) throw ParseError("expected an integer literal", line_no, Kind::line);
      if (lit == 0) {
        if (pending.size() != 3) throw ParseError("clause does not have exactly three literals", line_no, Kind::line);
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (std::labs(lit) > f.num_vars) throw ParseError("literal out of range", line_no, Kind::line);
      pending.push_back(static_cast<int>(lit));
    }
  }
  if (declared < 0) throw ParseError("missing problem line", line_no, Kind::line);
  if (!pending.empty()) throw ParseError("unterminated clause", line_no, Kind::line);
  if (static_cast<long>(f.clauses.size()) != declared)
    throw ParseError("declared " + std::to_string(declared) + " clauses but found " + std::to_string(f.clauses.size()),
                     line_no, Kind::line);
  return f;
}

/// Truth-table satisfiability for up to 20 variables.
inline bool is_satisfiable(const CnfFormula& f) {
  if (f.num_vars > 20) throw InputError("truth-table evaluation is limited to 20 variables");
  for (std::uint32_t assignment = 0; assignment < (1u << f.num_vars); ++assignment) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (int lit : clause) {
        const bool value = (assignment >> (std::abs(lit) - 1)) & 1u;
        if (value == (lit > 0)) any = true;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

struct SatGraph {
  Graph graph;
  /// "c1".."cm", then "x1", "~x1", "x2", ... per vertex.
  std::vector<std::string> labels;

  /// Vertex of literal +i / -i.
  static Vertex literal_vertex(int clause_count, int lit) {
    return clause_count + 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
  }
};

/// Clause vertices 0..m-1 form a clique; x_i and its negation sit at
/// m + 2(i-1) and m + 2(i-1) + 1 and are adjacent; clause j is adjacent to
/// each literal it contains.
inline SatGraph gen_sat_graph(const CnfFormula& f, bool strict = true) {
  f.validate(strict);
  const int m = static_cast<int>(f.clauses.size());
  SatGraph out;
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) edges.emplace_back(a, b);
  for (int i = 1; i <= f.num_vars; ++i)
    edges.emplace_back(SatGraph::literal_vertex(m, i), SatGraph::literal_vertex(m, -i));
  for (int j = 0; j < m; ++j) {
    for (int lit : f.clauses[j]) {
      const Edge e(j, SatGraph::literal_vertex(m, lit));
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
  }
  out.graph = Graph(m + 2 * f.num_vars, edges);
  for (int j = 0; j < m; ++j) out.labels.push_back("c" + std::to_string(j + 1));
  for (int i = 1; i <= f.num_vars; ++i) {
    out.labels.push_back("x" + std::to_string(i));
    out.labels.push_back("~x" + std::to_string(i));
  }
  return out;
}

/// Pads every maximal clique C of g with a new clique of k - |C| vertices
/// complete to C.
inline Graph gen_kcolor_gadget(const Graph& g, int k, const OracleConfig& cfg = OracleConfig::from_env()) {
  if (clique_number(g) > k) throw InputError("clique number exceeds k");
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (const VertexSet& c : maximal_cliques(g, cfg)) {
    const int first = next;
    next += k - c.size();
    for (Vertex a = first; a < next; ++a) {
      for (Vertex b = a + 1; b < next; ++b) edges.emplace_back(a, b);
      for (Vertex v : c) edges.emplace_back(a, v);
    }
  }
  return Graph(next, edges);
}

/// Triangle-free g: every edge becomes a triangle with a new vertex (G1,
/// labels n..n+m-1 in edge order), then every vertex v of G1 gets two new
/// adjacent neighbors at |G1| + 2v and |G1| + 2v + 1.
inline Graph gen_zaare_counterexample(const Graph& g) {
  if (find_triangle(g)) throw InputError("graph is not triangle-free");
  const int n = g.order();
  const auto base = g.edges();
  const int n1 = n + static_cast<int>(base.size());
  std::vector<Edge> edges = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    edges.emplace_back(base[i].u, n + static_cast<int>(i));
    edges.emplace_back(base[i].v, n + static_cast<int>(i));
  }
  for (Vertex v = 0; v < n1; ++v) {
    const Vertex a = n1 + 2 * v, b = a + 1;
    edges.insert(edges.end(), {Edge(v, a), Edge(v, b), Edge(a, b)});
  }
  return Graph(3 * n1, edges);
}

inline Graph gen_cycle(int n) {
  if (n < 3) throw InputError("cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph gen_path(int n) {
  if (n < 1) throw InputError("paths need at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph gen_complete(int n) {
  if (n < 0) throw InputError("negative order");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

/// Sides 0..m-1 and m..m+n-1.
inline Graph gen_complete_bipartite(int m, int n) {
  if (m < 0 || n < 0) throw InputError("negative side size");
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) edges.emplace_back(a, m + b);
  return Graph(m + n, edges);
}

/// Corona of the odd cycle C_len, len >= 5.
inline Graph gen_corona_counterexample(int len) {
  if (len < 5 || len % 2 == 0) throw InputError("cycle length must be odd and at least 5");
  return corona(gen_cycle(len));
}

inline Graph gen_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, edges);
}

/// Mycielskian of C5: cycle 0..4, shadow 5+i adjacent to the cycle
/// neighbors of i, apex 10 adjacent to every shadow.
inline Graph gen_grotzsch() {
  return Graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 1}, {5, 4}, {6, 0}, {6, 2}, {7, 1},
                    {7, 3}, {8, 2}, {8, 4}, {9, 3}, {9, 0}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 9}});
}

namespace detail {

inline int parse_size(std::string_view s, std::string_view name) {
  long v = 0;
  if (s.empty() || !parse_int(s, v) || v < 0 || v > 100000) throw InputError("bad size in graph name \"" + std::string(name) + "\"");
  return static_cast<int>(v);
}

}  // namespace detail

/// Named graphs: K<n>, K<m>,<n> (also K_{m,n}), C<n>, P<n>, petersen,
/// grotzsch, bull, paw, diamond, claw, co-C6.
inline Graph gen_named(std::string_view name) {
  if (name == "petersen") return gen_petersen();
  if (name == "grotzsch") return gen_grotzsch();
  if (name == "bull") return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
  if (name == "paw") return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  if (name == "diamond") return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "claw") return gen_complete_bipartite(1, 3);
  if (name == "co-C6") return complement(gen_cycle(6));
  if (name.size() >= 2) {
    std::string body(name.substr(1));
    if (body.size() >= 3 && body.front() == '_' && body[1] == '{' && body.back() == '}')
      body = body.substr(2, body.size() - 3);
    switch (name.front()) {
      case 'K': {
        const auto comma = body.find(',');
        if (comma == std::string::npos) return gen_complete(detail::parse_size(body, name));
        return gen_complete_bipartite(detail::parse_size(std::string_view(body).substr(0, comma), name),
                                      detail::parse_size(std::string_view(body).substr(comma + 1), name));
      }
      case 'C': return gen_cycle(detail::parse_size(body, name));
      case 'P': return gen_path(detail::parse_size(body, name));
      default: break;
    }
  }
  throw InputError("unknown graph name \"" + std::string(name) + "\"");
}

/// complement(L(h)).
inline Graph gen_complement_line(const Graph& h) { return complement(line_graph(h).graph); }

}  // namespace strongclique
