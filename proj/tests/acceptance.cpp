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

// Exhaustive acceptance suites. Usage: acceptance <criterion 1..10>, or no
// argument for all of them. Prints one "criterion N: PASS|FAIL" line each and
// exits non-zero if any fails.

#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "strongclique/strongclique.hpp"

namespace strongclique {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::ostringstream failures;
  int failure_count = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (++failure_count <= 5) failures << "  mismatch: " << what << '\n';
  }
};

const std::vector<std::vector<SmallGraph>>& corpus(int max_order) {
  static std::vector<std::vector<SmallGraph>> cache;
  if (static_cast<int>(cache.size()) <= max_order) cache = all_graphs_up_to(max_order);
  return cache;
}

template <class F>
void for_each_graph(int min_order, int max_order, bool connected_only, F&& f) {
  for (int n = min_order; n <= max_order; ++n)
    for (const SmallGraph& s : corpus(max_order)[n])
      if (!connected_only || is_connected_small(s)) f(s.to_graph());
}

// Strong cliques straight from the definition: maximal cliques meeting every
// enumerated maximal independent set.
std::vector<VertexSet> strong_cliques_by_definition(const Graph& g) {
  const auto mis = maximal_independent_sets(g);
  std::vector<VertexSet> out;
  for (const VertexSet& c : maximal_cliques(g)) {
    bool all = true;
    for (const VertexSet& s : mis) all = all && s.intersects(c);
    if (all) out.push_back(c);
  }
  return out;
}

// Exact cover of V(g) by the given sets, by backtracking on the lowest
// uncovered vertex.
bool exact_cover(const std::vector<VertexSet>& sets, VertexSet uncovered) {
  if (uncovered.empty()) return true;
  const Vertex v = uncovered.first();
  for (const VertexSet& s : sets)
    if (s.contains(v) && s.is_subset_of(uncovered) && exact_cover(sets, uncovered - s)) return true;
  return false;
}

std::string g6(const Graph& g) { return write_graph6(g); }

// 1. i = theta, alpha-clique cover search, well-covered and semi-perfect,
// and partitions into strong cliques found from the definition all agree.
Outcome criterion1() {
  Outcome o;
  int graphs = 0, localizable = 0;
  for_each_graph(0, 8, false, [&](const Graph& g) {
    ++graphs;
    const bool oracle = is_localizable_oracle(g).localizable;
    const auto search = strong_partition_search(g);
    const bool props = is_well_covered(g).holds && is_semi_perfect(g);
    const bool definition = exact_cover(strong_cliques_by_definition(g), g.vertices());
    localizable += oracle;
    o.expect(oracle == search.has_value() && oracle == props && oracle == definition, g6(g));
    if (search) o.expect(verify_strong_partition(g, *search).valid, g6(g) + " partition");
  });
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(localizable) + " localizable";
  return o;
}

// 2. Edge lemma against the domination search and against MIS enumeration.
Outcome criterion2() {
  Outcome o;
  long edges = 0, strong = 0;
  for_each_graph(2, 8, false, [&](const Graph& g) {
    for (const Edge& e : g.edges()) {
      ++edges;
      const VertexSet c(g.order(), {e.u, e.v});
      const bool lemma = is_strong_edge(g, e);
      strong += lemma;
      o.expect(lemma == is_strong_clique(g, c).strong && lemma == is_strong_clique_enum(g, c).strong,
               g6(g) + " edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  });
  o.detail = std::to_string(edges) + " edges, " + std::to_string(strong) + " strong";
  return o;
}

// 3. Triangle-free recognizer against the oracle.
Outcome criterion3() {
  Outcome o;
  int graphs = 0, localizable = 0;
  for_each_graph(1, 9, true, [&](const Graph& g) {
    if (!is_triangle_free(g)) return;
    ++graphs;
    const LocalizabilityVerdict r = is_localizable_triangle_free(g);
    localizable += r.localizable;
    o.expect(r.localizable == is_localizable_oracle(g).localizable, g6(g));
    if (r.certificate) o.expect(verify_strong_partition(g, *r.certificate).valid, g6(g) + " certificate");
  });
  o.detail = std::to_string(graphs) + " connected triangle-free graphs, " + std::to_string(localizable) + " localizable";
  return o;
}

// 4. C4-free recognizer against the oracle; strong cliques are exactly the
// simplicial ones.
Outcome criterion4() {
  Outcome o;
  int graphs = 0, localizable = 0;
  for_each_graph(1, 9, true, [&](const Graph& g) {
    if (!is_c4_free(g)) return;
    ++graphs;
    const LocalizabilityVerdict r = is_localizable_c4_free(g);
    localizable += r.localizable;
    o.expect(r.localizable == is_localizable_oracle(g).localizable, g6(g));
    if (r.certificate) o.expect(verify_strong_partition(g, *r.certificate).valid, g6(g) + " certificate");
    std::set<std::vector<Vertex>> strong, simplicial;
    for (const VertexSet& c : maximal_cliques(g))
      if (is_strong_clique(g, c).strong) strong.insert(c.to_vector());
    for (const VertexSet& c : simplicial_cliques(g).cliques) simplicial.insert(c.to_vector());
    o.expect(strong == simplicial, g6(g) + " strong vs simplicial cliques");
  });
  o.detail = std::to_string(graphs) + " connected C4-free graphs, " + std::to_string(localizable) + " localizable";
  return o;
}

// 5. Cubic classification.
Outcome criterion5() {
  Outcome o;
  const std::vector<Graph> expected{gen_complete(4), gen_complete_bipartite(3, 3), gen_named("co-C6"), gen_Fn(2)};
  int graphs = 0, localizable = 0;
  const auto cubic = connected_cubic_graphs_up_to(14);
  for (int n = 4; n <= 14; n += 2)
    for (const SmallGraph& s : cubic[n]) {
      const Graph g = s.to_graph();
      ++graphs;
      const LocalizabilityVerdict r = is_localizable_cubic(g);
      localizable += r.localizable;
      o.expect(r.localizable == is_localizable_oracle(g).localizable, g6(g));
      bool listed = false;
      for (const Graph& e : expected) listed = listed || are_isomorphic(g, e);
      o.expect(r.localizable == listed, g6(g) + " membership");
      if (r.certificate) o.expect(verify_strong_partition(g, *r.certificate).valid, g6(g) + " certificate");
    }
  o.expect(localizable == 4, "expected exactly four localizable cubic graphs");
  o.detail = std::to_string(graphs) + " connected cubic graphs, " + std::to_string(localizable) + " localizable";
  return o;
}

// 6. Line-graph theorem against the oracle on L(h), with certifiers checked
// on h and as strong partitions of L(h).
Outcome criterion6() {
  Outcome o;
  int graphs = 0, localizable = 0;
  for_each_graph(1, 9, true, [&](const Graph& h) {
    ++graphs;
    const LineVerdict v = is_line_localizable(h);
    const LineGraph lg = line_graph(h);
    localizable += v.localizable;
    // L(K9) has 36 vertices.
    const OracleConfig cfg{36};
    o.expect(v.localizable == is_localizable_oracle(lg.graph, cfg).localizable, g6(h));
    o.expect(v.localizable == v.certifier.has_value(), g6(h) + " certifier presence");
    if (v.certifier) {
      o.expect(verify_line_certifier(h, *v.certifier).valid, g6(h) + " certifier");
      o.expect(verify_strong_partition(lg.graph, certifier_partition(lg, *v.certifier), cfg).valid, g6(h) + " partition");
    }
  });
  o.detail = std::to_string(graphs) + " connected roots, " + std::to_string(localizable) + " with localizable line graph";
  return o;
}

// 7. Corona of odd cycles, and the triangle-extension construction on the
// Grotzsch graph.
Outcome criterion7() {
  Outcome o;
  for (int len : {5, 7}) {
    const Graph g = gen_corona_counterexample(len);
    const std::string name = "corona(C" + std::to_string(len) + ")";
    o.expect(is_localizable_oracle(g).localizable, name + " localizable");
    o.expect(is_co_well_covered(g).holds, name + " co-well-covered");
    o.expect(!find_strong_independent_set(g).has_value(), name + " has a strong independent set");
  }

  const Graph z = gen_zaare_counterexample(gen_grotzsch());
  const OracleConfig wide{z.order()};
  // Localizable: the closed neighborhoods of the new pendant pairs are
  // simplicial cliques that partition V and each is verified strong.
  CliquePartition p;
  const int n1 = z.order() / 3;
  for (Vertex v = 0; v < n1; ++v) p.parts.push_back(VertexSet(z.order(), {v, n1 + 2 * v, n1 + 2 * v + 1}));
  o.expect(verify_strong_partition(z, p, wide).valid, "zaare(grotzsch) partition");
  o.expect(is_co_well_covered(z, wide).holds, "zaare(grotzsch) co-well-covered");
  // Complement: alpha = omega(z) = 3, theta = chi(z) = 4, and i <= alpha.
  const Graph co = complement(z);
  const int alpha = independence_number(co), theta = clique_cover_number(co);
  o.expect(alpha == 3, "alpha of the complement is " + std::to_string(alpha));
  o.expect(theta == 4, "theta of the complement is " + std::to_string(theta));
  o.expect(!k_coloring(z, 3).has_value(), "zaare(grotzsch) 3-colorable");
  o.detail = "zaare(grotzsch): n=" + std::to_string(z.order()) + ", complement alpha=" + std::to_string(alpha) +
             " theta=" + std::to_string(theta);
  return o;
}

// 8. Chromatic index and complements of line graphs.
Outcome criterion8() {
  Outcome o;
  const Graph k33 = gen_complement_line(gen_complete_bipartite(3, 3));
  o.expect(is_localizable_oracle(k33).localizable, "complement(L(K33)) localizable");
  o.expect(independence_number(k33) == 3, "alpha(complement(L(K33))) = 3");
  o.expect(chromatic_index(gen_complete_bipartite(3, 3)) == 3, "chi'(K33) = 3");
  const Graph pet = gen_complement_line(gen_petersen());
  const LocalizabilityVerdict v = is_localizable_oracle(pet);
  o.expect(!v.localizable, "complement(L(Petersen)) not localizable");
  const int chi_prime = chromatic_index(gen_petersen());
  o.expect(chi_prime == 4, "chi'(Petersen) = " + std::to_string(chi_prime));
  o.expect(clique_cover_number(pet) == chi_prime, "theta(complement(L(Petersen))) = chi'(Petersen)");
  o.detail = "chi'(Petersen)=" + std::to_string(chi_prime);
  return o;
}

// Perfect matching inside `edges`, by backtracking.
bool perfect_matching_within(const std::vector<Edge>& edges, VertexSet uncovered, std::vector<Edge>& chosen) {
  if (uncovered.empty()) return true;
  const Vertex v = uncovered.first();
  for (const Edge& e : edges) {
    if (!e.touches(v) || !uncovered.contains(e.other(v))) continue;
    chosen.push_back(e);
    VertexSet rest = uncovered;
    rest.erase(e.u);
    rest.erase(e.v);
    if (perfect_matching_within(edges, rest, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// 9. Every very well-covered graph splits into strong edges.
Outcome criterion9() {
  Outcome o;
  int graphs = 0;
  for_each_graph(2, 8, false, [&](const Graph& g) {
    if (!is_very_well_covered(g)) return;
    ++graphs;
    std::vector<Edge> strong;
    for (const Edge& e : g.edges())
      if (is_strong_clique_enum(g, VertexSet(g.order(), {e.u, e.v})).strong) strong.push_back(e);
    std::vector<Edge> chosen;
    const bool found = perfect_matching_within(strong, g.vertices(), chosen);
    o.expect(found, g6(g));
    if (!found) return;
    CliquePartition p;
    for (const Edge& e : chosen) p.parts.push_back(VertexSet(g.order(), {e.u, e.v}));
    o.expect(verify_strong_partition(g, p).valid, g6(g) + " partition");
  });
  o.detail = std::to_string(graphs) + " very well-covered graphs";
  return o;
}

// 10. SAT gadget: every strict 3-CNF over at most three variables with one to
// four clauses. Clauses are literal multisets without a complementary pair;
// formulas are clause multisets.
Outcome criterion10() {
  Outcome o;
  long formulas = 0, unsat = 0;
  for (int vars = 1; vars <= 3; ++vars) {
    std::vector<int> literals;
    for (int i = 1; i <= vars; ++i) literals.insert(literals.end(), {i, -i});
    std::vector<std::array<int, 3>> clauses;
    const int L = static_cast<int>(literals.size());
    for (int a = 0; a < L; ++a)
      for (int b = a; b < L; ++b)
        for (int c = b; c < L; ++c) {
          const std::array<int, 3> cl{literals[a], literals[b], literals[c]};
          if (cl[0] == -cl[1] || cl[0] == -cl[2] || cl[1] == -cl[2]) continue;
          clauses.push_back(cl);
        }
    const int C = static_cast<int>(clauses.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
      if (!pick.empty()) {
        CnfFormula f{vars, {}};
        for (int i : pick) f.clauses.push_back(clauses[i]);
        const Graph g = gen_sat_graph(f).graph;
        const bool sat = is_satisfiable(f);
        ++formulas;
        unsat += !sat;
        std::ostringstream id;
        for (const auto& cl : f.clauses) id << '(' << cl[0] << ' ' << cl[1] << ' ' << cl[2] << ')';
        o.expect(is_well_covered(g).holds == !sat, id.str());
        o.expect(is_weakly_chordal(g), id.str() + " weakly chordal");
      }
      if (pick.size() == 4) return;
      for (int i = from; i < C; ++i) {
        pick.push_back(i);
        rec(i);
        pick.pop_back();
      }
    };
    rec(0);
  }
  o.detail = std::to_string(formulas) + " formulas, " + std::to_string(unsat) + " unsatisfiable";
  return o;
}

int run_one(int k) {
  static const std::function<Outcome()> suites[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = suites[k - 1]();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail;
  if (o.failure_count) std::cout << "; " << o.failure_count << " mismatches";
  std::cout << "; " << static_cast<int>(secs * 10) / 10.0 << " s)\n" << o.failures.str() << std::flush;
  return o.pass ? 0 : 1;
}

}  // namespace
}  // namespace strongclique

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: acceptance [criterion 1..10]\n";
    return 64;
  }
  if (argc == 2) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > 10) {
      std::cerr << "criterion must be between 1 and 10\n";
      return 64;
    }
    return strongclique::run_one(k);
  }
  int failed = 0;
  for (int k = 1; k <= 10; ++k) failed += strongclique::run_one(k);
  return failed ? 1 : 0;
}
