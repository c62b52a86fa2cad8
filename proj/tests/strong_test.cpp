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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace strongclique {
namespace {

using testing::vs;

TEST(StrongClique, Examples) {
  EXPECT_TRUE(is_strong_clique(gen_complete(4), VertexSet::full(4)).strong);
  const StrongnessVerdict c5 = is_strong_clique(gen_cycle(5), vs(5, {4}));
  EXPECT_FALSE(c5.strong);
  ASSERT_TRUE(c5.witness);
  EXPECT_EQ(std::get<VertexSet>(*c5.witness).to_vector(), std::vector<Vertex>({0, 2}));
  const Graph k33 = gen_complete_bipartite(3, 3);
  for (const Edge& e : k33.edges()) EXPECT_TRUE(is_strong_clique(k33, vs(6, {e.u, e.v})).strong);
}

TEST(StrongClique, NonCliqueIsAnInputError) {
  EXPECT_THROW(is_strong_clique(gen_path(3), vs(3, {0, 2})), InputError);
  EXPECT_THROW(is_strong_clique(gen_path(3), vs(4, {0})), InputError);
}

TEST(StrongClique, NonMaximalCliqueIsNotStrong) {
  const StrongnessVerdict v = is_strong_clique(gen_complete(3), vs(3, {0, 1}));
  EXPECT_FALSE(v.strong);
  EXPECT_EQ(std::get<VertexSet>(*v.witness).to_vector(), std::vector<Vertex>({2}));
}

TEST(StrongClique, DominationSearchMatchesEnumeration) {
  for (int n = 1; n <= 7; ++n)
    for (const SmallGraph& s : testing::corpus(7)[n]) {
      const Graph g = s.to_graph();
      for (const VertexSet& c : maximal_cliques(g)) {
        const StrongnessVerdict a = is_strong_clique(g, c);
        ASSERT_EQ(a.strong, is_strong_clique_enum(g, c).strong) << write_graph6(g);
        if (!a.strong) {
          EXPECT_TRUE(detail::avoids_clique(g, std::get<VertexSet>(*a.witness), c));
        }
      }
    }
}

TEST(StrongEdge, LemmaExamples) {
  EXPECT_TRUE(is_strong_edge(gen_cycle(4), Edge(0, 1)));
  EXPECT_FALSE(is_strong_edge(gen_complete(3), Edge(0, 1)));
  EXPECT_FALSE(is_strong_edge(gen_path(4), Edge(1, 2)));
  const StrongnessVerdict oracle = is_strong_clique(gen_path(4), vs(4, {1, 2}));
  EXPECT_EQ(std::get<VertexSet>(*oracle.witness).to_vector(), std::vector<Vertex>({0, 3}));
  EXPECT_THROW(is_strong_edge(gen_path(4), Edge(0, 2)), InputError);
}

TEST(StrongEdge, LemmaMatchesOracleUpToSeven) {
  for (int n = 2; n <= 7; ++n)
    for (const SmallGraph& s : testing::corpus(7)[n]) {
      const Graph g = s.to_graph();
      for (const Edge& e : g.edges())
        ASSERT_EQ(is_strong_edge(g, e), is_strong_clique(g, vs(n, {e.u, e.v})).strong) << write_graph6(g);
    }
}

TEST(StrongEdge, RegularGraphsHaveOneOnlyWhenCompleteBipartite) {
  // r = 2: connected 2-regular graphs are cycles.
  for (int n = 3; n <= 10; ++n) {
    const Graph c = gen_cycle(n);
    EXPECT_EQ(is_strong_edge(c, Edge(0, 1)), n == 4) << n;
  }
  const auto cubic = connected_cubic_graphs_up_to(10);
  for (const auto& order : cubic)
    for (const SmallGraph& s : order) {
      const Graph g = s.to_graph();
      bool any = false;
      for (const Edge& e : g.edges()) any = any || is_strong_edge(g, e);
      EXPECT_EQ(any, are_isomorphic(g, gen_complete_bipartite(3, 3))) << write_graph6(g);
    }
}

TEST(Simplicial, Examples) {
  const SimplicialCliques p4 = simplicial_cliques(gen_path(4));
  ASSERT_EQ(p4.by_vertex.size(), 2u);
  EXPECT_EQ(p4.by_vertex[0].first, 0);
  EXPECT_EQ(p4.by_vertex[1].first, 3);
  EXPECT_EQ(testing::as_lists(p4.cliques), (std::set<std::vector<Vertex>>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(simplicial_cliques(gen_cycle(5)).cliques.empty());
  const SimplicialCliques k4 = simplicial_cliques(gen_complete(4));
  EXPECT_EQ(k4.by_vertex.size(), 4u);
  ASSERT_EQ(k4.cliques.size(), 1u);
  EXPECT_EQ(k4.cliques[0], VertexSet::full(4));
}

TEST(Simplicial, C4FreeCriterion) {
  const Graph paw = testing::paw();
  EXPECT_TRUE(is_strong_clique_c4free(paw, vs(4, {2, 3})));
  EXPECT_TRUE(is_strong_clique_c4free(paw, vs(4, {0, 1, 2})));
  EXPECT_FALSE(is_strong_clique_c4free(gen_path(4), vs(4, {1, 2})));
  EXPECT_THROW(is_strong_clique_c4free(gen_cycle(4), vs(4, {0, 1})), InputError);
}

TEST(Simplicial, SimplicialCliquesAreStrongAndCriterionMatchesOracle) {
  for (int n = 1; n <= 7; ++n)
    for (const SmallGraph& s : testing::corpus(7)[n]) {
      const Graph g = s.to_graph();
      for (const VertexSet& c : simplicial_cliques(g).cliques) EXPECT_TRUE(is_strong_clique(g, c).strong);
      if (!is_c4_free(g)) continue;
      for (const VertexSet& c : maximal_cliques(g))
        ASSERT_EQ(is_strong_clique_c4free(g, c), is_strong_clique(g, c).strong) << write_graph6(g);
    }
}

TEST(StrongVertex, Examples) {
  EXPECT_TRUE(is_strong_vertex(gen_complete(2), 0).strong);
  EXPECT_TRUE(is_strong_vertex(gen_path(3), 1).strong);
  const StrongnessVerdict leaf = is_strong_vertex(gen_path(3), 0);
  EXPECT_FALSE(leaf.strong);
  EXPECT_EQ(std::get<EdgeSet>(*leaf.witness), EdgeSet({Edge(1, 2)}));
  EXPECT_TRUE(is_strong_vertex(gen_complete_bipartite(1, 3), 0).strong);
}

TEST(StrongTriangle, Examples) {
  const Graph paw = testing::paw();
  EXPECT_TRUE(is_strong_triangle(paw, vs(4, {0, 1, 2})).strong);
  const TriangleClassification pc = classify_strong_triangle(paw, vs(4, {0, 1, 2}));
  EXPECT_EQ(pc.kind, TriangleClass::pendant_triangle);
  EXPECT_EQ(pc.root, 2);
  EXPECT_STREQ(to_string(pc.kind), "pendant-triangle");

  const Graph bull = testing::bull();
  const StrongnessVerdict b = is_strong_triangle(bull, vs(5, {1, 2, 4}));
  EXPECT_FALSE(b.strong);
  const Bull w = std::get<Bull>(*b.witness);
  EXPECT_EQ(std::set<Vertex>(w.begin(), w.end()), (std::set<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(detail::is_bull(bull, w));
  EXPECT_EQ(classify_strong_triangle(bull, vs(5, {1, 2, 4})).kind, TriangleClass::not_strong);

  // K4 on 0..3 plus pendant 4 at 3.
  const Graph k4p(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  EXPECT_TRUE(is_strong_triangle(k4p, vs(5, {0, 1, 2})).strong);
  const TriangleClassification kc = classify_strong_triangle(k4p, vs(5, {0, 1, 2}));
  EXPECT_EQ(kc.kind, TriangleClass::pendant_k4);
  EXPECT_EQ(kc.root, 3);
  EXPECT_EQ(*kc.pendant, vs(5, {0, 1, 2, 3}));

  // Diamond 0,1,2,3 (tips 0 and 3) with pendant 4 at tip 3.
  const Graph dp(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const TriangleClassification dc = classify_strong_triangle(dp, vs(5, {0, 1, 2}));
  EXPECT_EQ(dc.kind, TriangleClass::pendant_diamond);
  EXPECT_EQ(dc.root, 3);
  EXPECT_EQ(classify_strong_triangle(gen_complete(3), VertexSet::full(3)).kind, TriangleClass::small_component);
}

TEST(StrongTriangle, BullCriterionMatchesMatchingOracle) {
  for (int n = 3; n <= 7; ++n)
    for (const SmallGraph& s : testing::corpus(7)[n]) {
      const Graph h = s.to_graph();
      for (const auto& t : triangles(h)) {
        const VertexSet tv = vs(n, {t[0], t[1], t[2]});
        const bool strong = is_strong_triangle(h, tv).strong;
        ASSERT_EQ(strong, is_strong_triangle_oracle(h, tv).strong) << write_graph6(h);
        EXPECT_EQ(strong, classify_strong_triangle(h, tv).kind != TriangleClass::not_strong);
      }
    }
}

TEST(StrongTriangle, StrongTrianglesAreEdgeDisjoint) {
  const Graph k4 = gen_complete(4), diamond = gen_named("diamond");
  for (int n = 3; n <= 7; ++n)
    for (const SmallGraph& s : testing::corpus(7)[n]) {
      const Graph h = s.to_graph();
      if (!is_connected(h) || are_isomorphic(h, k4) || are_isomorphic(h, diamond)) continue;
      std::vector<VertexSet> strong;
      for (const auto& t : triangles(h)) {
        const VertexSet tv = vs(n, {t[0], t[1], t[2]});
        if (is_strong_triangle(h, tv).strong) strong.push_back(tv);
      }
      for (std::size_t i = 0; i < strong.size(); ++i)
        for (std::size_t j = i + 1; j < strong.size(); ++j)
          EXPECT_LE(strong[i].intersection_size(strong[j]), 1) << write_graph6(h);
    }
}

TEST(EveryVertexInStrongClique, CubicExamples) {
  EXPECT_TRUE(every_vertex_in_strong_clique(gen_Fn(2), testing::kTestCap));
  EXPECT_FALSE(every_vertex_in_strong_clique(gen_petersen()));
  EXPECT_TRUE(every_vertex_in_strong_clique(gen_named("co-C6")));
}

}  // namespace
}  // namespace strongclique
