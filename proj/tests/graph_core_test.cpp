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

TEST(VertexSet, SetAlgebraAcrossWordBoundaries) {
  VertexSet a(130, {0, 63, 64, 129});
  VertexSet b(130, {63, 100});
  EXPECT_EQ(a.size(), 4);
  EXPECT_EQ((a & b).to_vector(), std::vector<Vertex>({63}));
  EXPECT_EQ((a | b).size(), 5);
  EXPECT_EQ((a - b).to_vector(), std::vector<Vertex>({0, 64, 129}));
  EXPECT_EQ((~a).size(), 126);
  EXPECT_FALSE((~a).contains(129));
  EXPECT_EQ(a.next(64), 129);
  EXPECT_TRUE(VertexSet(130, {64}).is_subset_of(a));
  EXPECT_EQ(a.intersection_size(b), 1);
}

TEST(Graph, RejectsLoopsAndOutOfRangeLabels) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
}

TEST(Graph, AdjacencyIsSymmetric) {
  const Graph g(4, {{0, 1}, {3, 1}});
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.closed_neighborhood(1).to_vector(), std::vector<Vertex>({0, 1, 3}));
}

TEST(Transforms, ComplementOfK4IsEdgeless) {
  const Graph co = complement(gen_complete(4));
  EXPECT_EQ(co.order(), 4);
  EXPECT_EQ(co.edge_count(), 0);
}

TEST(Transforms, ComplementIsAnInvolution) {
  for (const SmallGraph& s : testing::corpus(6)[6]) {
    const Graph g = s.to_graph();
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Transforms, C5IsSelfComplementary) {
  const Graph c5 = gen_cycle(5);
  const Graph co = complement(c5);
  EXPECT_EQ(co.edge_count(), 5);
  EXPECT_TRUE(are_isomorphic(co, c5));
}

TEST(Transforms, InducedSubgraphs) {
  const Relabeled p3 = induced_subgraph(gen_path(4), vs(4, {0, 1, 2}));
  EXPECT_EQ(p3.graph, gen_path(3));
  const Relabeled k2 = induced_subgraph(gen_complete(4), vs(4, {0, 2}));
  EXPECT_EQ(k2.graph, gen_complete(2));
  EXPECT_EQ(k2.origin, std::vector<Vertex>({0, 2}));
  // C5 on {0,1,3}: only the edge 01 survives.
  const Relabeled c = induced_subgraph(gen_cycle(5), vs(5, {0, 1, 3}));
  EXPECT_EQ(c.graph, Graph(3, {{0, 1}}));
  EXPECT_EQ(c.lift(vs(3, {2}), 5).to_vector(), std::vector<Vertex>({3}));
}

TEST(Transforms, LineGraphs) {
  EXPECT_TRUE(are_isomorphic(line_graph(gen_complete(3)).graph, gen_complete(3)));
  EXPECT_TRUE(are_isomorphic(line_graph(gen_complete_bipartite(1, 3)).graph, gen_complete(3)));
  const LineGraph lp = line_graph(gen_path(4));
  EXPECT_EQ(lp.graph, gen_path(3));
  EXPECT_EQ(lp.edge_of[1], Edge(1, 2));
  EXPECT_EQ(lp.vertex_of(Edge(2, 3)), 2);
}

TEST(Transforms, LineGraphEdgeCountIsSumOfDegreePairs) {
  for (const SmallGraph& s : testing::corpus(6)[6]) {
    const Graph h = s.to_graph();
    int expected = 0;
    for (int d : degree_sequence(h)) expected += d * (d - 1) / 2;
    const LineGraph lg = line_graph(h);
    EXPECT_EQ(lg.graph.order(), h.edge_count());
    EXPECT_EQ(lg.graph.edge_count(), expected);
  }
}

TEST(Transforms, Corona) {
  EXPECT_EQ(corona(Graph(1)), gen_complete(2));
  const Graph c = corona(gen_cycle(5));
  EXPECT_EQ(c.order(), 10);
  EXPECT_EQ(c.edge_count(), 10);
  EXPECT_EQ(corona(gen_path(2)), Graph(4, {{0, 1}, {0, 2}, {1, 3}}));
}

TEST(Transforms, DisjointUnionAndPermute) {
  const Graph u = disjoint_union(gen_complete(3), gen_path(2));
  EXPECT_EQ(u.order(), 5);
  EXPECT_TRUE(u.adjacent(3, 4));
  EXPECT_FALSE(u.adjacent(2, 3));
  const Graph p = permute(gen_path(3), {2, 0, 1});
  EXPECT_TRUE(are_isomorphic(p, gen_path(3)));
}

TEST(Predicates, TriangleAndC4Freeness) {
  EXPECT_TRUE(is_triangle_free(gen_cycle(5)));
  EXPECT_FALSE(is_triangle_free(gen_complete(3)));
  // K4 has 4-cycles, none induced.
  EXPECT_TRUE(is_c4_free(gen_complete(4)));
  EXPECT_FALSE(is_c4_free(gen_cycle(4)));
  EXPECT_TRUE(is_c4_free(gen_named("diamond")));
  EXPECT_EQ(find_induced_c4(gen_complete_bipartite(2, 2)).has_value(), true);
}

TEST(Predicates, BipartitionOfC5HasOddCycleWitness) {
  const Graph c5 = gen_cycle(5);
  const Bipartition bp = bipartition(c5);
  ASSERT_FALSE(bp.bipartite);
  ASSERT_EQ(bp.odd_cycle.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(c5.adjacent(bp.odd_cycle[i], bp.odd_cycle[(i + 1) % 5]));
}

TEST(Predicates, BipartitionSides) {
  const Bipartition bp = bipartition(gen_complete_bipartite(2, 3));
  ASSERT_TRUE(bp.bipartite);
  EXPECT_EQ(bp.part(0).to_vector(), std::vector<Vertex>({0, 1}));
  EXPECT_EQ(bp.part(1).to_vector(), std::vector<Vertex>({2, 3, 4}));
}

TEST(Predicates, ComponentsRegularityDegrees) {
  const Graph g = disjoint_union(gen_cycle(4), gen_complete(3));
  EXPECT_EQ(components(g).size(), 2u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(regular_degree(g), 2);
  EXPECT_TRUE(is_regular(g, 2));
  EXPECT_FALSE(is_regular(gen_path(3), 1));
  EXPECT_EQ(degree_sequence(gen_path(3)), std::vector<int>({2, 1, 1}));
}

TEST(Predicates, WeakChordality) {
  EXPECT_TRUE(is_weakly_chordal(gen_cycle(4)));
  EXPECT_FALSE(is_weakly_chordal(gen_cycle(5)));
  // The complement of C6 is the prism; C6 itself is a long hole.
  EXPECT_FALSE(is_weakly_chordal(gen_named("co-C6")));
  EXPECT_TRUE(is_weakly_chordal(gen_path(5)));
}

TEST(Graph6, DecodesK4AndP4) {
  EXPECT_EQ(parse_graph6("C~"), gen_complete(4));
  EXPECT_EQ(parse_graph6("Ch"), gen_path(4));
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), gen_complete(4));
}

TEST(Graph6, ErrorsCarryByteOffsets) {
  try {
    parse_graph6("C");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::byte_offset);
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_graph6("C~~"), ParseError);
  EXPECT_THROW(parse_graph6("C!"), ParseError);
  EXPECT_THROW(parse_graph6("Bx"), ParseError) << "padding bits must be zero";
}

TEST(Graph6, RoundTripsBitExactly) {
  for (int n = 0; n <= 6; ++n)
    for (const SmallGraph& s : testing::corpus(6)[n]) {
      const Graph g = s.to_graph();
      const std::string text = write_graph6(g);
      EXPECT_EQ(parse_graph6(text), g);
      EXPECT_EQ(write_graph6(parse_graph6(text)), text);
    }
  const Graph big = gen_Fn(12);
  EXPECT_EQ(write_graph6(big).front(), '~');
  EXPECT_EQ(parse_graph6(write_graph6(big)), big);
}

TEST(EdgeList, ParsesAndRejects) {
  EXPECT_EQ(parse_edge_list("3 3\n0 1\n1 2\n0 2"), gen_complete(3));
  EXPECT_EQ(parse_edge_list("2 0"), Graph(2));
  EXPECT_EQ(parse_edge_list("# comment\n2 1\n\n1 0\n"), gen_complete(2));
  try {
    parse_edge_list("2 1\n1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::line);
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse_edge_list("2 1\n0 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = gen_petersen();
  const std::string text = write_edge_list(g);
  EXPECT_EQ(parse_edge_list(text), g);
  EXPECT_EQ(write_edge_list(parse_edge_list(text)), text);
  EXPECT_EQ(write_edge_list(gen_complete(4)), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
}

}  // namespace
}  // namespace strongclique
