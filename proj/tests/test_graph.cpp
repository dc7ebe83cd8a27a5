#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace setumbral;
using setumbral::testing::all_labeled_graphs;
using setumbral::testing::chromatic_by_interpolation;
using setumbral::testing::poly;
using setumbral::testing::random_graph;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

}  // namespace

TEST(Graph, Construction) {
  Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_THROW(Graph(2, {{1, 1}}), precondition_error);
  EXPECT_THROW(Graph(2, {{0, 2}}), precondition_error);
  EXPECT_THROW(Graph(21, {}), cap_exceeded);
}

TEST(Graph, Restrict) {
  EXPECT_EQ(restrict(Graph::complete(3), 0b101), Graph::complete(2));
  EXPECT_EQ(restrict(Graph::complete(3), 0), Graph::edgeless(0));
  EXPECT_EQ(restrict(Graph::path(3), 0b101), Graph::edgeless(2));
  EXPECT_EQ(restrict(Graph::cycle(4), 0b1110), Graph::path(3));
}

TEST(GraphFile, ParsesWithComments) {
  Graph g = parse("# triangle\n3 3\n0 1\n1 2  # middle\n\n0 2\n");
  EXPECT_EQ(g, Graph::complete(3));
  EXPECT_EQ(parse(write_graph(Graph::cycle(5))), Graph::cycle(5));
}

TEST(GraphFile, Errors) {
  EXPECT_THROW(parse(""), parse_error);
  EXPECT_THROW(parse("2 1\n"), parse_error);            // missing edge line
  EXPECT_THROW(parse("2 1\n1 1\n"), parse_error);       // self-loop
  EXPECT_THROW(parse("2 1\n1 0\n"), parse_error);       // u > v
  EXPECT_THROW(parse("2 1\n0 2\n"), parse_error);       // out of range
  EXPECT_THROW(parse("2 1\n0 x\n"), parse_error);
  EXPECT_THROW(parse("2 1 4\n0 1\n"), parse_error);
  EXPECT_THROW(parse("25 0\n"), cap_exceeded);
}

TEST(Chromatic, Examples) {
  // Frozen from coloring counts + interpolation (checked live below).
  EXPECT_EQ(chromatic_poly(Graph::complete(2)), poly({0, -1, 1}));
  EXPECT_EQ(chromatic_poly(Graph::edgeless(3)), poly({0, 0, 0, 1}));
  EXPECT_EQ(chromatic_poly(Graph::complete(3)), poly({0, 2, -3, 1}));
  EXPECT_EQ(chromatic_poly(Graph::edgeless(0)), poly({1}));
  // C4: (x−1)^4 + (x−1)
  EXPECT_EQ(chromatic_poly(Graph::cycle(4)), poly({0, -3, 6, -4, 1}));
  for (const Graph& g : {Graph::complete(2), Graph::complete(3), Graph::cycle(4), Graph::path(4)}) {
    EXPECT_EQ(chromatic_poly(g), chromatic_by_interpolation(g));
  }
}

TEST(Chromatic, AgreesWithSubgraphExpansionAndColorings) {
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      const Poly p = chromatic_poly(g);
      EXPECT_EQ(p, subgraph_expansion_chromatic(g));
      for (int x = 0; x <= n; ++x) {
        EXPECT_EQ(p(Rational(x)), Rational(static_cast<unsigned long>(count_proper_colorings(g, x))));
      }
    }
  }
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 5 + trial % 2);
    EXPECT_EQ(chromatic_poly(g), subgraph_expansion_chromatic(g));
  }
}

TEST(Chromatic, SolverMemoIsReusable) {
  ChromaticSolver solver;
  const Poly petersen_like = solver(Graph::cycle(7));
  const std::size_t memo = solver.memo_size();
  EXPECT_EQ(solver(Graph::cycle(7)), petersen_like);
  EXPECT_EQ(solver.memo_size(), memo);
  // (x−1)^n + (−1)^n (x−1)
  Poly cn = poly({-1, 1}).pow(7) - poly({-1, 1});
  EXPECT_EQ(petersen_like, cn);
}

TEST(ChromaticSetMap, Examples) {
  auto chi = chromatic_setmap(Graph::complete(2));
  EXPECT_EQ(chi[0], poly({1}));
  EXPECT_EQ(chi[0b01], poly({0, 1}));
  EXPECT_EQ(chi[0b11], poly({0, -1, 1}));
}

TEST(ChromaticSetMap, SmallValues) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 1 + trial % 6);
    auto chi = chromatic_setmap(g);
    EXPECT_EQ(chi[0], poly({1}));
    for (Mask s = 1; s <= g.vertices(); ++s) {
      EXPECT_EQ(chi[s](Rational(0)), 0);
      EXPECT_EQ(chi[s](Rational(1)), g.is_independent(s) ? 1 : 0);
    }
    EXPECT_TRUE(verify_small_values(g, g.vertices()));
  }
}

TEST(SubgraphExpansion, Examples) {
  EXPECT_EQ(subgraph_expansion_chromatic(Graph::edgeless(4)), poly({0, 0, 0, 0, 1}));
  EXPECT_EQ(subgraph_expansion_chromatic(Graph::complete(2)), poly({0, -1, 1}));
  EXPECT_EQ(subgraph_expansion_chromatic(Graph::complete(3)), poly({0, 2, -3, 1}));
  EXPECT_THROW(subgraph_expansion_chromatic(Graph::complete(7)), cap_exceeded);
}

TEST(Colorings, Examples) {
  EXPECT_EQ(count_proper_colorings(Graph::complete(3), 0), 0U);
  EXPECT_EQ(count_proper_colorings(Graph::edgeless(2), 0), 0U);
  EXPECT_EQ(count_proper_colorings(Graph::complete(3), 3), 6U);
  EXPECT_EQ(count_proper_colorings(Graph::complete(2), 2), 2U);
  EXPECT_EQ(count_proper_colorings(Graph::edgeless(0), 5), 1U);
  EXPECT_THROW(count_proper_colorings(Graph::edgeless(12), 10), cap_exceeded);
}

TEST(AcyclicOrientations, Examples) {
  EXPECT_EQ(count_acyclic_orientations(Graph::edgeless(3)), 1U);
  EXPECT_EQ(count_acyclic_orientations(Graph::complete(2)), 2U);
  EXPECT_EQ(count_acyclic_orientations(Graph::complete(3)), 6U);
  EXPECT_EQ(count_acyclic_orientations(Graph::complete(4)), 24U);
  EXPECT_EQ(count_acyclic_orientations(Graph::cycle(4)), 14U);
  EXPECT_THROW(count_acyclic_orientations(Graph::complete(7)), cap_exceeded);
}

TEST(AcyclicOrientations, StanleyOnAllSmallGraphs) {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      Rational v = chromatic_poly(g)(Rational(-1));
      if (n % 2 == 1) v = -v;
      EXPECT_EQ(v, Rational(static_cast<unsigned long>(count_acyclic_orientations(g))));
    }
  }
}

TEST(StablePartitions, Examples) {
  EXPECT_EQ(count_stable_partitions(Graph::complete(2)), 1U);
  EXPECT_EQ(count_stable_partitions(Graph::edgeless(3)), 5U);
  EXPECT_EQ(count_stable_partitions(Graph::complete(3)), 1U);
  EXPECT_EQ(count_stable_partitions(Graph::path(3)), 2U);
  EXPECT_THROW(count_stable_partitions(Graph::edgeless(13)), cap_exceeded);
}

TEST(UniqueSink, Examples) {
  EXPECT_EQ(count_acyclic_unique_sink(Graph::complete(2), 0), 1U);
  EXPECT_EQ(count_acyclic_unique_sink(Graph::complete(2), 1), 1U);
  EXPECT_EQ(count_acyclic_unique_sink(Graph::complete(3), 2), 2U);
  EXPECT_EQ(count_acyclic_unique_sink(Graph::edgeless(2), 0), 0U);
  // (−1)^{n−1} χ'(0) on connected graphs
  for (const Graph& g : {Graph::complete(3), Graph::cycle(4), Graph::path(4), Graph::complete(4)}) {
    Rational expect = chromatic_poly(g).derivative()(Rational(0));
    if ((g.order() - 1) % 2 == 1) expect = -expect;
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_EQ(Rational(static_cast<unsigned long>(count_acyclic_unique_sink(g, v))), expect);
    }
  }
  EXPECT_THROW(count_acyclic_unique_sink(Graph::complete(2), 2), precondition_error);
}

TEST(SinkSource, Examples) {
  EXPECT_EQ(count_acyclic_sink_source(Graph::complete(2), 0, 1), 1U);
  EXPECT_EQ(count_acyclic_sink_source(Graph::complete(3), 0, 1), 1U);
  EXPECT_EQ(count_acyclic_sink_source(Graph::complete(3), 2, 1), 1U);
  const Graph c4 = Graph::cycle(4);
  Rational expect = abs(chromatic_poly(c4).derivative()(Rational(1)));
  EXPECT_EQ(expect, 1);
  EXPECT_EQ(Rational(static_cast<unsigned long>(count_acyclic_sink_source(c4, 0, 1))), expect);
  const Graph k4 = Graph::complete(4);
  EXPECT_EQ(Rational(static_cast<unsigned long>(count_acyclic_sink_source(k4, 0, 3))),
            abs(chromatic_poly(k4).derivative()(Rational(1))));
  EXPECT_THROW(count_acyclic_sink_source(Graph::path(3), 0, 2), precondition_error);
  EXPECT_THROW(count_acyclic_sink_source(Graph(3, {{0, 1}}), 0, 1), precondition_error);
}
