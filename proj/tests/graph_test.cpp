#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "outerlink/graph.hpp"

namespace outerlink {
namespace {

// Oracle: minimum adjacency code over every vertex permutation, no pruning.
std::uint64_t brute_canonical(int n, const std::vector<std::vector<bool>>& adj) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if (adj[p[i]][p[j]]) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Oracle: number of isomorphism classes of labelled graphs on n vertices.
std::size_t brute_class_count(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> classes;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((mask >> bit) & 1u) adj[i][j] = adj[j][i] = true;
    classes.insert(brute_canonical(n, adj));
  }
  return classes.size();
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(StandardGraph, K32HasNamedBipartition) {
  Graph g = standard_graph("K32");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c", "1", "2"}));
  for (Vertex x : {0, 1, 2})
    for (Vertex y : {3, 4}) EXPECT_TRUE(g.has_edge(x, y));
}

TEST(StandardGraph, Counts) {
  EXPECT_EQ(standard_graph("K4").order(), 4);
  EXPECT_EQ(standard_graph("K4").size(), 6);
  // K3,3 * v: 9 bipartite edges plus 6 apex edges.
  EXPECT_EQ(standard_graph("K331").order(), 7);
  EXPECT_EQ(standard_graph("K331").size(), 15);
  EXPECT_EQ(standard_graph("Petersen").size(), 15);
  EXPECT_EQ(standard_graph("C7").size(), 7);
  EXPECT_EQ(standard_graph("K7").size(), 21);
  EXPECT_EQ(standard_graph("K2,4").size(), 8);
}

TEST(StandardGraph, UnknownNamesThrow) {
  EXPECT_THROW(standard_graph("Q3"), GraphError);
  EXPECT_THROW(standard_graph("C2"), GraphError);
  EXPECT_THROW(standard_graph("Kx"), GraphError);
  EXPECT_THROW(standard_graph(""), GraphError);
}

TEST(GraphInvariants, RejectsLoopsRepeatsAndMissingVertices) {
  EXPECT_THROW(Edge(2, 2), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(2).with_labels({"x", "x"}), GraphError);
}

TEST(DeleteEdge, Examples) {
  Graph k4 = complete_graph(4);
  Graph d = delete_edge(k4, Edge(0, 1));
  EXPECT_EQ(d.order(), 4);
  EXPECT_EQ(d.size(), 5);
  EXPECT_TRUE(isomorphic(delete_edge(cycle_graph(4), Edge(0, 1)), path_graph(4)));
  EXPECT_EQ(delete_edge(complete_graph(5), Edge(2, 4)).size(), 9);
  EXPECT_THROW(delete_edge(cycle_graph(4), Edge(0, 2)), GraphError);
}

TEST(ContractEdge, Examples) {
  const Graph c4 = cycle_graph(4), k5 = complete_graph(5);
  for (const Edge& e : c4.edges()) EXPECT_TRUE(isomorphic(contract_edge(c4, e), cycle_graph(3)));
  for (const Edge& e : k5.edges()) EXPECT_EQ(contract_edge(k5, e), complete_graph(4));
  EXPECT_THROW(contract_edge(cycle_graph(5), Edge(0, 2)), GraphError);
}

TEST(ContractEdge, K33AgainstNeighbourhoodUnion) {
  // Oracle: merged vertex sees N(a) u N(1) minus {a, 1}; other edges stay.
  Graph k33 = complete_bipartite(3, 3);
  for (const Edge& e : k33.edges()) {
    std::set<Vertex> merged;
    for (Vertex w : k33.neighbors(e.u)) merged.insert(w);
    for (Vertex w : k33.neighbors(e.v)) merged.insert(w);
    merged.erase(e.u);
    merged.erase(e.v);
    int untouched = 0;
    for (const Edge& f : k33.edges()) untouched += !f.touches(e.u) && !f.touches(e.v);
    Graph c = contract_edge(k33, e);
    EXPECT_EQ(c.order(), 5);
    EXPECT_EQ(c.size(), untouched + static_cast<int>(merged.size()));
    EXPECT_EQ(c.size(), 8);
  }
}

TEST(ExpandVertex, Examples) {
  Graph k4 = complete_graph(4);
  Graph e = expand_vertex(k4, 0, {{1, 2}, {3}});
  EXPECT_EQ(e.order(), 5);
  EXPECT_EQ(e.size(), 7);  // 6 - 3 + 3 + 1
  EXPECT_TRUE(e.has_edge(0, 4));
  EXPECT_TRUE(e.has_edge(4, 3));
  EXPECT_FALSE(e.has_edge(0, 3));

  Graph pendant = expand_vertex(k4, 2, {{0, 1, 3}, {}});
  EXPECT_EQ(pendant.size(), 7);
  EXPECT_EQ(pendant.degree(4), 1);
  EXPECT_EQ(delete_vertex(pendant, 4), k4);

  Graph c4 = cycle_graph(4);
  EXPECT_TRUE(isomorphic(expand_vertex(c4, 0, {{1}, {3}}), cycle_graph(5)));
}

TEST(ExpandVertex, InvalidPartitions) {
  Graph k4 = complete_graph(4);
  EXPECT_THROW(expand_vertex(k4, 0, {{1, 2}, {}}), GraphError);
  EXPECT_THROW(expand_vertex(k4, 0, {{1, 2}, {2, 3}}), GraphError);
  EXPECT_THROW(expand_vertex(k4, 0, {{1, 2, 3}, {0}}), GraphError);
  EXPECT_THROW(expand_vertex(k4, 7, {}), GraphError);
}

TEST(ExpandVertex, LabelsFollowTheSplit) {
  Graph g = expand_vertex(complete_bipartite(3, 2), 0, {{3}, {4}});
  EXPECT_EQ(g.label(0), "a'");
  EXPECT_EQ(g.label(5), "a''");
}

TEST(EnumerateExpansions, Counts) {
  EXPECT_EQ(enumerate_expansions(complete_graph(4), 0).size(), 4u);
  EXPECT_EQ(enumerate_expansions(cycle_graph(5), 0).size(), 2u);
  EXPECT_EQ(enumerate_expansions(complete_graph(6), 0).size(), 16u);
  for (const Graph& g : enumerate_expansions(complete_graph(4), 1)) {
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.size(), 7);
  }
  EXPECT_EQ(enumerate_expansions(Graph(1), 0).size(), 1u);
}

TEST(EnumerateExpansions, PartitionsAreDistinctUpToSwap) {
  // Each result must differ as a labelled graph once v' and v'' are unordered.
  Graph k5 = complete_graph(5);
  auto all = enumerate_expansions(k5, 0);
  std::set<std::set<Vertex>> sides;
  for (const Graph& g : all) {
    std::set<Vertex> left, right;
    for (Vertex w : g.neighbors(0))
      if (w != 5) left.insert(w);
    for (Vertex w : g.neighbors(5))
      if (w != 0) right.insert(w);
    EXPECT_TRUE(sides.insert(std::min(left, right)).second);
  }
  EXPECT_EQ(all.size(), 8u);
}

TEST(JoinApex, Examples) {
  EXPECT_EQ(join_apex(complete_graph(5)), complete_graph(6));
  EXPECT_TRUE(isomorphic(join_apex(complete_bipartite(3, 3)), standard_graph("K331")));
  Graph single = join_apex(Graph(0));
  EXPECT_EQ(single.order(), 1);
  EXPECT_EQ(single.size(), 0);
  EXPECT_EQ(join_apex(complete_bipartite(3, 3)).label(6), "v");
}

TEST(CanonicalForm, Examples) {
  Graph c4 = cycle_graph(4);
  EXPECT_EQ(canonical_form(c4), canonical_form(permute(c4, {2, 1, 0, 3})));
  EXPECT_NE(canonical_form(complete_graph(4)),
            canonical_form(delete_edge(complete_graph(4), Edge(0, 1))));
  auto four = enumerate_graphs(4);
  std::set<CanonicalLabel> labels;
  for (const Graph& g : four) labels.insert(canonical_form(g));
  EXPECT_EQ(labels.size(), 11u);
  EXPECT_THROW(canonical_form(Graph(kCanonicalMaxOrder + 1)), SizeBoundError);
}

TEST(CanonicalForm, AgreesWithUnprunedMinimisation) {
  // Sparse random graphs collide often; equal codes must mean equal classes.
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 7; ++n) {
    std::vector<std::pair<CanonicalLabel, std::uint64_t>> seen;
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Edge> es;
      std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() % 3 == 0) {
            es.emplace_back(i, j);
            adj[i][j] = adj[j][i] = true;
          }
      seen.emplace_back(canonical_form(Graph(n, es)), brute_canonical(n, adj));
    }
    for (const auto& x : seen)
      for (const auto& y : seen) EXPECT_EQ(x.first == y.first, x.second == y.second);
  }
}

TEST(CanonicalForm, RoundTripsThroughDecoding) {
  for (const Graph& g : enumerate_graphs_up_to(6)) {
    const CanonicalLabel c = canonical_form(g);
    EXPECT_EQ(canonical_form(graph_from_canonical(c)), c);
  }
}

TEST(EnumerateGraphs, KnownCounts) {
  const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_graphs(n).size(), expected[n]) << n;
  EXPECT_THROW(enumerate_graphs(0), SizeBoundError);
  EXPECT_THROW(enumerate_graphs(8), SizeBoundError);
}

TEST(EnumerateGraphs, CountsMatchLabelledDedup) {
  EXPECT_EQ(brute_class_count(4), 11u);
  EXPECT_EQ(enumerate_graphs(4).size(), brute_class_count(4));
  EXPECT_EQ(enumerate_graphs(5).size(), brute_class_count(5));
}

TEST(EnumerateGraphs, SixVerticesMatchLabelledDedup) {
  // 2^15 labelled graphs, each minimised over 720 permutations.
  EXPECT_EQ(brute_class_count(6), 156u);
}

TEST(EnumerateGraphs, PairwiseNonIsomorphic) {
  for (int n = 1; n <= 6; ++n) {
    std::set<CanonicalLabel> seen;
    for (const Graph& g : enumerate_graphs(n)) {
      EXPECT_EQ(g.order(), n);
      EXPECT_TRUE(seen.insert(canonical_form(g)).second);
    }
  }
}

// Properties

TEST(GraphProperties, ContractionShrinksByOneVertex) {
  for (const Graph& g : enumerate_graphs_up_to(5))
    for (const Edge& e : g.edges()) {
      Graph c = contract_edge(g, e);
      EXPECT_EQ(c.order(), g.order() - 1);
      EXPECT_LT(c.size(), g.size());
    }
}

TEST(GraphProperties, ExpandThenContractRestores) {
  for (const Graph& g : enumerate_graphs_up_to(5))
    for (Vertex v = 0; v < g.order(); ++v)
      for (const Graph& x : enumerate_expansions(g, v))
        EXPECT_TRUE(isomorphic(contract_edge(x, Edge(v, g.order())), g));
}

TEST(GraphProperties, JoinApexSizes) {
  for (const Graph& g : enumerate_graphs_up_to(5)) {
    Graph j = join_apex(g);
    EXPECT_EQ(j.order(), g.order() + 1);
    EXPECT_EQ(j.size(), g.size() + g.order());
  }
}

TEST(GraphProperties, CanonicalFormIgnoresRelabelling) {
  std::mt19937_64 rng(2024);
  std::vector<Graph> samples{complete_graph(4), complete_bipartite(3, 2), complete_graph(5),
                             complete_bipartite(3, 3), cycle_graph(7), petersen_graph(),
                             standard_graph("K331"), path_graph(6)};
  for (const Graph& g : samples) {
    const CanonicalLabel c = canonical_form(g);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(canonical_form(permute(g, random_permutation(g.order(), rng))), c);
  }
}

}  // namespace
}  // namespace outerlink
