#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "outerlink/io.hpp"

namespace outerlink {
namespace {

// Reference encoder written straight from the format description: size
// prefix, then upper-triangle bits column by column, six per byte, +63.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

int error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(5)), "D~{");
  EXPECT_EQ(to_graph6(complete_bipartite(3, 2)), "DFw");
  EXPECT_EQ(to_graph6(petersen_graph()), "IheA@GUAo");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(path_graph(70)).substr(0, 12), "~?@EhCGGC@?G");
}

TEST(Graph6, MatchesReferenceEncoder) {
  std::mt19937_64 rng(99);
  for (int n : {1, 2, 5, 9, 17, 62, 63, 64, 100}) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 4 == 0) es.emplace_back(i, j);
    Graph g(n, es);
    EXPECT_EQ(to_graph6(g), reference_graph6(g));
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(from_graph6("D~"), ParseError);   // too short
  EXPECT_THROW(from_graph6("D~{{"), ParseError); // too long
  EXPECT_THROW(from_graph6("D\x20{"), ParseError);
}

TEST(EdgeList, ParsesLabelsInOrderOfAppearance) {
  Graph g = parse_graph("# K3,2\na 1\na 2\nb 1\nb 2\nc 1\nc 2\n");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "1", "2", "b", "c"}));
  EXPECT_TRUE(isomorphic(g, complete_bipartite(3, 2)));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("a a\n"), 1);
  EXPECT_EQ(error_line("a b\nb c\n\nb a\n"), 4);
  EXPECT_EQ(error_line("a b\nb c d\n"), 2);
  EXPECT_EQ(error_line("a b\nb\n"), 2);
  try {
    parse_graph("x y\ny y\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), "line 2: self-loop at vertex 'y'");
  }
}

TEST(EdgeList, RoundTripKeepsIsolatedVertices) {
  Graph g = add_isolated_vertex(complete_bipartite(3, 2));
  std::string text = to_edge_list(g);
  Graph back = parse_graph(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(to_edge_list(back), text);
}

TEST(ParseGraphs, Graph6Batches) {
  auto gs = parse_graphs("D~{\nDFw\n\nIheA@GUAo\n");
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[0], complete_graph(5));
  EXPECT_EQ(gs[2], petersen_graph());
  EXPECT_THROW(parse_graph("D~{\nDFw\n"), GraphError);
  EXPECT_EQ(parse_graphs("a b\n").size(), 1u);
}

TEST(DiagramText, RoundTrip) {
  Graph g = complete_graph(5).with_labels({"a", "b", "c", "d", "e"});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    OuterDiagram d = convex_diagram(g, CyclicOrder({0, 2, 4, 1, 3}), RandomOver{seed});
    std::string text = to_diagram_text(d);
    OuterDiagram back = parse_diagram_text(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(to_diagram_text(back), text);
  }
}

TEST(DiagramText, RejectsInvalidDiagrams) {
  const std::string good =
      "outer-diagram\nvertices a b c d\norder a b c d\n"
      "E a-b\nE b-c\nE c-d\nE a-d\nE a-c\nE b-d\nX 1 over=a-c under=b-d\n";
  EXPECT_NO_THROW(parse_diagram_text(good));
  EXPECT_THROW(parse_diagram_text("outer-diagram\nvertices a b c d\norder a b c d\n"
                                  "E a-c\nE b-d\n"),
               ParseError);  // interleaving arcs without a crossing
  EXPECT_THROW(parse_diagram_text(good + "X 2 over=a-c under=a-c\n"), ParseError);
  EXPECT_THROW(parse_diagram_text(good + "X 2 over=a-c under=q-d\n"), ParseError);
  EXPECT_THROW(parse_diagram_text("not-a-diagram\n"), ParseError);
  Graph spaced = complete_graph(3).with_labels({"a b", "c", "d"});
  EXPECT_THROW(to_diagram_text(convex_diagram(spaced, natural_order(3))), GraphError);
}

}  // namespace
}  // namespace outerlink
