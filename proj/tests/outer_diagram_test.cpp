#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "outerlink/outer_diagram.hpp"
#include "outerlink/s1_link.hpp"

namespace outerlink {
namespace {

struct Pt {
  double x, y;
};

Pt on_circle(const CyclicOrder& o, Vertex v) {
  const double a = 2.0 * std::numbers::pi * o.position(v) / static_cast<double>(o.size());
  return {std::cos(a), std::sin(a)};
}

double cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Proper intersection of open segments.
bool segments_cross(Pt p, Pt q, Pt r, Pt s) {
  return cross(p, q, r) * cross(p, q, s) < 0 && cross(r, s, p) * cross(r, s, q) < 0;
}

Pt meet(Pt p, Pt q, Pt r, Pt s) {
  const double a1 = q.y - p.y, b1 = p.x - q.x, c1 = a1 * p.x + b1 * p.y;
  const double a2 = s.y - r.y, b2 = r.x - s.x, c2 = a2 * r.x + b2 * r.y;
  const double det = a1 * b2 - a2 * b1;
  return {(b2 * c1 - b1 * c2) / det, (a1 * c2 - a2 * c1) / det};
}

// Expected traversal of e: crossing ids sorted by distance from e.u, with
// coincident points (concurrent chords) ordered by id.
std::vector<int> geometric_traversal(const OuterDiagram& d, const Edge& e) {
  const CyclicOrder& o = d.boundary_order();
  Pt p = on_circle(o, e.u), q = on_circle(o, e.v);
  std::vector<std::pair<long long, int>> items;
  for (const Crossing& c : d.crossings()) {
    if (c.over != e && c.under != e) continue;
    const Edge& f = c.over == e ? c.under : c.over;
    Pt m = meet(p, q, on_circle(o, f.u), on_circle(o, f.v));
    items.emplace_back(std::llround(std::hypot(m.x - p.x, m.y - p.y) * 1e8), c.id);
  }
  std::sort(items.begin(), items.end());
  std::vector<int> out;
  for (auto& [dist, id] : items) out.push_back(id);
  return out;
}

std::set<std::string> kinds(const OuterDiagram& d) {
  std::set<std::string> out;
  for (const auto& v : validate_diagram(d)) out.insert(v.kind);
  return out;
}

CyclicOrder random_order(int n, std::mt19937_64& rng) {
  std::vector<Vertex> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  std::shuffle(seq.begin(), seq.end(), rng);
  return CyclicOrder(seq);
}

TEST(ConvexDiagram, K5NaturalOrder) {
  Graph k5 = complete_graph(5);
  OuterDiagram d = convex_diagram(k5, natural_order(5));
  EXPECT_EQ(d.crossings().size(), 5u);
  EXPECT_TRUE(validate_diagram(d).empty());
  EXPECT_EQ(d.crossings().front().id, 1);
  EXPECT_EQ(link_parity_sum(d), 1);
  EXPECT_TRUE(find_nonsplit_outer_link(d));
}

TEST(ConvexDiagram, MatchesSegmentGeometry) {
  std::mt19937_64 rng(3);
  for (const Graph& g : {complete_graph(5), complete_bipartite(3, 3), complete_graph(7), petersen_graph()}) {
    for (int trial = 0; trial < 10; ++trial) {
      CyclicOrder o = random_order(g.order(), rng);
      OuterDiagram d = convex_diagram(g, o, RandomOver{rng()});
      EXPECT_TRUE(validate_diagram(d).empty());
      std::set<std::pair<Edge, Edge>> expected, actual;
      const auto& es = g.edges();
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
          if (segments_cross(on_circle(o, es[i].u), on_circle(o, es[i].v), on_circle(o, es[j].u),
                             on_circle(o, es[j].v)))
            expected.insert({es[i], es[j]});
      for (const Crossing& c : d.crossings()) actual.insert({std::min(c.over, c.under), std::max(c.over, c.under)});
      EXPECT_EQ(actual, expected);
      EXPECT_EQ(d.crossings().size(), expected.size());
      for (const Edge& e : es) EXPECT_EQ(d.traversal(e), geometric_traversal(d, e));
    }
  }
}

TEST(ConvexDiagram, OverRules) {
  Graph k4 = complete_graph(4);
  OuterDiagram lex = convex_diagram(k4, natural_order(4));
  ASSERT_EQ(lex.crossings().size(), 1u);
  EXPECT_EQ(lex.crossings()[0].over, Edge(0, 2));
  ExplicitOver rule;
  rule.over[{Edge(0, 2), Edge(1, 3)}] = Edge(1, 3);
  EXPECT_EQ(convex_diagram(k4, natural_order(4), rule).crossings()[0].over, Edge(1, 3));
  EXPECT_EQ(convex_diagram(complete_graph(6), natural_order(6), RandomOver{9}),
            convex_diagram(complete_graph(6), natural_order(6), RandomOver{9}));
  EXPECT_THROW(convex_diagram(k4, natural_order(5)), GraphError);
}

TEST(ValidateDiagram, ReportsEachViolation) {
  Graph k4 = complete_graph(4);
  const CyclicOrder o = natural_order(4);
  const Edge ac(0, 2), bd(1, 3);

  OuterDiagram orphan(k4, o, {{1, ac, bd, 0, 0}}, {{ac, {1}}});
  EXPECT_TRUE(kinds(orphan).count("orphan crossing"));

  OuterDiagram self(k4, o, {{1, ac, bd, 0, 0}, {2, ac, ac, 1, 1}}, {{ac, {1, 2}}, {bd, {1}}});
  EXPECT_TRUE(kinds(self).count("self-crossing"));

  OuterDiagram parity(k4, o, std::vector<CrossingSpec>{});
  EXPECT_TRUE(kinds(parity).count("crossing parity"));

  OuterDiagram dup(k4, o, {{1, ac, bd, 0, 0}, {1, ac, bd, 1, 1}}, {{ac, {1, 1}}, {bd, {1, 1}}});
  EXPECT_TRUE(kinds(dup).count("duplicate crossing id"));

  OuterDiagram misplaced(k4, o, {{1, ac, bd, 0, 0}}, {{ac, {1}}, {bd, {1}}, {Edge(0, 1), {1}}});
  EXPECT_TRUE(kinds(misplaced).count("misplaced crossing"));

  OuterDiagram unknown(k4, o, {{1, ac, bd, 0, 0}}, {{ac, {1}}, {bd, {1, 7}}});
  EXPECT_TRUE(kinds(unknown).count("unknown crossing id"));

  OuterDiagram stale(k4, o, {{1, ac, bd, 3, 0}}, {{ac, {1}}, {bd, {1}}});
  EXPECT_TRUE(kinds(stale).count("stale position"));

  EXPECT_TRUE(validate_diagram(OuterDiagram(k4, o, {{1, ac, bd, 0, 0}}, {{ac, {1}}, {bd, {1}}})).empty());
}

TEST(ValidateDiagram, AdjacentEdgeCrossingsAreAllowed) {
  // Two arcs sharing vertex 0 may cross; they never form a cycle-edge link.
  Graph k4 = complete_graph(4);
  std::vector<CrossingSpec> specs{{1, Edge(0, 2), Edge(1, 3)}, {2, Edge(0, 1), Edge(0, 2)}};
  OuterDiagram d(k4, natural_order(4), specs);
  EXPECT_TRUE(validate_diagram(d).empty());
  EXPECT_EQ(link_parity_sum(d), link_parity_sum(convex_diagram(k4, natural_order(4))));
  EXPECT_EQ(crossing_change(crossing_change(d, 2), 2), d);
  EXPECT_TRUE(validate_diagram(crossing_change(d, 2)).empty());
}

TEST(CrossingChange, Examples) {
  OuterDiagram d = convex_diagram(complete_graph(5), natural_order(5));
  OuterDiagram e = crossing_change(d, 1);
  EXPECT_EQ(e.find_crossing(1)->over, d.find_crossing(1)->under);
  EXPECT_TRUE(validate_diagram(e).empty());
  EXPECT_EQ(crossing_change(e, 1), d);
  EXPECT_THROW(crossing_change(d, 99), GraphError);
}

TEST(SimpleCycles, Counts) {
  EXPECT_EQ(simple_cycles(complete_graph(4)).size(), 7u);
  EXPECT_EQ(simple_cycles(complete_graph(5)).size(), 37u);
  EXPECT_EQ(simple_cycles(complete_bipartite(3, 3)).size(), 15u);
  EXPECT_EQ(simple_cycles(path_graph(5)).size(), 0u);
  EXPECT_THROW(require_simple_cycle(complete_graph(4), {0, 1}), GraphError);
  EXPECT_THROW(require_simple_cycle(cycle_graph(5), {0, 1, 3}), GraphError);
}

TEST(Lk2CycleEdge, Examples) {
  Graph k5 = complete_graph(5);
  OuterDiagram d = convex_diagram(k5, natural_order(5));
  // 0-2 passes over both 1-3 and 1-4; 1-3 passes over 2-4 but under 0-2.
  EXPECT_EQ(lk2_cycle_edge(d, CycleEdgeLink{{1, 3, 4}, Edge(0, 2)}), 0);
  EXPECT_EQ(lk2_cycle_edge(d, CycleEdgeLink{{0, 2, 4}, Edge(1, 3)}), 1);
  EXPECT_THROW(lk2_cycle_edge(d, CycleEdgeLink{{0, 1, 2}, Edge(2, 3)}), GraphError);
  EXPECT_EQ(CycleEdgeLink({{0, 1, 3}, Edge(2, 4)}).to_string(k5.with_labels({"a", "b", "c", "d", "e"})),
            "(abd, ce)");
}

TEST(ApexExtension, CgSum) {
  OuterDiagram d = convex_diagram(complete_graph(5), natural_order(5));
  SpatialDiagram s = apex_extension(d);
  EXPECT_EQ(s.graph.order(), 6);
  EXPECT_EQ(s.apex, 5);
  // Triangle pairs of K6: choose 3 of 6, halve.
  EXPECT_EQ(disjoint_cycle_pairs(s.graph).size(), 10u);
  EXPECT_EQ(cg_sum(s), 1);

  SpatialDiagram t = apex_extension(convex_diagram(complete_bipartite(3, 3), natural_order(6)));
  // Apex triangle (v, x, y) for each of 3 x 3 bipartite edges, 4-cycle on the rest.
  EXPECT_EQ(disjoint_cycle_pairs(t.graph).size(), 9u);
  EXPECT_EQ(cg_sum(t), 1);

  Graph wheel = join_apex(cycle_graph(5));
  EXPECT_THROW(cg_sum(apex_extension(convex_diagram(cycle_graph(5), natural_order(5)))), GraphError);
  EXPECT_EQ(wheel.size(), 10);
}

TEST(ApexExtension, InconsistentRolesThrow) {
  // In a valid diagram the two role counts agree mod 2. One extra crossing
  // between non-interleaving 0-2 and 3-4 breaks that.
  Graph g = complete_graph(5);
  std::vector<CrossingSpec> specs = convex_diagram(g, natural_order(5)).crossing_specs();
  specs.push_back({6, Edge(0, 2), Edge(3, 4)});
  OuterDiagram d(g, natural_order(5), specs);
  EXPECT_FALSE(validate_diagram(d).empty());
  SpatialDiagram s = apex_extension(d);
  EXPECT_THROW(lk2_cycle_cycle(s, {0, 2, 5}, {1, 3, 4}), std::logic_error);
  EXPECT_NO_THROW(lk2_cycle_cycle(apex_extension(convex_diagram(g, natural_order(5))), {0, 2, 5}, {1, 3, 4}));
}

TEST(TwoPage, Examples) {
  auto c6 = find_two_page_layout(cycle_graph(6));
  ASSERT_TRUE(c6);
  auto k4 = two_page_linkless_diagram(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_TRUE(validate_diagram(*k4).empty());
  EXPECT_FALSE(find_nonsplit_outer_link(*k4));
  EXPECT_FALSE(find_two_page_layout(complete_graph(5)));
  EXPECT_FALSE(find_two_page_layout(complete_bipartite(3, 3)));
  EXPECT_FALSE(find_two_page_layout(Graph(kTwoPageMaxOrder + 1)));
}

// Properties

TEST(DiagramProperties, CrossingChangeIsAnInvolution) {
  std::mt19937_64 rng(17);
  Graph g = complete_graph(6);
  for (int trial = 0; trial < 20; ++trial) {
    OuterDiagram d = convex_diagram(g, random_order(6, rng), RandomOver{rng()});
    for (const Crossing& c : d.crossings()) EXPECT_EQ(crossing_change(crossing_change(d, c.id), c.id), d);
  }
}

TEST(DiagramProperties, CrossingChangeShiftsParityByLinkCount) {
  // Oracle: flipping e over f toggles one lk per cycle through f avoiding e,
  // and one per cycle through e avoiding f.
  std::mt19937_64 rng(23);
  Graph g = complete_graph(5);
  auto cycles = simple_cycles(g);
  auto through_avoiding = [&](const Edge& on, const Edge& off) {
    int k = 0;
    for (const auto& cyc : cycles) {
      auto es = cycle_edges(cyc);
      bool has = std::find(es.begin(), es.end(), on) != es.end();
      bool avoids = std::none_of(cyc.begin(), cyc.end(), [&](Vertex v) { return off.touches(v); });
      k += has && avoids;
    }
    return k;
  };
  for (int trial = 0; trial < 20; ++trial) {
    OuterDiagram d = convex_diagram(g, random_order(5, rng), RandomOver{rng()});
    for (const Crossing& c : d.crossings()) {
      int delta = (through_avoiding(c.under, c.over) + through_avoiding(c.over, c.under)) % 2;
      EXPECT_EQ(link_parity_sum(crossing_change(d, c.id)), (link_parity_sum(d) + delta) % 2);
    }
  }
}

TEST(DiagramProperties, PlanarTwoPageDiagramsAreLinkless) {
  for (const Graph& g : enumerate_graphs_up_to(6)) {
    auto d = two_page_linkless_diagram(g);
    if (!d) continue;
    EXPECT_TRUE(validate_diagram(*d).empty());
    EXPECT_FALSE(find_nonsplit_outer_link(*d));
  }
}

}  // namespace
}  // namespace outerlink
