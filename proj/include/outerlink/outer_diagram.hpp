#pragma once

// Calculable projections of graphs embedded in the 3-ball with every vertex
// on the boundary sphere. Vertices sit on the boundary circle of the
// projection disk; edges are arcs inside it whose crossings carry over/under
// roles. All data is combinatorial: a cyclic order plus a crossing list.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "outerlink/cyclic_order.hpp"
#include "outerlink/graph.hpp"

namespace outerlink {

struct Crossing {
  int id = 0;
  Edge over;
  Edge under;
  int over_position = -1;   // index in the over edge's traversal
  int under_position = -1;  // index in the under edge's traversal

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Crossing as written in a diagram file, before traversals are known.
struct CrossingSpec {
  int id = 0;
  Edge over;
  Edge under;
};

namespace detail {

// Parameter in (0, 1) along chord e (smaller endpoint to larger) where it
// meets chord f. Non-interleaving pairs (bent arcs) meet at the midpoint.
inline double chord_parameter(const CyclicOrder& o, const Edge& e, const Edge& f) {
  if (!interleaves(o, e, f)) return 0.5;
  const double n = static_cast<double>(o.size());
  auto point = [&](Vertex v) {
    double a = 2.0 * std::numbers::pi * o.position(v) / n;
    return std::pair{std::cos(a), std::sin(a)};
  };
  auto [px, py] = point(e.u);
  auto [qx, qy] = point(e.v);
  auto [rx, ry] = point(f.u);
  auto [sx, sy] = point(f.v);
  const double dx = qx - px, dy = qy - py, ex = sx - rx, ey = sy - ry;
  const double denom = dx * ey - dy * ex;
  return ((rx - px) * ey - (ry - py) * ex) / denom;
}

}  // namespace detail

class OuterDiagram {
 public:
  OuterDiagram() = default;

  // Traversals are derived from chord geometry; ties break by crossing id.
  OuterDiagram(Graph g, CyclicOrder order, const std::vector<CrossingSpec>& specs)
      : graph_(std::move(g)), order_(std::move(order)) {
    // Parameters are quantised so concurrent chords (regular polygons have
    // them) tie exactly and fall back to id order.
    auto key = [&](const Edge& e, const Edge& f) {
      return std::llround(detail::chord_parameter(order_, e, f) * 1e9);
    };
    std::map<Edge, std::vector<std::pair<long long, int>>> along;
    for (const CrossingSpec& s : specs) {
      crossings_.push_back({s.id, s.over, s.under, -1, -1});
      along[s.over].emplace_back(key(s.over, s.under), s.id);
      if (s.under != s.over) along[s.under].emplace_back(key(s.under, s.over), s.id);
    }
    for (auto& [edge, items] : along) {
      std::sort(items.begin(), items.end());
      auto& seq = traversals_[edge];
      for (auto& item : items) seq.push_back(item.second);
    }
    for (auto& c : crossings_) {
      c.over_position = index_in(c.over, c.id);
      c.under_position = index_in(c.under, c.id);
    }
  }

  // Raw constructor: stores the data as given. validate_diagram reports
  // whatever is inconsistent.
  OuterDiagram(Graph g, CyclicOrder order, std::vector<Crossing> crossings,
               std::map<Edge, std::vector<int>> traversals)
      : graph_(std::move(g)), order_(std::move(order)),
        crossings_(std::move(crossings)), traversals_(std::move(traversals)) {}

  const Graph& graph() const { return graph_; }
  const CyclicOrder& boundary_order() const { return order_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::map<Edge, std::vector<int>>& traversals() const { return traversals_; }

  // Crossing ids met walking e from its smaller to its larger endpoint.
  const std::vector<int>& traversal(const Edge& e) const {
    static const std::vector<int> none;
    auto it = traversals_.find(e);
    return it == traversals_.end() ? none : it->second;
  }

  const Crossing* find_crossing(int id) const {
    for (const auto& c : crossings_)
      if (c.id == id) return &c;
    return nullptr;
  }

  std::vector<CrossingSpec> crossing_specs() const {
    std::vector<CrossingSpec> out;
    for (const auto& c : crossings_) out.push_back({c.id, c.over, c.under});
    return out;
  }

  friend bool operator==(const OuterDiagram&, const OuterDiagram&) = default;

 private:
  friend OuterDiagram crossing_change(const OuterDiagram& d, int id);

  int index_in(const Edge& e, int id) const {
    const auto& seq = traversal(e);
    auto it = std::find(seq.begin(), seq.end(), id);
    return it == seq.end() ? -1 : static_cast<int>(it - seq.begin());
  }

  Graph graph_;
  CyclicOrder order_;
  std::vector<Crossing> crossings_;
  std::map<Edge, std::vector<int>> traversals_;
};

struct DiagramViolation {
  std::string kind;
  std::string detail;
};

// Every structural invariant of a diagram; an empty list means valid.
// Besides bookkeeping, two disjoint arcs must cross an odd number of times
// exactly when their endpoints interleave on the boundary circle.
inline std::vector<DiagramViolation> validate_diagram(const OuterDiagram& d) {
  std::vector<DiagramViolation> out;
  const Graph& g = d.graph();
  if (!d.boundary_order().covers(g))
    out.push_back({"boundary order", "boundary order does not place exactly the graph's vertices"});

  std::map<int, int> seen_ids;
  std::map<std::pair<Edge, Edge>, int> pair_count;
  for (const Crossing& c : d.crossings()) {
    const std::string tag = "crossing " + std::to_string(c.id);
    if (++seen_ids[c.id] == 2) out.push_back({"duplicate crossing id", tag});
    if (!g.has_edge(c.over) || !g.has_edge(c.under)) {
      out.push_back({"unknown edge", tag + " names an edge that is not in the graph"});
      continue;
    }
    if (c.over == c.under) {
      out.push_back({"self-crossing", tag + " has edge " + g.edge_label(c.over) +
                                          " as both over and under strand"});
      continue;
    }
    int on_over = 0, on_under = 0, elsewhere = 0;
    for (const auto& [edge, seq] : d.traversals()) {
      int k = static_cast<int>(std::count(seq.begin(), seq.end(), c.id));
      if (edge == c.over) on_over += k;
      else if (edge == c.under) on_under += k;
      else elsewhere += k;
    }
    if (on_over == 0 || on_under == 0)
      out.push_back({"orphan crossing", tag + " is missing from the traversal of " +
                                            g.edge_label(on_over == 0 ? c.over : c.under)});
    if (on_over > 1 || on_under > 1)
      out.push_back({"repeated crossing", tag + " appears twice along one edge"});
    if (elsewhere > 0)
      out.push_back({"misplaced crossing", tag + " appears on an edge it does not involve"});
    if (on_over == 1 && on_under == 1) {
      const auto& so = d.traversal(c.over);
      const auto& su = d.traversal(c.under);
      if (c.over_position < 0 || c.over_position >= static_cast<int>(so.size()) ||
          so[c.over_position] != c.id || c.under_position < 0 ||
          c.under_position >= static_cast<int>(su.size()) || su[c.under_position] != c.id)
        out.push_back({"stale position", tag + " position indices do not match traversals"});
    }
    ++pair_count[{std::min(c.over, c.under), std::max(c.over, c.under)}];
  }
  for (const auto& [edge, seq] : d.traversals()) {
    if (!g.has_edge(edge) && !seq.empty())
      out.push_back({"unknown edge", "traversal listed for a non-edge"});
    for (int id : seq)
      if (!seen_ids.count(id))
        out.push_back({"unknown crossing id", "traversal names crossing " + std::to_string(id)});
  }
  if (d.boundary_order().covers(g)) {
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (!es[i].disjoint_from(es[j])) continue;
        auto it = pair_count.find({es[i], es[j]});
        int k = it == pair_count.end() ? 0 : it->second;
        if ((k % 2 == 1) != interleaves(d.boundary_order(), es[i], es[j]))
          out.push_back({"crossing parity", "arcs " + g.edge_label(es[i]) + " and " +
                                                g.edge_label(es[j]) +
                                                " cross with the wrong parity"});
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Convex diagrams

// The lexicographically smaller edge passes over.
struct LexicographicOver {};
// Independent fair coin per crossing, drawn in crossing-id order.
struct RandomOver {
  std::uint64_t seed = 0;
};
// Over strand per crossing pair keyed by (smaller, larger) edge; pairs not
// listed fall back to the lexicographic rule.
struct ExplicitOver {
  std::map<std::pair<Edge, Edge>, Edge> over;
};
using OverRule = std::variant<LexicographicOver, RandomOver, ExplicitOver>;

// Straight chords between boundary points: one crossing per interleaving
// pair of edges, numbered from 1 in lexicographic pair order.
inline OuterDiagram convex_diagram(const Graph& g, const CyclicOrder& o,
                                   const OverRule& rule = LexicographicOver{}) {
  if (!o.covers(g))
    throw GraphError("cyclic order does not place exactly the graph's vertices");
  std::optional<std::mt19937_64> rng;
  if (auto r = std::get_if<RandomOver>(&rule)) rng.emplace(r->seed);
  std::vector<CrossingSpec> specs;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (!interleaves(o, es[i], es[j])) continue;
      Edge over = es[i], under = es[j];
      if (rng) {
        if ((*rng)() & 1u) std::swap(over, under);
      } else if (auto ex = std::get_if<ExplicitOver>(&rule)) {
        auto it = ex->over.find({es[i], es[j]});
        if (it != ex->over.end() && it->second == es[j]) std::swap(over, under);
      }
      specs.push_back({static_cast<int>(specs.size()) + 1, over, under});
    }
  return OuterDiagram(g, o, specs);
}

inline OuterDiagram crossing_change(const OuterDiagram& d, int id) {
  OuterDiagram out = d;
  for (auto& c : out.crossings_)
    if (c.id == id) {
      std::swap(c.over, c.under);
      std::swap(c.over_position, c.under_position);
      return out;
    }
  throw GraphError("no crossing with id " + std::to_string(id));
}

// ---------------------------------------------------------------------------
// Cycles and links

// Every simple cycle, as a vertex sequence starting at its smallest vertex
// with second entry smaller than the last; sorted lexicographically.
inline std::vector<std::vector<Vertex>> simple_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  for (Vertex s = 0; s < n; ++s) {
    auto dfs = [&](auto&& self, Vertex v) -> void {
      for (Vertex w : g.neighbors(v)) {
        if (w < s) continue;
        if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        if (w == s || on_path[w]) continue;
        on_path[w] = 1;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        on_path[w] = 0;
      }
    };
    path = {s};
    on_path[s] = 1;
    dfs(dfs, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Edge> cycle_edges(const std::vector<Vertex>& cycle) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    out.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_simple_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) throw GraphError("a cycle needs at least three vertices");
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) throw GraphError("cycle repeats a vertex");
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
      throw GraphError("cycle uses a non-edge");
}

// A cycle and an edge disjoint from it.
struct CycleEdgeLink {
  std::vector<Vertex> cycle;
  Edge edge;

  std::string to_string(const Graph& g) const {
    std::string out = "(";
    for (Vertex v : cycle) out += g.label(v);
    return out + ", " + g.label(edge.u) + g.label(edge.v) + ")";
  }

  friend bool operator==(const CycleEdgeLink&, const CycleEdgeLink&) = default;
};

inline void require_valid_link(const Graph& g, const CycleEdgeLink& l) {
  require_simple_cycle(g, l.cycle);
  if (!g.has_edge(l.edge)) throw GraphError("link edge is not in the graph");
  for (Vertex v : l.cycle)
    if (l.edge.touches(v)) throw GraphError("link edge meets the cycle");
}

// Every (cycle, disjoint edge) pair, ordered by cycle then edge.
inline std::vector<CycleEdgeLink> all_cycle_edge_links(const Graph& g) {
  std::vector<CycleEdgeLink> out;
  for (const auto& cycle : simple_cycles(g))
    for (const Edge& e : g.edges())
      if (std::none_of(cycle.begin(), cycle.end(), [&](Vertex v) { return e.touches(v); }))
        out.push_back({cycle, e});
  return out;
}

namespace detail {
inline int over_count(const OuterDiagram& d, const Edge& e, const std::vector<Edge>& under) {
  int k = 0;
  for (const Crossing& c : d.crossings())
    if (c.over == e && std::binary_search(under.begin(), under.end(), c.under)) ++k;
  return k;
}
}  // namespace detail

// Parity of the number of times the edge passes over the cycle.
inline int lk2_cycle_edge(const OuterDiagram& d, const CycleEdgeLink& l) {
  require_valid_link(d.graph(), l);
  return detail::over_count(d, l.edge, cycle_edges(l.cycle)) % 2;
}

inline int link_parity_sum(const OuterDiagram& d) {
  int sum = 0;
  for (const auto& l : all_cycle_edge_links(d.graph())) sum ^= lk2_cycle_edge(d, l);
  return sum;
}

inline std::optional<CycleEdgeLink> find_nonsplit_outer_link(const OuterDiagram& d) {
  for (const auto& l : all_cycle_edge_links(d.graph()))
    if (lk2_cycle_edge(d, l)) return l;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Apex extension to a spatial diagram

// The diagram together with an apex outside the ball joined to every vertex
// by crossing-free edges. The apex is vertex graph.order() - 1.
struct SpatialDiagram {
  OuterDiagram base;
  Graph graph;
  Vertex apex = 0;
};

inline SpatialDiagram apex_extension(const OuterDiagram& d) {
  return {d, join_apex(d.graph()), d.graph().order()};
}

// Parity of crossings with the over strand on c1 and the under strand on c2.
// The opposite count has the same parity for disjoint closed curves; a
// mismatch means the diagram is not realisable and raises logic_error.
inline int lk2_cycle_cycle(const SpatialDiagram& s, const std::vector<Vertex>& c1,
                           const std::vector<Vertex>& c2) {
  require_simple_cycle(s.graph, c1);
  require_simple_cycle(s.graph, c2);
  for (Vertex v : c1)
    if (std::find(c2.begin(), c2.end(), v) != c2.end())
      throw GraphError("cycles share vertex " + s.graph.label(v));
  const auto e1 = cycle_edges(c1), e2 = cycle_edges(c2);
  int one_over_two = 0, two_over_one = 0;
  for (const Crossing& c : s.base.crossings()) {
    const bool over1 = std::binary_search(e1.begin(), e1.end(), c.over);
    const bool over2 = std::binary_search(e2.begin(), e2.end(), c.over);
    const bool under1 = std::binary_search(e1.begin(), e1.end(), c.under);
    const bool under2 = std::binary_search(e2.begin(), e2.end(), c.under);
    one_over_two += over1 && under2;
    two_over_one += over2 && under1;
  }
  if (one_over_two % 2 != two_over_one % 2)
    throw std::logic_error("cycle-cycle linking parity depends on crossing roles");
  return one_over_two % 2;
}

// Unordered pairs of vertex-disjoint simple cycles, first cycle smaller.
inline std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> disjoint_cycle_pairs(
    const Graph& g) {
  auto cycles = simple_cycles(g);
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      bool disjoint = std::none_of(cycles[i].begin(), cycles[i].end(), [&](Vertex v) {
        return std::find(cycles[j].begin(), cycles[j].end(), v) != cycles[j].end();
      });
      if (disjoint) out.emplace_back(cycles[i], cycles[j]);
    }
  return out;
}

// Sum of cycle-cycle linking numbers over all disjoint cycle pairs, mod 2.
// Supported graphs: K6 (ten triangle pairs) and K3,3,1.
inline int cg_sum(const SpatialDiagram& s) {
  static const CanonicalLabel k6 = canonical_form(complete_graph(6));
  static const CanonicalLabel k331 = canonical_form(join_apex(complete_bipartite(3, 3)));
  if (s.graph.order() > kCanonicalMaxOrder) throw GraphError("cg_sum supports only K6 and K3,3,1");
  const CanonicalLabel c = canonical_form(s.graph);
  if (c != k6 && c != k331) throw GraphError("cg_sum supports only K6 and K3,3,1");
  int sum = 0;
  for (const auto& [a, b] : disjoint_cycle_pairs(s.graph)) sum ^= lk2_cycle_cycle(s, a, b);
  return sum;
}

// ---------------------------------------------------------------------------
// Two-page witnesses

struct TwoPageLayout {
  CyclicOrder order;
  std::vector<int> page;  // page[i] in {0, 1} for graph.edges()[i]
};

inline constexpr int kTwoPageMaxOrder = 10;

// First cyclic order (in enumeration order) whose chord conflict graph is
// bipartite, with its page colouring. Nothing if none exists or the graph
// exceeds the search bound.
inline std::optional<TwoPageLayout> find_two_page_layout(const Graph& g) {
  const int n = g.order();
  if (n > kTwoPageMaxOrder) return std::nullopt;
  if (n < 3) return TwoPageLayout{natural_order(n), std::vector<int>(g.size(), 0)};
  const auto& es = g.edges();
  const std::size_t m = es.size();
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[i] = i;
  do {
    if (seq[1] >= seq.back()) continue;
    CyclicOrder o(seq);
    std::vector<std::vector<std::size_t>> conflict(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (interleaves(o, es[i], es[j])) {
          conflict[i].push_back(j);
          conflict[j].push_back(i);
        }
    std::vector<int> page(m, -1);
    bool ok = true;
    for (std::size_t s = 0; s < m && ok; ++s) {
      if (page[s] >= 0) continue;
      page[s] = 0;
      std::vector<std::size_t> stack{s};
      while (!stack.empty() && ok) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : conflict[x]) {
          if (page[y] < 0) {
            page[y] = 1 - page[x];
            stack.push_back(y);
          } else if (page[y] == page[x]) {
            ok = false;
          }
        }
      }
    }
    if (ok) return TwoPageLayout{o, page};
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return std::nullopt;
}

// Convex diagram of a two-page layout with every page-0 edge passing over
// every page-1 edge. All of its cycle-edge links are split.
inline std::optional<OuterDiagram> two_page_linkless_diagram(const Graph& g) {
  auto layout = find_two_page_layout(g);
  if (!layout) return std::nullopt;
  ExplicitOver rule;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (interleaves(layout->order, es[i], es[j]))
        rule.over[{es[i], es[j]}] = layout->page[i] == 0 ? es[i] : es[j];
  return convex_diagram(g, layout->order, rule);
}

}  // namespace outerlink
