#pragma once

// Links of two 0-spheres in a circle: every placement of a graph's vertices
// on S^1 turns each pair of disjoint edges into such a link, split or not.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "outerlink/cyclic_order.hpp"
#include "outerlink/graph.hpp"
#include "outerlink/planarity.hpp"

namespace outerlink {

// Two vertex-disjoint edges.
struct EdgePairLink {
  Edge first;
  Edge second;

  EdgePairLink() = default;
  EdgePairLink(Edge a, Edge b) : first(a), second(b) {
    if (!a.disjoint_from(b)) throw GraphError("linked edges must be disjoint");
  }

  std::string to_string(const Graph& g) const {
    return "(" + g.edge_label(first) + ", " + g.edge_label(second) + ")";
  }

  friend bool operator==(const EdgePairLink&, const EdgePairLink&) = default;
};

// Every dihedral-reduced cyclic order of g's vertices: (n - 1)! / 2 of them,
// in lexicographic order of their normal forms.
inline std::vector<CyclicOrder> enumerate_cyclic_orders(int n) {
  if (n < 3) throw GraphError("cyclic orders need at least 3 vertices");
  std::vector<CyclicOrder> out;
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[i] = i;
  do {
    if (seq[1] < seq.back()) out.emplace_back(seq);
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return out;
}

inline std::vector<CyclicOrder> enumerate_cyclic_orders(const Graph& g) {
  return enumerate_cyclic_orders(g.order());
}

// Visits the same orders without materialising them. Stops early when the
// visitor returns false; returns false in that case.
template <typename Visitor>
bool for_each_cyclic_order(int n, Visitor&& visit) {
  if (n < 3) throw GraphError("cyclic orders need at least 3 vertices");
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[i] = i;
  do {
    if (seq[1] < seq.back() && !visit(CyclicOrder(seq))) return false;
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return true;
}

// Mod-2 linking number: 1 iff the two pairs interleave on the circle.
inline int lk2_s1(const CyclicOrder& o, const EdgePairLink& l) {
  for (Vertex v : {l.first.u, l.first.v, l.second.u, l.second.v})
    if (!o.contains(v))
      throw GraphError("vertex " + std::to_string(v) + " is missing from the order");
  return interleaves(o, l.first, l.second) ? 1 : 0;
}

namespace detail {
inline void require_covers(const CyclicOrder& o, const Graph& g) {
  if (!o.covers(g))
    throw GraphError("cyclic order does not place exactly the graph's vertices");
}
}  // namespace detail

// First disjoint pair (in lexicographic pair order) with linking number 1.
inline std::optional<EdgePairLink> find_nonsplit_link(const CyclicOrder& o,
                                                      const Graph& g) {
  detail::require_covers(o, g);
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (interleaves(o, es[i], es[j])) return EdgePairLink(es[i], es[j]);
  return std::nullopt;
}

// Sum of linking numbers over all disjoint edge pairs, mod 2.
inline int parity_sum(const CyclicOrder& o, const Graph& g) {
  detail::require_covers(o, g);
  const auto& es = g.edges();
  int sum = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      sum ^= interleaves(o, es[i], es[j]) ? 1 : 0;
  return sum;
}

struct S1LinkReport {
  struct PairResult {
    EdgePairLink link;
    int lk2 = 0;
  };
  std::vector<PairResult> pairs;          // every disjoint pair, lexicographic
  std::optional<EdgePairLink> witness;    // first linked pair
  int parity = 0;
};

inline S1LinkReport analyze_s1_order(const CyclicOrder& o, const Graph& g) {
  detail::require_covers(o, g);
  S1LinkReport r;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (!es[i].disjoint_from(es[j])) continue;
      EdgePairLink l(es[i], es[j]);
      int lk = lk2_s1(o, l);
      r.pairs.push_back({l, lk});
      r.parity ^= lk;
      if (lk && !r.witness) r.witness = l;
    }
  return r;
}

inline constexpr int kBruteForceMaxOrder = 10;

struct S1Decision {
  bool intrinsically_linked = false;
  std::optional<CyclicOrder> linkless_order;  // present iff not linked
  std::uint64_t orders_checked = 0;
};

// Tries every cyclic order; g is intrinsically S^1-linked iff each one
// contains a non-split link.
inline S1Decision is_intrinsically_s1_linked_bruteforce(const Graph& g) {
  if (g.order() > kBruteForceMaxOrder)
    throw SizeBoundError("brute-force S^1 decision supports at most " +
                         std::to_string(kBruteForceMaxOrder) + " vertices");
  S1Decision d;
  if (g.order() < 3) {
    // Fewer than four vertices: no disjoint edge pairs at all.
    d.linkless_order = natural_order(g.order());
    d.orders_checked = 1;
    return d;
  }
  d.intrinsically_linked = for_each_cyclic_order(g.order(), [&](const CyclicOrder& o) {
    ++d.orders_checked;
    if (find_nonsplit_link(o, g)) return true;
    d.linkless_order = o;
    return false;
  });
  return d;
}

// Boundary order of an outerplanar embedding, read off the apex rotation of
// a planar embedding of g * v. No two disjoint edges interleave in it.
inline CyclicOrder linkless_order_from_outerplanar(const Graph& g) {
  OuterplanarityResult r = is_outerplanar(g);
  if (!r.outerplanar)
    throw GraphError("graph is not outerplanar; every cyclic order contains a "
                     "non-split link");
  return CyclicOrder(r.boundary_order);
}

}  // namespace outerlink
