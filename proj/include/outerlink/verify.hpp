#pragma once

// Exhaustive and seeded sweeps that check the classification theorems at
// desk scale. Each sweep reports the number of cases checked and the first
// counterexample in case order, independent of how many workers ran it.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "outerlink/classify.hpp"
#include "outerlink/graph.hpp"
#include "outerlink/io.hpp"
#include "outerlink/outer_diagram.hpp"
#include "outerlink/planarity.hpp"
#include "outerlink/s1_link.hpp"

namespace outerlink {

struct SweepResult {
  bool pass = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // empty on pass
};

// splitmix64 finaliser; used to derive independent per-case seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  return mix_seed(mix_seed(mix_seed(seed ^ mix_seed(a)) ^ b) ^ c);
}

// Runs check(i) for i in [0, count) on up to `jobs` threads. check returns a
// counterexample description or nothing. The reported counterexample is the
// one with the smallest index.
inline SweepResult run_cases(std::size_t count, int jobs,
                             const std::function<std::optional<std::string>(std::size_t)>& check) {
  std::vector<std::optional<std::string>> found(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{count};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (i > first_bad.load()) continue;
      found[i] = check(i);
      if (found[i]) {
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  SweepResult r;
  for (std::size_t i = 0; i < count; ++i)
    if (found[i]) {
      r.pass = false;
      r.counterexample = *found[i];
      r.checked = i + 1;
      return r;
    }
  r.checked = count;
  return r;
}

// Brute-force Hamiltonicity over cyclic orders.
inline bool is_hamiltonian(const Graph& g) {
  if (g.order() < 3) return false;
  return !for_each_cyclic_order(g.order(), [&](const CyclicOrder& o) {
    const auto& s = o.sequence();
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!g.has_edge(s[i], s[(i + 1) % s.size()])) return true;
    return false;
  });
}

inline std::string describe(const Graph& g) {
  return "graph6 " + to_graph6(g) + " (" + std::to_string(g.order()) + " vertices, " +
         std::to_string(g.size()) + " edges)";
}

// Brute-force intrinsic S^1-linking equals non-outerplanarity.
inline SweepResult verify_s1_equivalence(int n, int jobs = 1) {
  const auto graphs = enumerate_graphs_up_to(n);
  return run_cases(graphs.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const Graph& g = graphs[i];
    const bool linked = is_intrinsically_s1_linked_bruteforce(g).intrinsically_linked;
    const bool outer = is_outerplanar(g).outerplanar;
    if (linked == outer)
      return describe(g) + ": brute force says " + (linked ? "linked" : "linkless") +
             " but outerplanar=" + (outer ? "true" : "false");
    return std::nullopt;
  });
}

// Outerplanar iff no K4 and no K3,2 minor; planar iff no K5 and no K3,3 minor.
inline SweepResult verify_forbidden_minors(int n, int jobs = 1) {
  const auto graphs = enumerate_graphs_up_to(n);
  const Graph k4 = complete_graph(4), k32 = complete_bipartite(3, 2);
  const Graph k5 = complete_graph(5), k33 = complete_bipartite(3, 3);
  return run_cases(graphs.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const Graph& g = graphs[i];
    for (const Graph* h : {&k4, &k32, &k5, &k33})
      if (auto w = has_minor(g, *h); w && !validate_minor_witness(g, *w).empty())
        return describe(g) + ": invalid minor witness";
    const bool outer_minor_free = !has_minor(g, k4) && !has_minor(g, k32);
    const bool planar_minor_free = !has_minor(g, k5) && !has_minor(g, k33);
    if (is_outerplanar(g).outerplanar != outer_minor_free)
      return describe(g) + ": outerplanarity disagrees with K4/K3,2 minor search";
    if (is_planar(g).planar != planar_minor_free)
      return describe(g) + ": planarity disagrees with K5/K3,3 minor search";
    return std::nullopt;
  });
}

// Every expansion of every vertex of K4 and K3,2 is intrinsically S^1-linked.
inline SweepResult verify_expansion_preservation(int jobs = 1) {
  std::vector<std::pair<std::string, Graph>> cases;
  for (const Graph& base : {complete_graph(4), complete_bipartite(3, 2)}) {
    const std::string name = base.order() == 4 ? "K4" : "K32";
    for (Vertex v = 0; v < base.order(); ++v) {
      auto expansions = enumerate_expansions(base, v);
      for (std::size_t k = 0; k < expansions.size(); ++k)
        cases.emplace_back(name + " vertex " + base.label(v) + " partition " + std::to_string(k),
                           expansions[k]);
    }
  }
  return run_cases(cases.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    if (!is_intrinsically_s1_linked_bruteforce(cases[i].second).intrinsically_linked)
      return cases[i].first + " expands to a graph with a linkless order";
    return std::nullopt;
  });
}

// Over every dihedral order and `trials` seeded assignments each, the convex
// diagram has link parity 1 and a non-split (cycle, edge) link.
inline SweepResult verify_outer_parity(const Graph& g, int trials, std::uint64_t seed,
                                       int jobs = 1) {
  const auto orders = enumerate_cyclic_orders(g);
  const std::size_t per = static_cast<std::size_t>(std::max(trials, 0));
  return run_cases(orders.size() * per, jobs, [&](std::size_t i) -> std::optional<std::string> {
    const std::size_t oi = i / per, t = i % per;
    const std::uint64_t s = derive_seed(seed, g.size(), oi, t);
    const OuterDiagram d = convex_diagram(g, orders[oi], RandomOver{s});
    if (link_parity_sum(d) != 1 || !find_nonsplit_outer_link(d))
      return "order " + orders[oi].to_string(g) + " seed " + std::to_string(s) +
             ": link parity sum is 0";
    return std::nullopt;
  });
}

// Flipping any single crossing of seeded K5 and K3,3 diagrams keeps the
// link parity sum.
inline SweepResult verify_crossing_invariance(int trials, std::uint64_t seed, int jobs = 1) {
  const Graph k5 = complete_graph(5), k33 = complete_bipartite(3, 3);
  const auto o5 = enumerate_cyclic_orders(k5), o33 = enumerate_cyclic_orders(k33);
  const std::size_t per = static_cast<std::size_t>(std::max(trials, 0));
  return run_cases(2 * per, jobs, [&](std::size_t i) -> std::optional<std::string> {
    const bool first = i < per;
    const Graph& g = first ? k5 : k33;
    const auto& orders = first ? o5 : o33;
    const std::size_t t = first ? i : i - per;
    const std::uint64_t s = derive_seed(seed, g.size(), t);
    const CyclicOrder& o = orders[mix_seed(s) % orders.size()];
    const OuterDiagram d = convex_diagram(g, o, RandomOver{s});
    const int base = link_parity_sum(d);
    for (const Crossing& c : d.crossings()) {
      const OuterDiagram flipped = crossing_change(d, c.id);
      if (link_parity_sum(flipped) != base)
        return std::string(first ? "K5" : "K33") + " order " + o.to_string(g) + " seed " +
               std::to_string(s) + ": flipping crossing " + std::to_string(c.id) +
               " changes the parity sum";
    }
    return std::nullopt;
  });
}

// cg_sum of the apex extension is 1 for seeded K5 (K6 form) and K3,3
// (K3,3,1 form) diagrams. For K5 the triangle through the apex that extends
// the first non-split (cycle, edge) link is also linked with its cycle.
inline SweepResult verify_apex_cg(int k5_trials, int k33_trials, std::uint64_t seed,
                                  int jobs = 1) {
  const Graph k5 = complete_graph(5), k33 = complete_bipartite(3, 3);
  const auto o5 = enumerate_cyclic_orders(k5), o33 = enumerate_cyclic_orders(k33);
  const std::size_t n5 = static_cast<std::size_t>(std::max(k5_trials, 0));
  const std::size_t n33 = static_cast<std::size_t>(std::max(k33_trials, 0));
  return run_cases(n5 + n33, jobs, [&](std::size_t i) -> std::optional<std::string> {
    const bool first = i < n5;
    const Graph& g = first ? k5 : k33;
    const auto& orders = first ? o5 : o33;
    const std::uint64_t s = derive_seed(seed, 0xa9e7, g.size(), first ? i : i - n5);
    const CyclicOrder& o = orders[mix_seed(s) % orders.size()];
    const OuterDiagram d = convex_diagram(g, o, RandomOver{s});
    const SpatialDiagram sd = apex_extension(d);
    const std::string tag =
        std::string(first ? "K5" : "K33") + " order " + o.to_string(g) + " seed " + std::to_string(s);
    if (cg_sum(sd) != 1) return tag + ": cycle-pair parity sum is 0";
    if (first) {
      auto link = find_nonsplit_outer_link(d);
      if (!link) return tag + ": no non-split link";
      std::vector<Vertex> triangle{link->edge.u, link->edge.v, sd.apex};
      if (lk2_cycle_cycle(sd, triangle, link->cycle) != 1)
        return tag + ": apex triangle is split from " + link->to_string(g);
    }
    return std::nullopt;
  });
}

// Intrinsic outer-linking equals non-planarity; planar Hamiltonian graphs get
// an all-split two-page diagram, and non-planar ones show a non-split link
// in their natural convex diagram.
inline SweepResult verify_outer_equivalence(int n, int jobs = 1) {
  const auto graphs = enumerate_graphs_up_to(n);
  return run_cases(graphs.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const Graph& g = graphs[i];
    const ClassificationReport r = classify(g);
    if (r.intrinsically_outer_linked == r.planar)
      return describe(g) + ": outer-linked flag does not equal non-planarity";
    if (r.planar && is_hamiltonian(g)) {
      auto d = two_page_linkless_diagram(g);
      if (!d) return describe(g) + ": Hamiltonian planar graph without a two-page diagram";
      if (!validate_diagram(*d).empty()) return describe(g) + ": two-page diagram is invalid";
      for (const auto& l : all_cycle_edge_links(g))
        if (lk2_cycle_edge(*d, l)) return describe(g) + ": two-page diagram has a non-split link";
    }
    if (!r.planar &&
        !find_nonsplit_outer_link(convex_diagram(g, natural_order(g.order()))))
      return describe(g) + ": non-planar graph with a split-only diagram";
    return std::nullopt;
  });
}

// The boundary order built from an outerplanar embedding has no non-split link.
inline SweepResult verify_linkless_orders(int n, int jobs = 1) {
  std::vector<Graph> outer;
  for (const Graph& g : enumerate_graphs_up_to(n))
    if (is_outerplanar(g).outerplanar) outer.push_back(g);
  return run_cases(outer.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const Graph& g = outer[i];
    const CyclicOrder o = linkless_order_from_outerplanar(g);
    if (!o.covers(g)) return describe(g) + ": order does not cover the graph";
    if (auto l = find_nonsplit_link(o, g))
      return describe(g) + ": order " + o.to_string(g) + " links " + l->to_string(g);
    return std::nullopt;
  });
}

}  // namespace outerlink
