#pragma once

// Planarity and outerplanarity with certificates, and fixed-minor search.
//
// Planar embeddings come from path addition (Demoucron, Malgrange and
// Pertuiset) run on each biconnected block; block rotations are concatenated
// at cut vertices. Non-planar graphs are certified by a K5 or K3,3 minor,
// read off a minimal non-planar subgraph. Outerplanarity is decided through
// the apex graph g * v and certified by a K4 or K3,2 minor from has_minor.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "outerlink/graph.hpp"

namespace outerlink {

// Branch sets of a minor h in a host g: branch_sets[x] is the connected set
// of host vertices contracted onto vertex x of h.
struct MinorWitness {
  Graph minor;
  std::vector<std::vector<Vertex>> branch_sets;
};

// Empty when the witness satisfies every branch-set invariant.
inline std::vector<std::string> validate_minor_witness(const Graph& g,
                                                       const MinorWitness& w) {
  std::vector<std::string> problems;
  const Graph& h = w.minor;
  if (static_cast<int>(w.branch_sets.size()) != h.order()) {
    problems.push_back("branch set count differs from minor order");
    return problems;
  }
  std::vector<int> owner(g.order(), -1);
  for (int x = 0; x < h.order(); ++x) {
    const auto& set = w.branch_sets[x];
    if (set.empty()) problems.push_back("branch set " + h.label(x) + " is empty");
    for (Vertex v : set) {
      if (!g.has_vertex(v)) {
        problems.push_back("branch set " + h.label(x) + " names a missing vertex");
        continue;
      }
      if (owner[v] != -1)
        problems.push_back("vertex " + g.label(v) + " lies in two branch sets");
      owner[v] = x;
    }
  }
  if (!problems.empty()) return problems;
  for (int x = 0; x < h.order(); ++x) {
    const auto& set = w.branch_sets[x];
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{set.front()};
    seen[set.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex b : g.neighbors(a))
        if (!seen[b] && owner[b] == x) {
          seen[b] = 1;
          stack.push_back(b);
        }
    }
    if (reached != set.size())
      problems.push_back("branch set " + h.label(x) + " is not connected");
  }
  for (const Edge& e : h.edges()) {
    bool joined = false;
    for (Vertex a : w.branch_sets[e.u])
      for (Vertex b : g.neighbors(a))
        if (owner[b] == e.v) joined = true;
    if (!joined)
      problems.push_back("no host edge realises minor edge " + h.edge_label(e));
  }
  return problems;
}

inline constexpr int kMinorHostMaxOrder = 12;
inline constexpr int kMinorPatternMaxOrder = 7;

namespace detail {

// Backtracking assignment of host vertices to branch sets.
class MinorSearch {
 public:
  // With allow_unused false every host vertex joins some branch set, which
  // loses nothing on a connected host: a leftover vertex next to a branch
  // set can always be absorbed into it.
  MinorSearch(const Graph& g, const Graph& h, bool allow_unused)
      : g_(g), h_(h), n_(g.order()), k_(h.order()), allow_unused_(allow_unused),
        assign_(n_, -1), processed_(n_, 0), count_(k_, 0), twin_class_(k_) {
    build_order();
    // Mutual twins of h are interchangeable; their sets open in index order.
    for (int x = 0; x < k_; ++x) {
      twin_class_[x] = x;
      for (int y = 0; y < x; ++y)
        if (twins(x, y)) {
          twin_class_[x] = twin_class_[y];
          break;
        }
    }
  }

  std::optional<MinorWitness> run() {
    if (k_ == 0) return MinorWitness{h_, {}};
    if (k_ > n_ || h_.size() > g_.size()) return std::nullopt;
    if (!search(0)) return std::nullopt;
    MinorWitness w{h_, std::vector<std::vector<Vertex>>(k_)};
    for (Vertex v = 0; v < n_; ++v)
      if (assign_[v] >= 0) w.branch_sets[assign_[v]].push_back(v);
    return w;
  }

 private:
  // Descending degree to start, then greedily the vertex with the most
  // already-ordered neighbours, so branch sets close early.
  void build_order() {
    std::vector<char> used(n_, 0);
    std::vector<int> touched(n_, 0);
    for (int step = 0; step < n_; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (used[v]) continue;
        if (best < 0 || touched[v] > touched[best] ||
            (touched[v] == touched[best] && g_.degree(v) > g_.degree(best)))
          best = v;
      }
      used[best] = 1;
      order_.push_back(best);
      for (Vertex w : g_.neighbors(best)) ++touched[w];
    }
  }

  bool twins(int x, int y) const {
    for (int z = 0; z < k_; ++z) {
      if (z == x || z == y) continue;
      if (h_.has_edge(x, z) != h_.has_edge(y, z)) return false;
    }
    return true;
  }

  // An empty set may open only after every lower set of its twin class.
  bool may_open(int c) const {
    for (int d = 0; d < c; ++d)
      if (twin_class_[d] == twin_class_[c] && count_[d] == 0) return false;
    return true;
  }

  bool search(std::size_t t) {
    if (t == order_.size()) return complete();
    const Vertex v = order_[t];
    processed_[v] = 1;
    for (int c = 0; c < k_; ++c) {
      if (count_[c] == 0 && !may_open(c)) continue;
      assign_[v] = c;
      ++count_[c];
      bool found = feasible(t + 1) && search(t + 1);
      if (found) return true;
      --count_[c];
    }
    assign_[v] = -1;
    if (allow_unused_ && feasible(t + 1) && search(t + 1)) return true;
    processed_[v] = 0;
    return false;
  }

  bool has_open_neighbor(Vertex v) const {
    for (Vertex w : g_.neighbors(v))
      if (!processed_[w]) return true;
    return false;
  }

  // Pruning: enough vertices left for empty sets, no stranded component of
  // a branch set, and no required minor edge that can no longer appear.
  bool feasible(std::size_t done) const {
    const int remaining = n_ - static_cast<int>(done);
    std::vector<int> count(k_, 0);
    for (Vertex v = 0; v < n_; ++v)
      if (assign_[v] >= 0) ++count[assign_[v]];
    int empty = 0;
    for (int c = 0; c < k_; ++c) empty += count[c] == 0;
    if (empty > remaining) return false;

    std::vector<char> closed(k_, 1);
    std::vector<int> comp(n_, -1);
    for (int c = 0; c < k_; ++c) {
      if (!count[c]) continue;
      int components = 0;
      bool stranded = false;
      for (Vertex s = 0; s < n_; ++s) {
        if (assign_[s] != c || comp[s] >= 0) continue;
        ++components;
        bool open = false;
        std::vector<Vertex> stack{s};
        comp[s] = s;
        while (!stack.empty()) {
          Vertex a = stack.back();
          stack.pop_back();
          open = open || has_open_neighbor(a);
          for (Vertex b : g_.neighbors(a))
            if (assign_[b] == c && comp[b] < 0) {
              comp[b] = s;
              stack.push_back(b);
            }
        }
        if (open) closed[c] = 0;
        else stranded = true;
      }
      if (stranded && components > 1) return false;
    }
    for (const Edge& e : h_.edges()) {
      if (!count[e.u] && !count[e.v]) continue;
      // A closed set cannot meet a set that is still empty.
      if (!count[e.u] || !count[e.v]) {
        if (closed[count[e.u] ? e.u : e.v]) return false;
        continue;
      }
      if (!closed[e.u] && !closed[e.v]) continue;
      if (!joined(e.u, e.v)) return false;
    }
    return true;
  }

  bool joined(int a, int b) const {
    for (Vertex v = 0; v < n_; ++v) {
      if (assign_[v] != a) continue;
      for (Vertex w : g_.neighbors(v))
        if (assign_[w] == b) return true;
    }
    return false;
  }

  bool complete() const {
    std::vector<int> count(k_, 0);
    for (Vertex v = 0; v < n_; ++v)
      if (assign_[v] >= 0) ++count[assign_[v]];
    for (int c = 0; c < k_; ++c)
      if (!count[c]) return false;
    for (const Edge& e : h_.edges())
      if (!joined(e.u, e.v)) return false;
    // Connectivity of each set: every processed set is closed here, so
    // feasible() has already rejected disconnected ones.
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  int k_;
  bool allow_unused_;
  std::vector<int> assign_;
  std::vector<char> processed_;
  std::vector<int> count_;
  std::vector<int> twin_class_;
  std::vector<Vertex> order_;
};

}  // namespace detail

// Branch sets witnessing h as a minor of g, or nothing.
inline std::optional<MinorWitness> has_minor(const Graph& g, const Graph& h) {
  if (g.order() > kMinorHostMaxOrder)
    throw SizeBoundError("has_minor supports hosts with at most " +
                         std::to_string(kMinorHostMaxOrder) + " vertices");
  if (h.order() > kMinorPatternMaxOrder)
    throw SizeBoundError("has_minor supports patterns with at most " +
                         std::to_string(kMinorPatternMaxOrder) + " vertices");
  const bool pattern_connected = h.order() > 0 && connected_components(h).size() == 1;
  if (!pattern_connected) return detail::MinorSearch(g, h, true).run();
  // A connected pattern lives inside one component of the host.
  for (const auto& comp : connected_components(g)) {
    if (static_cast<int>(comp.size()) < h.order()) continue;
    const Graph part = induced_subgraph(g, comp);
    if (auto w = detail::MinorSearch(part, h, false).run()) {
      for (auto& set : w->branch_sets)
        for (Vertex& v : set) v = comp[v];
      return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Embeddings

// rotation[v]: clockwise cyclic order of v's neighbours.
struct RotationSystem {
  std::vector<std::vector<Vertex>> rotation;

  // Neighbour following `from` clockwise around v.
  Vertex successor(Vertex v, Vertex from) const {
    const auto& r = rotation[v];
    auto it = std::find(r.begin(), r.end(), from);
    if (it == r.end()) throw std::logic_error("rotation does not contain neighbour");
    ++it;
    return it == r.end() ? r.front() : *it;
  }
};

// Faces by dart tracing: after u -> v comes v -> successor(v, u).
inline std::vector<std::vector<Vertex>> trace_faces(const Graph& g,
                                                    const RotationSystem& rs) {
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::vector<Vertex>> faces;
  for (const Edge& e : g.edges())
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (used.count({a, b})) continue;
      std::vector<Vertex> face;
      Vertex x = a, y = b;
      while (used.insert({x, y}).second) {
        face.push_back(x);
        Vertex z = rs.successor(y, x);
        x = y;
        y = z;
      }
      faces.push_back(std::move(face));
    }
  return faces;
}

// V - E + F = 2 on every connected component (an isolated vertex has one face).
inline bool satisfies_euler(const Graph& g, const RotationSystem& rs) {
  if (static_cast<int>(rs.rotation.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto r = rs.rotation[v];
    std::sort(r.begin(), r.end());
    if (r != g.neighbors(v)) return false;
  }
  auto faces = trace_faces(g, rs);
  std::vector<int> comp_id(g.order(), -1);
  auto comps = connected_components(g);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) comp_id[v] = static_cast<int>(c);
  std::vector<long> chi(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) chi[c] = static_cast<long>(comps[c].size());
  for (const Edge& e : g.edges()) --chi[comp_id[e.u]];
  for (const auto& f : faces) ++chi[comp_id[f.front()]];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    long faces_extra = comps[c].size() == 1 ? 1 : 0;
    if (chi[c] + faces_extra != 2) return false;
  }
  return true;
}

namespace detail {

// Faces of a planar embedding of a biconnected graph with at least three
// vertices, each a consistently oriented vertex cycle; nothing if non-planar.
inline std::optional<std::vector<std::vector<Vertex>>> embed_biconnected(const Graph& b) {
  const int m = b.order();
  std::vector<char> in_h(m, 0);
  std::vector<std::vector<char>> edge_in_h(m, std::vector<char>(m, 0));
  int h_edges = 0;
  auto add_path = [&](const std::vector<Vertex>& p) {
    for (Vertex v : p) in_h[v] = 1;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      edge_in_h[p[i]][p[i + 1]] = edge_in_h[p[i + 1]][p[i]] = 1;
      ++h_edges;
    }
  };

  // Initial cycle through the first edge.
  const Edge first = b.edges().front();
  std::vector<Vertex> parent(m, -1);
  std::vector<Vertex> queue{first.v};
  parent[first.v] = first.v;
  for (std::size_t qi = 0; qi < queue.size() && parent[first.u] < 0; ++qi) {
    Vertex x = queue[qi];
    for (Vertex y : b.neighbors(x)) {
      if (parent[y] >= 0 || (x == first.v && y == first.u)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[first.u] < 0) throw std::logic_error("block is not biconnected");
  std::vector<Vertex> cycle;
  for (Vertex x = first.u; x != first.v; x = parent[x]) cycle.push_back(x);
  cycle.push_back(first.v);
  std::vector<Vertex> closed = cycle;
  closed.push_back(cycle.front());
  add_path(closed);
  std::vector<std::vector<Vertex>> faces{cycle, std::vector<Vertex>(cycle.rbegin(), cycle.rend())};

  struct Fragment {
    std::vector<Vertex> attachments;
    std::vector<Vertex> inner;  // empty for a single chord
  };

  while (h_edges < b.size()) {
    std::vector<Fragment> fragments;
    for (const Edge& e : b.edges())
      if (in_h[e.u] && in_h[e.v] && !edge_in_h[e.u][e.v])
        fragments.push_back({{e.u, e.v}, {}});
    std::vector<char> seen(m, 0);
    for (Vertex s = 0; s < m; ++s) {
      if (in_h[s] || seen[s]) continue;
      Fragment f;
      std::vector<Vertex> stack{s};
      seen[s] = 1;
      std::set<Vertex> att;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        f.inner.push_back(x);
        for (Vertex y : b.neighbors(x)) {
          if (in_h[y]) att.insert(y);
          else if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      f.attachments.assign(att.begin(), att.end());
      fragments.push_back(std::move(f));
    }

    std::size_t chosen = fragments.size(), chosen_face = 0;
    std::size_t fallback = fragments.size(), fallback_face = 0;
    for (std::size_t fi = 0; fi < fragments.size() && chosen == fragments.size(); ++fi) {
      std::vector<std::size_t> admissible;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        const auto& face = faces[k];
        bool all = std::all_of(
            fragments[fi].attachments.begin(), fragments[fi].attachments.end(),
            [&](Vertex a) { return std::find(face.begin(), face.end(), a) != face.end(); });
        if (all) admissible.push_back(k);
      }
      if (admissible.empty()) return std::nullopt;
      if (admissible.size() == 1) {
        chosen = fi;
        chosen_face = admissible.front();
      } else if (fallback == fragments.size()) {
        fallback = fi;
        fallback_face = admissible.front();
      }
    }
    if (chosen == fragments.size()) {
      chosen = fallback;
      chosen_face = fallback_face;
    }
    const Fragment& frag = fragments[chosen];
    if (frag.attachments.size() < 2) throw std::logic_error("block is not biconnected");

    std::vector<Vertex> path;
    const Vertex a1 = frag.attachments[0], a2 = frag.attachments[1];
    if (frag.inner.empty()) {
      path = {a1, a2};
    } else {
      std::vector<char> inner(m, 0);
      for (Vertex x : frag.inner) inner[x] = 1;
      std::vector<Vertex> prev(m, -1);
      std::vector<Vertex> q;
      for (Vertex y : b.neighbors(a1))
        if (inner[y]) {
          prev[y] = a1;
          q.push_back(y);
        }
      Vertex end = -1;
      for (std::size_t qi = 0; qi < q.size() && end < 0; ++qi) {
        Vertex x = q[qi];
        if (b.has_edge(x, a2)) {
          end = x;
          break;
        }
        for (Vertex y : b.neighbors(x))
          if (inner[y] && prev[y] < 0) {
            prev[y] = x;
            q.push_back(y);
          }
      }
      if (end < 0) throw std::logic_error("fragment path not found");
      path.push_back(a2);
      for (Vertex x = end; x != a1; x = prev[x]) path.push_back(x);
      path.push_back(a1);
      std::reverse(path.begin(), path.end());
    }

    const auto face = faces[chosen_face];
    const std::size_t len = face.size();
    const std::size_t i = std::find(face.begin(), face.end(), path.front()) - face.begin();
    const std::size_t j = std::find(face.begin(), face.end(), path.back()) - face.begin();
    std::vector<Vertex> fa, fb;
    for (std::size_t k = i;; k = (k + 1) % len) {
      fa.push_back(face[k]);
      if (k == j) break;
    }
    for (std::size_t k = path.size() - 2; k >= 1; --k) fa.push_back(path[k]);
    for (std::size_t k = j;; k = (k + 1) % len) {
      fb.push_back(face[k]);
      if (k == i) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) fb.push_back(path[k]);
    faces[chosen_face] = std::move(fa);
    faces.push_back(std::move(fb));
    add_path(path);
  }
  return faces;
}

// Edge sets of the biconnected blocks (bridges are single-edge blocks).
inline std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;
  auto dfs = [&](auto&& self, Vertex v, Vertex parent) -> void {
    disc[v] = low[v] = timer++;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        self(self, w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<Edge> block;
          Edge top(v, w);
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(dfs, v, -1);
  return blocks;
}

}  // namespace detail

// A planar rotation system for g, or nothing when g is not planar.
inline std::optional<RotationSystem> planar_embedding(const Graph& g) {
  const int n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return std::nullopt;
  RotationSystem rs{std::vector<std::vector<Vertex>>(n)};
  for (const auto& block : detail::biconnected_blocks(g)) {
    if (block.size() == 1) {
      rs.rotation[block[0].u].push_back(block[0].v);
      rs.rotation[block[0].v].push_back(block[0].u);
      continue;
    }
    std::vector<Vertex> verts;
    for (const Edge& e : block) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<Edge> local_edges;
    for (const Edge& e : block) local_edges.emplace_back(local(e.u), local(e.v));
    Graph sub(static_cast<int>(verts.size()), local_edges);
    auto faces = detail::embed_biconnected(sub);
    if (!faces) return std::nullopt;
    // succ[v][u] = w for every u -> v -> w on a face.
    std::vector<std::map<Vertex, Vertex>> succ(sub.order());
    for (const auto& f : *faces)
      for (std::size_t k = 0; k < f.size(); ++k)
        succ[f[(k + 1) % f.size()]][f[k]] = f[(k + 2) % f.size()];
    for (Vertex lv = 0; lv < sub.order(); ++lv) {
      const auto& nb = sub.neighbors(lv);
      Vertex start = nb.front(), x = start;
      auto& out = rs.rotation[verts[lv]];
      do {
        out.push_back(verts[x]);
        x = succ[lv].at(x);
      } while (x != start);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (rs.rotation[v].size() != g.neighbors(v).size())
      throw std::logic_error("rotation system does not cover every edge");
  return rs;
}

namespace detail {

// Deletes edges while `still_bad` holds; what is left is edge-minimal.
template <typename Predicate>
Graph minimal_subgraph(const Graph& g, Predicate still_bad) {
  std::vector<Edge> kept = g.edges();
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Edge> trial = kept;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (still_bad(Graph(g.order(), trial))) kept = std::move(trial);
    else ++i;
  }
  return Graph(g.order(), kept);
}

// Paths of a subdivision between its branch vertices (degree >= 3).
// Each path lists its vertices from branch end to branch end.
inline std::vector<std::vector<Vertex>> subdivision_paths(const Graph& s) {
  std::vector<std::vector<Vertex>> paths;
  for (Vertex b = 0; b < s.order(); ++b) {
    if (s.degree(b) < 3) continue;
    for (Vertex first : s.neighbors(b)) {
      std::vector<Vertex> p{b, first};
      Vertex prev = b, cur = first;
      while (s.degree(cur) == 2) {
        Vertex next = s.neighbors(cur)[0] == prev ? s.neighbors(cur)[1] : s.neighbors(cur)[0];
        prev = cur;
        cur = next;
        p.push_back(cur);
      }
      if (p.front() < p.back() ||
          (p.front() == p.back() && p[1] < p[p.size() - 2]))
        paths.push_back(std::move(p));
    }
  }
  return paths;
}

// Minor witness of the pattern a minimal obstruction subdivides.
// Accepts subdivisions of K5, K3,3, K4 and K2,3.
inline MinorWitness witness_from_subdivision(const Graph& s) {
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < s.order(); ++v)
    if (s.degree(v) >= 3) branch.push_back(v);
  auto paths = subdivision_paths(s);
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::find(branch.begin(), branch.end(), v) - branch.begin());
  };

  MinorWitness w;
  if (branch.size() == 5 || branch.size() == 4) {
    w.minor = complete_graph(static_cast<int>(branch.size()));
    w.branch_sets.resize(branch.size());
    for (std::size_t i = 0; i < branch.size(); ++i) w.branch_sets[i] = {branch[i]};
    for (const auto& p : paths)
      for (std::size_t k = 1; k + 1 < p.size(); ++k)
        w.branch_sets[index_of(p.front())].push_back(p[k]);
  } else if (branch.size() == 6) {
    // Two-colour the branch vertices along the paths.
    std::vector<int> side(6, -1);
    side[0] = 0;
    for (int round = 0; round < 6; ++round)
      for (const auto& p : paths) {
        int a = index_of(p.front()), c = index_of(p.back());
        if (side[a] >= 0 && side[c] < 0) side[c] = 1 - side[a];
        if (side[c] >= 0 && side[a] < 0) side[a] = 1 - side[c];
      }
    w.minor = complete_bipartite(3, 3);
    w.branch_sets.resize(6);
    std::vector<int> slot(6);
    int next[2] = {0, 3};
    for (int i = 0; i < 6; ++i) {
      if (side[i] < 0 || next[side[i]] > (side[i] == 0 ? 2 : 5))
        throw std::logic_error("obstruction is not a K3,3 subdivision");
      slot[i] = next[side[i]]++;
      w.branch_sets[slot[i]] = {branch[i]};
    }
    for (const auto& p : paths)
      for (std::size_t k = 1; k + 1 < p.size(); ++k)
        w.branch_sets[slot[index_of(p.front())]].push_back(p[k]);
  } else if (branch.size() == 2) {
    // K2,3: the two branch vertices are the degree-3 side; each of the three
    // paths contracts onto one vertex of the other side.
    w.minor = complete_bipartite(3, 2);
    w.branch_sets.resize(5);
    w.branch_sets[3] = {branch[0]};
    w.branch_sets[4] = {branch[1]};
    if (paths.size() != 3) throw std::logic_error("obstruction is not a K2,3 subdivision");
    for (std::size_t i = 0; i < 3; ++i) {
      if (paths[i].size() < 3) throw std::logic_error("K2,3 subdivision path has no interior");
      w.branch_sets[i].assign(paths[i].begin() + 1, paths[i].end() - 1);
    }
  } else {
    throw std::logic_error("minimal obstruction has an unexpected shape");
  }
  for (auto& set : w.branch_sets) std::sort(set.begin(), set.end());
  return w;
}

}  // namespace detail

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> rotation_system;  // when planar
  std::optional<MinorWitness> obstruction;        // K5 or K3,3 when not
};

inline std::string obstruction_name(const MinorWitness& w) {
  const Graph& h = w.minor;
  if (h.order() == 5 && h.size() == 10) return "K5";
  if (h.order() == 6 && h.size() == 9) return "K33";
  if (h.order() == 4 && h.size() == 6) return "K4";
  if (h.order() == 5 && h.size() == 6) return "K32";
  return "H";
}

inline PlanarityResult is_planar(const Graph& g) {
  PlanarityResult r;
  if (auto rs = planar_embedding(g)) {
    if (!satisfies_euler(g, *rs))
      throw std::logic_error("planar embedding fails the Euler face count");
    r.planar = true;
    r.rotation_system = std::move(rs);
    return r;
  }
  Graph core = detail::minimal_subgraph(
      g, [](const Graph& x) { return !planar_embedding(x).has_value(); });
  r.obstruction = detail::witness_from_subdivision(core);
  if (!validate_minor_witness(g, *r.obstruction).empty())
    throw std::logic_error("Kuratowski witness failed validation");
  return r;
}

struct OuterplanarityResult {
  bool outerplanar = false;
  std::vector<Vertex> boundary_order;       // apex rotation, when outerplanar
  std::optional<MinorWitness> obstruction;  // K4 or K3,2 when not
};

// Outerplanar iff g * v is planar; the apex rotation is the boundary order.
inline OuterplanarityResult is_outerplanar(const Graph& g) {
  OuterplanarityResult r;
  const Graph apex_graph = join_apex(g);
  if (auto rs = planar_embedding(apex_graph)) {
    r.outerplanar = true;
    r.boundary_order = rs->rotation[g.order()];
    return r;
  }
  if (g.order() <= kMinorHostMaxOrder) {
    if (auto w = has_minor(g, complete_graph(4))) r.obstruction = std::move(w);
    else if (auto w2 = has_minor(g, complete_bipartite(3, 2))) r.obstruction = std::move(w2);
  } else {
    Graph core = detail::minimal_subgraph(g, [](const Graph& x) {
      return !planar_embedding(join_apex(x)).has_value();
    });
    r.obstruction = detail::witness_from_subdivision(core);
  }
  if (!r.obstruction)
    throw std::logic_error("apex test and forbidden-minor search disagree");
  return r;
}

}  // namespace outerlink
