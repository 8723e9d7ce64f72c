#pragma once

// Finite simple graphs and the structural operations used throughout the
// library: minors (deletion / contraction), vertex expansion, apex joins,
// named graphs, canonical labelling and isomorph-free enumeration.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace outerlink {

using Vertex = int;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive procedure is asked to run past its size bound.
class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw GraphError("edge endpoints must be distinct");
  }

  bool touches(Vertex w) const { return u == w || v == w; }
  bool disjoint_from(const Edge& o) const {
    return !touches(o.u) && !touches(o.v);
  }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Split of a vertex's neighbourhood for expand_vertex.
struct NeighborPartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int vertex_count) : adj_(check_count(vertex_count)) {}

  Graph(int vertex_count, const std::vector<Edge>& edges)
      : adj_(check_count(vertex_count)) {
    for (const Edge& e : edges) add_edge_checked(e);
    finish();
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  // Sorted lexicographically by (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }
  bool has_edge(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // Index of `e` in edges(), if present.
  std::optional<std::size_t> edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  // Display labels. Unlabelled graphs print vertex v as v + 1.
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v + 1) : labels_[v];
  }
  std::optional<Vertex> find_label(const std::string& name) const {
    for (Vertex v = 0; v < order(); ++v)
      if (label(v) == name) return v;
    return std::nullopt;
  }

  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != order())
      throw GraphError("label table size does not match vertex count");
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j])
          throw GraphError("duplicate vertex label '" + labels[i] + "'");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }
  Graph without_labels() const { return with_labels({}); }

  std::string edge_label(const Edge& e) const {
    return label(e.u) + "-" + label(e.v);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t check_count(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    return static_cast<std::size_t>(n);
  }
  void check_vertex(Vertex v) const {
    if (!has_vertex(v))
      throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
  }
  void add_edge_checked(const Edge& e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (std::find(adj_[e.u].begin(), adj_[e.u].end(), e.v) != adj_[e.u].end())
      throw GraphError("repeated edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    edges_.push_back(e);
  }
  void finish() {
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    std::sort(edges_.begin(), edges_.end());
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Named graphs

inline Graph complete_graph(int k) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) es.emplace_back(i, j);
  return Graph(k, es);
}

inline Graph cycle_graph(int k) {
  if (k < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
  return Graph(k, es);
}

inline Graph path_graph(int k) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
  return Graph(k, es);
}

// Sides are labelled a, b, c, ... and 1, 2, 3, ... when both fit.
inline Graph complete_bipartite(int m, int n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) es.emplace_back(i, m + j);
  Graph g(m + n, es);
  if (m <= 26 && n <= 9) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    for (int j = 0; j < n; ++j) names.push_back(std::to_string(j + 1));
    g = g.with_labels(std::move(names));
  }
  return g;
}

inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

// G * v: a new vertex adjacent to every vertex of g.
inline Graph join_apex(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> es = g.edges();
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, n);
  Graph out(n + 1, es);
  if (g.has_labels()) {
    auto names = g.labels();
    std::string apex = "v";
    while (g.find_label(apex)) apex += "*";
    names.push_back(apex);
    out = out.with_labels(std::move(names));
  }
  return out;
}

namespace detail {
inline int parse_positive(const std::string& digits, const std::string& name) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }) ||
      digits.size() > 4)
    throw GraphError("unknown graph name '" + name + "'");
  return std::stoi(digits);
}
}  // namespace detail

// Names: K4, K32, K5, K33, K6, K331, Petersen, Cn (n >= 3), Kn, Pn, Km,n.
inline Graph standard_graph(const std::string& name) {
  if (name == "K32") return complete_bipartite(3, 2);
  if (name == "K33") return complete_bipartite(3, 3);
  if (name == "K331") return join_apex(complete_bipartite(3, 3));
  if (name == "Petersen") return petersen_graph();
  if (name.size() >= 2) {
    const std::string rest = name.substr(1);
    if (name[0] == 'K') {
      if (auto comma = rest.find(','); comma != std::string::npos)
        return complete_bipartite(
            detail::parse_positive(rest.substr(0, comma), name),
            detail::parse_positive(rest.substr(comma + 1), name));
      return complete_graph(detail::parse_positive(rest, name));
    }
    if (name[0] == 'C') {
      int k = detail::parse_positive(rest, name);
      if (k < 3) throw GraphError("unknown graph name '" + name + "'");
      return cycle_graph(k);
    }
    if (name[0] == 'P') return path_graph(detail::parse_positive(rest, name));
  }
  throw GraphError("unknown graph name '" + name + "'");
}

// ---------------------------------------------------------------------------
// Minor operations

inline Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e))
    throw GraphError("edge " + std::to_string(e.u) + "-" +
                     std::to_string(e.v) + " is not in the graph");
  std::vector<Edge> es;
  for (const Edge& f : g.edges())
    if (f != e) es.push_back(f);
  return Graph(g.order(), es).with_labels(g.labels());
}

// Removes vertex v; higher ids shift down by one.
inline Graph delete_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw GraphError("vertex is not in the graph");
  auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  std::vector<Edge> es;
  for (const Edge& f : g.edges())
    if (!f.touches(v)) es.emplace_back(shift(f.u), shift(f.v));
  auto names = g.labels();
  if (!names.empty()) names.erase(names.begin() + v);
  return Graph(g.order() - 1, es).with_labels(std::move(names));
}

// Merges e.v into e.u. Parallel edges collapse, the loop is dropped, and ids
// above e.v shift down by one. The merged vertex keeps e.u's label.
inline Graph contract_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e))
    throw GraphError("edge " + std::to_string(e.u) + "-" +
                     std::to_string(e.v) + " is not in the graph");
  auto image = [&](Vertex w) {
    if (w == e.v) w = e.u;
    return w > e.v ? w - 1 : w;
  };
  std::vector<Edge> es;
  for (const Edge& f : g.edges()) {
    Vertex a = image(f.u), b = image(f.v);
    if (a == b) continue;
    Edge m(a, b);
    if (std::find(es.begin(), es.end(), m) == es.end()) es.push_back(m);
  }
  auto names = g.labels();
  if (!names.empty()) names.erase(names.begin() + e.v);
  return Graph(g.order() - 1, es).with_labels(std::move(names));
}

// v keeps its id and becomes v'; v'' is appended as vertex order().
// v' is adjacent to p.left and v'', v'' to p.right.
inline Graph expand_vertex(const Graph& g, Vertex v, const NeighborPartition& p) {
  if (!g.has_vertex(v)) throw GraphError("vertex is not in the graph");
  std::vector<Vertex> joined = p.left;
  joined.insert(joined.end(), p.right.begin(), p.right.end());
  std::sort(joined.begin(), joined.end());
  if (joined != g.neighbors(v) ||
      std::adjacent_find(joined.begin(), joined.end()) != joined.end())
    throw GraphError("partition does not split the neighbourhood of vertex " +
                     g.label(v));
  const Vertex twin = g.order();
  std::vector<Edge> es;
  for (const Edge& f : g.edges())
    if (!f.touches(v)) es.push_back(f);
  for (Vertex w : p.left) es.emplace_back(v, w);
  for (Vertex w : p.right) es.emplace_back(twin, w);
  es.emplace_back(v, twin);
  Graph out(g.order() + 1, es);
  if (g.has_labels()) {
    auto names = g.labels();
    names[v] = g.label(v) + "'";
    names.push_back(g.label(v) + "''");
    out = out.with_labels(std::move(names));
  }
  return out;
}

// One graph per unordered partition {L, R}: the lowest neighbour always goes
// left, giving 2^(deg - 1) results (one for an isolated vertex).
inline std::vector<Graph> enumerate_expansions(const Graph& g, Vertex v) {
  const auto& nb = g.neighbors(v);
  std::vector<Graph> out;
  if (nb.empty()) {
    out.push_back(expand_vertex(g, v, {}));
    return out;
  }
  const int rest = static_cast<int>(nb.size()) - 1;
  for (std::uint32_t mask = 0; mask < (1u << rest); ++mask) {
    NeighborPartition p;
    p.left.push_back(nb[0]);
    for (int i = 0; i < rest; ++i)
      ((mask >> i) & 1u ? p.right : p.left).push_back(nb[i + 1]);
    out.push_back(expand_vertex(g, v, p));
  }
  return out;
}

inline Graph add_edge(const Graph& g, const Edge& e) {
  if (g.has_edge(e)) throw GraphError("edge already present");
  std::vector<Edge> es = g.edges();
  es.push_back(e);
  return Graph(g.order(), es).with_labels(g.labels());
}

inline Graph add_isolated_vertex(const Graph& g) {
  Graph out(g.order() + 1, g.edges());
  if (g.has_labels()) {
    auto names = g.labels();
    std::string fresh = "w";
    while (g.find_label(fresh)) fresh += "'";
    names.push_back(fresh);
    out = out.with_labels(std::move(names));
  }
  return out;
}

// Relabels so that old vertex v becomes sigma[v]. Labels travel with vertices.
inline Graph permute(const Graph& g, const std::vector<Vertex>& sigma) {
  if (static_cast<int>(sigma.size()) != g.order())
    throw GraphError("permutation size mismatch");
  std::vector<Edge> es;
  for (const Edge& f : g.edges()) es.emplace_back(sigma[f.u], sigma[f.v]);
  Graph out(g.order(), es);
  if (g.has_labels()) {
    std::vector<std::string> names(g.order());
    for (Vertex v = 0; v < g.order(); ++v) names[sigma[v]] = g.label(v);
    out = out.with_labels(std::move(names));
  }
  return out;
}

// Vertices of the connected component containing `start`, ascending.
inline std::vector<Vertex> component_of(const Graph& g, Vertex start) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{start}, out;
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Vertex y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    out.push_back(component_of(g, v));
    for (Vertex w : out.back()) seen[w] = 1;
  }
  return out;
}

// Subgraph induced on `keep` (ascending); vertex keep[i] becomes i.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (const Edge& f : g.edges())
    if (index[f.u] >= 0 && index[f.v] >= 0) es.emplace_back(index[f.u], index[f.v]);
  Graph out(static_cast<int>(keep.size()), es);
  if (g.has_labels()) {
    std::vector<std::string> names;
    for (Vertex v : keep) names.push_back(g.label(v));
    out = out.with_labels(std::move(names));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labelling

inline constexpr int kCanonicalMaxOrder = 10;

struct CanonicalLabel {
  int order = 0;
  // Upper-triangle adjacency bits, column by column; pair (i, j) with i < j
  // is bit (P - 1 - k) where k counts pairs in column-major order and P is
  // the number of pairs. Earlier columns are more significant.
  std::uint64_t code = 0;

  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
};

namespace detail {

// Iterated degree refinement: each vertex's cell is replaced by (cell,
// sorted neighbour cells) until stable. Cell ids are ranks, so invariant.
inline std::vector<int> equitable_cells(const Graph& g) {
  const int n = g.order();
  std::vector<int> cell(n, 0);
  for (int cells = 1;;) {
    std::vector<std::vector<int>> key(n);
    for (Vertex v = 0; v < n; ++v) {
      key[v].push_back(cell[v]);
      std::vector<int> nc;
      for (Vertex w : g.neighbors(v)) nc.push_back(cell[w]);
      std::sort(nc.begin(), nc.end());
      key[v].insert(key[v].end(), nc.begin(), nc.end());
    }
    std::vector<std::vector<int>> distinct(key);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), key[v]) -
                                 distinct.begin());
    if (static_cast<int>(distinct.size()) == cells) return cell;
    cells = static_cast<int>(distinct.size());
  }
}

}  // namespace detail

// Minimum code over vertex orders that list refined cells in rank order.
// Branch and bound column by column; twins in the same cell are tried once.
inline CanonicalLabel canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw SizeBoundError("canonical_form supports at most " +
                         std::to_string(kCanonicalMaxOrder) + " vertices");
  if (n == 0) return {0, 0};
  const std::vector<int> cell = detail::equitable_cells(g);
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::vector<Vertex> by_cell(n);
  std::iota(by_cell.begin(), by_cell.end(), 0);
  std::stable_sort(by_cell.begin(), by_cell.end(),
                   [&](Vertex a, Vertex b) { return cell[a] < cell[b]; });
  std::vector<int> slot_cell(n);
  for (int i = 0; i < n; ++i) slot_cell[i] = cell[by_cell[i]];

  std::vector<Vertex> order(n, -1);
  std::vector<std::uint32_t> col(n, 0), best(n, 0);
  std::vector<int> cmp(n + 1, 0);  // cmp[j]: prefix through column j-1 vs best
  bool have_best = false;
  std::uint32_t used = 0;

  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      if (!have_best || cmp[j] < 0) {
        best = col;
        have_best = true;
        std::fill(cmp.begin(), cmp.end(), 0);
      }
      return;
    }
    std::uint32_t tried = 0;
    for (Vertex v : by_cell) {
      if (cell[v] != slot_cell[j] || (used >> v & 1u)) continue;
      bool twin_seen = false;
      for (Vertex w = 0; w < n && !twin_seen; ++w)
        if ((tried >> w & 1u) && (adj[v] & ~(1u << w)) == (adj[w] & ~(1u << v))) twin_seen = true;
      if (twin_seen) continue;
      tried |= 1u << v;
      std::uint32_t c = 0;
      for (int i = 0; i < j; ++i)
        if (adj[v] >> order[i] & 1u) c |= 1u << (j - 1 - i);
      int here = cmp[j];
      if (have_best && here == 0) here = c < best[j] ? -1 : (c > best[j] ? 1 : 0);
      if (have_best && here > 0) continue;
      order[j] = v;
      col[j] = c;
      cmp[j + 1] = here;
      used |= 1u << v;
      self(self, j + 1);
      used &= ~(1u << v);
    }
  };
  rec(rec, 0);

  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) code = (code << j) | best[j];
  return {n, code};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

// Rebuilds the graph encoded by a canonical label.
inline Graph graph_from_canonical(const CanonicalLabel& c) {
  std::vector<Edge> es;
  const int pairs = c.order * (c.order - 1) / 2;
  int k = 0;
  for (int j = 1; j < c.order; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((c.code >> (pairs - 1 - k)) & 1u) es.emplace_back(i, j);
  return Graph(c.order, es);
}

inline constexpr int kEnumerateMaxOrder = 7;

// Every isomorphism class on exactly n vertices, once each, ordered by
// canonical code. Built by adding a vertex to each class on n - 1 vertices.
inline std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kEnumerateMaxOrder)
    throw SizeBoundError("enumerate_graphs supports 1 <= n <= " +
                         std::to_string(kEnumerateMaxOrder));
  std::vector<CanonicalLabel> layer{canonical_form(Graph(1))};
  for (int k = 2; k <= n; ++k) {
    std::vector<CanonicalLabel> next;
    for (const CanonicalLabel& c : layer) {
      const Graph base = graph_from_canonical(c);
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<Edge> es = base.edges();
        for (int i = 0; i < k - 1; ++i)
          if ((mask >> i) & 1u) es.emplace_back(i, k - 1);
        next.push_back(canonical_form(Graph(k, es)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(layer.size());
  for (const auto& c : layer) out.push_back(graph_from_canonical(c));
  return out;
}

// All classes on 1..n vertices, smallest first.
inline std::vector<Graph> enumerate_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto layer = enumerate_graphs(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace outerlink
