#pragma once

// Text formats: edge lists, graph6, and the outer-diagram line format.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "outerlink/graph.hpp"
#include "outerlink/outer_diagram.hpp"

namespace outerlink {

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::string_view strip_comment(std::string_view s) {
  auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

inline bool looks_like_graph6(std::string_view s) {
  if (s.empty()) return false;
  if (s.size() >= 10 && s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= 63 && c <= 126; });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// graph6

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw GraphError("graph6 encoding supports fewer than 258048 vertices");
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s, int line = 1) {
  if (s.size() >= 10 && s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
  if (s.empty()) throw ParseError(line, "empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError(line, "invalid graph6 character");
  std::size_t at = 0;
  long n = s[at++] - 63;
  if (n == 63) {
    if (s.size() < 4) throw ParseError(line, "truncated graph6 size");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | (s[at++] - 63);
    if (n == 258047 + 1) throw ParseError(line, "graph6 8-byte sizes are not supported");
  }
  const long pairs = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (s.size() - at != need)
    throw ParseError(line, "graph6 length does not match " + std::to_string(n) + " vertices");
  std::vector<Edge> es;
  long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = s[at + static_cast<std::size_t>(bit / 6)] - 63;
      if ((byte >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
    }
  return Graph(static_cast<int>(n), es);
}

// ---------------------------------------------------------------------------
// Edge lists
//
// One edge per line as two vertex names; '#' starts a comment. A comment of
// the form "# vertices: a b c" declares vertex names and their order, which
// is how isolated vertices are written.

inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, Vertex> index;
  std::vector<Edge> edges;
  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<Vertex>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string_view view = line;
    auto hash = view.find('#');
    if (hash != std::string_view::npos) {
      std::string_view comment = view.substr(hash + 1);
      auto toks = detail::split_ws(comment);
      if (!toks.empty() && toks[0] == "vertices:")
        for (std::size_t k = 1; k < toks.size(); ++k) {
          if (index.count(toks[k])) throw ParseError(line_no, "vertex '" + toks[k] + "' declared twice");
          vertex(toks[k]);
        }
    }
    auto toks = detail::split_ws(detail::strip_comment(view));
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError(line_no, "expected two vertex names, found " + std::to_string(toks.size()));
    if (toks[0] == toks[1]) throw ParseError(line_no, "self-loop at vertex '" + toks[0] + "'");
    const Vertex a = vertex(toks[0]);
    const Vertex b = vertex(toks[1]);
    Edge e(a, b);
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError(line_no, "duplicate edge " + toks[0] + " " + toks[1]);
    edges.push_back(e);
  }
  return Graph(static_cast<int>(names.size()), edges).with_labels(names);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# vertices:";
  for (Vertex v = 0; v < g.order(); ++v) out << ' ' << g.label(v);
  out << '\n';
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

// Graphs in a text: a graph6 file yields one graph per non-empty line; any
// other text is a single edge list.
inline std::vector<Graph> parse_graphs(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto toks = detail::split_ws(line);
    if (!toks.empty()) lines.emplace_back(line_no, line);
  }
  bool graph6 = !lines.empty() && std::all_of(lines.begin(), lines.end(), [](const auto& l) {
    auto toks = detail::split_ws(l.second);
    return toks.size() == 1 && detail::looks_like_graph6(toks[0]);
  });
  if (!graph6) return {parse_edge_list(text)};
  std::vector<Graph> out;
  for (const auto& [no, line] : lines) out.push_back(from_graph6(detail::split_ws(line)[0], no));
  return out;
}

// Exactly one graph, in either format.
inline Graph parse_graph(std::string_view text) {
  auto graphs = parse_graphs(text);
  if (graphs.size() != 1)
    throw ParseError(1, "expected one graph, found " + std::to_string(graphs.size()));
  return graphs.front();
}

// ---------------------------------------------------------------------------
// Outer diagrams
//
//   outer-diagram
//   vertices a b c 1 2        vertex names in id order
//   order a b c 1 2           boundary circle, clockwise
//   E a-1                     one line per edge
//   X 1 over=a-1 under=b-2    one line per crossing
//
// Traversal orders are recomputed from chord geometry on load.

inline std::string to_diagram_text(const OuterDiagram& d) {
  const Graph& g = d.graph();
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::string name = g.label(v);
    if (name.find_first_of(" \t-=#") != std::string::npos)
      throw GraphError("vertex name '" + name + "' cannot be written in a diagram file");
  }
  std::ostringstream out;
  out << "outer-diagram\nvertices";
  for (Vertex v = 0; v < g.order(); ++v) out << ' ' << g.label(v);
  out << "\norder";
  for (Vertex v : d.boundary_order().sequence()) out << ' ' << g.label(v);
  out << '\n';
  for (const Edge& e : g.edges()) out << "E " << g.edge_label(e) << '\n';
  for (const Crossing& c : d.crossings())
    out << "X " << c.id << " over=" << g.edge_label(c.over)
        << " under=" << g.edge_label(c.under) << '\n';
  return out.str();
}

inline OuterDiagram parse_diagram_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> names;
  std::map<std::string, Vertex> index;
  std::vector<Vertex> order;
  std::vector<Edge> edges;
  std::vector<CrossingSpec> specs;
  bool header = false, have_vertices = false, have_order = false;
  int line_no = 0;
  auto vertex = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(line_no, "unknown vertex '" + name + "'");
    return it->second;
  };
  auto edge = [&](const std::string& token) {
    auto dash = token.find('-');
    if (dash == std::string::npos) throw ParseError(line_no, "malformed edge '" + token + "'");
    Vertex a = vertex(token.substr(0, dash)), b = vertex(token.substr(dash + 1));
    if (a == b) throw ParseError(line_no, "self-loop '" + token + "'");
    return Edge(a, b);
  };
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto toks = detail::split_ws(detail::strip_comment(line));
    if (toks.empty()) continue;
    if (!header) {
      if (toks[0] != "outer-diagram") throw ParseError(line_no, "missing outer-diagram header");
      header = true;
    } else if (toks[0] == "vertices") {
      for (std::size_t k = 1; k < toks.size(); ++k) {
        if (!index.emplace(toks[k], static_cast<Vertex>(names.size())).second)
          throw ParseError(line_no, "vertex '" + toks[k] + "' declared twice");
        names.push_back(toks[k]);
      }
      have_vertices = true;
    } else if (toks[0] == "order") {
      for (std::size_t k = 1; k < toks.size(); ++k) order.push_back(vertex(toks[k]));
      have_order = true;
    } else if (toks[0] == "E" && toks.size() == 2) {
      Edge e = edge(toks[1]);
      if (std::find(edges.begin(), edges.end(), e) != edges.end())
        throw ParseError(line_no, "duplicate edge '" + toks[1] + "'");
      edges.push_back(e);
    } else if (toks[0] == "X" && toks.size() == 4 && toks[2].rfind("over=", 0) == 0 &&
               toks[3].rfind("under=", 0) == 0) {
      int id = 0;
      try {
        std::size_t used = 0;
        id = std::stoi(toks[1], &used);
        if (used != toks[1].size()) throw std::invalid_argument("id");
      } catch (const std::exception&) {
        throw ParseError(line_no, "malformed crossing id '" + toks[1] + "'");
      }
      specs.push_back({id, edge(toks[2].substr(5)), edge(toks[3].substr(6))});
    } else {
      throw ParseError(line_no, "unrecognised line");
    }
  }
  if (!header || !have_vertices || !have_order)
    throw ParseError(line_no, "diagram needs header, vertices and order lines");
  Graph g = Graph(static_cast<int>(names.size()), edges).with_labels(names);
  try {
    OuterDiagram d(std::move(g), CyclicOrder(order), specs);
    auto violations = validate_diagram(d);
    if (!violations.empty())
      throw ParseError(line_no, "invalid diagram: " + violations.front().kind + " (" +
                                    violations.front().detail + ")");
    return d;
  } catch (const ParseError&) {
    throw;
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace outerlink
