#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "outerlink/graph.hpp"

namespace outerlink {

// Placement of vertices on a circle, read clockwise. Stored in dihedral
// normal form: smallest vertex first, and for three or more vertices the
// second entry is smaller than the last.
class CyclicOrder {
 public:
  CyclicOrder() = default;

  explicit CyclicOrder(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
    Vertex top = -1;
    for (Vertex v : seq_) {
      if (v < 0) throw GraphError("cyclic order contains a negative vertex");
      top = std::max(top, v);
    }
    pos_.assign(static_cast<std::size_t>(top + 1), -1);
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (pos_[seq_[i]] != -1)
        throw GraphError("cyclic order repeats vertex " + std::to_string(seq_[i]));
      pos_[seq_[i]] = static_cast<int>(i);
    }
    normalize();
  }

  const std::vector<Vertex>& sequence() const { return seq_; }
  int size() const { return static_cast<int>(seq_.size()); }

  bool contains(Vertex v) const {
    return v >= 0 && v < static_cast<Vertex>(pos_.size()) && pos_[v] >= 0;
  }
  // Clockwise position in the normal form; -1 when absent.
  int position(Vertex v) const { return contains(v) ? pos_[v] : -1; }

  // True when this is an order of exactly the vertices of g.
  bool covers(const Graph& g) const {
    if (size() != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v)
      if (!contains(v)) return false;
    return true;
  }

  std::string to_string(const Graph& g) const {
    std::string out = "(";
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (i) out += ",";
      out += g.label(seq_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) {
    return a.seq_ == b.seq_;
  }
  friend auto operator<=>(const CyclicOrder& a, const CyclicOrder& b) {
    return a.seq_ <=> b.seq_;
  }

 private:
  void normalize() {
    if (seq_.empty()) return;
    auto smallest = std::min_element(seq_.begin(), seq_.end());
    std::rotate(seq_.begin(), smallest, seq_.end());
    if (seq_.size() >= 3 && seq_[1] > seq_.back())
      std::reverse(seq_.begin() + 1, seq_.end());
    for (std::size_t i = 0; i < seq_.size(); ++i)
      pos_[seq_[i]] = static_cast<int>(i);
  }

  std::vector<Vertex> seq_;
  std::vector<int> pos_;
};

// The order 0, 1, ..., n - 1.
inline CyclicOrder natural_order(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[i] = i;
  return CyclicOrder(std::move(seq));
}

// True when the endpoints of `b` separate the endpoints of `a` on the circle.
// Edges sharing an endpoint never interleave.
inline bool interleaves(const CyclicOrder& o, const Edge& a, const Edge& b) {
  if (!a.disjoint_from(b)) return false;
  int i = o.position(a.u), j = o.position(a.v);
  if (i > j) std::swap(i, j);
  auto inside = [&](Vertex w) {
    int p = o.position(w);
    return p > i && p < j;
  };
  return inside(b.u) != inside(b.v);
}

}  // namespace outerlink
