// foldlp/graph.hpp
//
// Capacitated directed graphs over abstract vertex labels, cuts, and cut
// values.  Capacities form a total map on ordered distinct pairs; pairs not
// stored explicitly have capacity zero, and self-capacities are dropped on
// construction.

#ifndef FOLDLP_GRAPH_HPP
#define FOLDLP_GRAPH_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/rational.hpp"

namespace foldlp {

template <typename I>
class CapacitatedGraph {
 public:
  using Edge = std::pair<I, I>;

  CapacitatedGraph() = default;

  CapacitatedGraph(std::vector<I> vertices, std::map<Edge, Rational> capacities)
      : verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
      throw std::invalid_argument("graph: duplicate vertex");
    for (auto& [e, c] : capacities) {
      if (e.first == e.second) continue;  // self-capacities are ignored
      if (!has_vertex(e.first) || !has_vertex(e.second))
        throw std::invalid_argument("graph: capacity endpoint not a vertex");
      if (c.sign() < 0) throw std::invalid_argument("graph: negative capacity");
      if (!c.is_zero()) cap_.emplace(e, std::move(c));
    }
  }

  const std::vector<I>& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }

  bool has_vertex(const I& v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  // Total capacity map; unmentioned pairs have capacity zero.
  Rational capacity(const I& u, const I& v) const {
    auto it = cap_.find({u, v});
    return it == cap_.end() ? Rational(0) : it->second;
  }

  // The stored (nonzero) capacities, keyed by ordered pair.
  const std::map<Edge, Rational>& positive_capacities() const { return cap_; }

  bool is_symmetric() const {
    for (const auto& [e, c] : cap_)
      if (capacity(e.second, e.first) != c) return false;
    return true;
  }

  friend bool operator==(const CapacitatedGraph& a, const CapacitatedGraph& b) {
    return a.verts_ == b.verts_ && a.cap_ == b.cap_;
  }

 private:
  std::vector<I> verts_;         // sorted
  std::map<Edge, Rational> cap_;  // nonzero entries only
};

// One side of a cut; for (s,t)-cuts the side containing s.
template <typename I>
struct Cut {
  std::set<I> side;

  friend bool operator==(const Cut& a, const Cut& b) { return a.side == b.side; }
  friend bool operator!=(const Cut& a, const Cut& b) { return !(a == b); }
};

// Sum of capacities leaving the cut side.
template <typename I>
Rational cut_value(const CapacitatedGraph<I>& g, const Cut<I>& cut) {
  Rational total(0);
  for (const auto& [e, c] : g.positive_capacities())
    if (cut.side.count(e.first) && !cut.side.count(e.second)) total += c;
  return total;
}

}  // namespace foldlp

#endif  // FOLDLP_GRAPH_HPP
