// foldlp/matching.hpp
//
// Fractional b-matching: degree-bounded edge weights with odd-set
// constraints y(W) <= (b(W) - 1)/2 for vertex sets W of odd total bound.
// The polytope has integral extreme points, so its optimum equals the best
// integral b-matching; for unit bounds and weights it is the maximum
// matching size.
//
// Separation runs in two strict stages.  The explicit stage checks y >= 0
// and the degree constraints, answering like separate_explicit.  The odd-set
// stage builds a slack graph H over the vertices plus one auxiliary vertex:
// edge capacities carry y, auxiliary capacities carry the degree slacks, and
// the marks are the odd-bound vertices (plus the auxiliary vertex to even
// the count).  A cut of H avoiding the auxiliary vertex on side W has value
// y(W : V\W) + s(W) = b(W) - 2 y(W), so odd-set violations are exactly the
// odd marked cuts of value below one; all such canonical minimum (s,t)-cuts
// over marked pairs are collected, deduplicated, summed, and rescaled.

#ifndef FOLDLP_MATCHING_HPP
#define FOLDLP_MATCHING_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/flow.hpp"
#include "foldlp/graph.hpp"
#include "foldlp/odd_cut.hpp"
#include "foldlp/opt_star.hpp"
#include "foldlp/polytope.hpp"
#include "foldlp/rational.hpp"
#include "foldlp/vec.hpp"

namespace foldlp {

// Undirected graph with per-vertex integer bounds b and per-edge weights c.
// Edges are stored as ordered pairs with first < second; omitted bounds and
// weights default to one, giving the plain maximum matching problem.
template <typename I>
class MatchingInstance {
 public:
  using EdgeId = std::pair<I, I>;

  MatchingInstance(std::vector<I> vertices, std::vector<EdgeId> edges,
                   std::map<I, Rational> bounds = {},
                   std::map<EdgeId, Rational> weights = {})
      : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw std::invalid_argument("matching: duplicate vertex");
    for (EdgeId& e : edges) {
      if (e.second < e.first) std::swap(e.first, e.second);
      if (e.first == e.second)
        throw std::invalid_argument("matching: loop edge");
      if (!has_vertex(e.first) || !has_vertex(e.second))
        throw std::invalid_argument("matching: edge endpoint not a vertex");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("matching: duplicate edge");
    edges_ = std::move(edges);

    for (const I& v : vertices_) bounds_[v] = Rational(1);
    for (auto& [v, q] : bounds) {
      if (!has_vertex(v))
        throw std::invalid_argument("matching: bound for unknown vertex");
      if (!q.is_integer() || q.sign() < 0)
        throw std::invalid_argument("matching: bounds must be nonnegative integers");
      bounds_[v] = std::move(q);
    }
    for (const EdgeId& e : edges_) weights_[e] = Rational(1);
    for (auto& [e, q] : weights) {
      EdgeId key = e.second < e.first ? EdgeId{e.second, e.first} : e;
      if (!weights_.count(key))
        throw std::invalid_argument("matching: weight for unknown edge");
      if (q.sign() < 0)
        throw std::invalid_argument("matching: weights must be nonnegative");
      weights_[key] = std::move(q);
    }
  }

  const std::vector<I>& vertices() const { return vertices_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool has_vertex(const I& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  const Rational& bound(const I& v) const { return bounds_.at(v); }
  const Rational& weight(const EdgeId& e) const { return weights_.at(e); }
  int incidence(const I& v, const EdgeId& e) const {
    return (e.first == v || e.second == v) ? 1 : 0;
  }
  Vec<EdgeId> objective() const {
    return Vec<EdgeId>::build(edges_,
                              [&](const EdgeId& e) { return weights_.at(e); });
  }

 private:
  std::vector<I> vertices_;
  std::vector<EdgeId> edges_;
  std::map<I, Rational> bounds_;
  std::map<EdgeId, Rational> weights_;
};

// Vertex type of the slack graph: engaged values are original vertices, the
// disengaged value is the auxiliary vertex.
template <typename I>
using SlackVertex = std::optional<I>;

// The explicit constraint system y >= 0, Ay <= b of the instance.
template <typename I>
ExplicitPolytope<std::pair<I, I>> matching_explicit_system(
    const MatchingInstance<I>& inst) {
  using EdgeId = std::pair<I, I>;
  using Row = typename ExplicitPolytope<EdgeId>::Row;
  std::vector<Row> rows;
  for (const EdgeId& e : inst.edges()) {
    Vec<EdgeId> a = Vec<EdgeId>::zero(inst.edges());
    a.set(e, Rational(-1));
    rows.push_back(Row{std::move(a), Rational(0)});
  }
  for (const I& v : inst.vertices()) {
    Vec<EdgeId> a = Vec<EdgeId>::build(inst.edges(), [&](const EdgeId& e) {
      return Rational(inst.incidence(v, e));
    });
    rows.push_back(Row{std::move(a), inst.bound(v)});
  }
  return ExplicitPolytope<EdgeId>(inst.edges(), std::move(rows));
}

// Builds the marked slack graph for a point satisfying the explicit
// constraints: edge capacities y_e, auxiliary capacities s_v = b_v - (Ay)_v,
// marks at odd-bound vertices plus the auxiliary vertex if needed to make
// the mark count even.
template <typename I>
MarkedGraph<SlackVertex<I>> slack_graph(const MatchingInstance<I>& inst,
                                        const Vec<std::pair<I, I>>& y) {
  using U = SlackVertex<I>;
  std::map<I, Rational> slack;
  for (const I& v : inst.vertices()) slack[v] = inst.bound(v);
  for (const auto& [e, q] : y) {
    if (q.sign() < 0)
      throw std::invalid_argument("slack graph: point violates explicit constraints");
    slack[e.first] -= q;
    slack[e.second] -= q;
  }
  for (const auto& [v, s] : slack)
    if (s.sign() < 0)
      throw std::invalid_argument("slack graph: point violates explicit constraints");

  std::vector<U> verts;
  verts.push_back(std::nullopt);
  for (const I& v : inst.vertices()) verts.push_back(U(v));
  std::map<std::pair<U, U>, Rational> cap;
  for (const auto& [e, q] : y) {
    cap[{U(e.first), U(e.second)}] = q;
    cap[{U(e.second), U(e.first)}] = q;
  }
  for (const auto& [v, s] : slack) {
    cap[{std::nullopt, U(v)}] = s;
    cap[{U(v), std::nullopt}] = s;
  }
  std::set<U> marks;
  for (const I& v : inst.vertices())
    if (inst.bound(v).num() % 2 != 0) marks.insert(U(v));
  if (marks.size() % 2 != 0) marks.insert(std::nullopt);
  return MarkedGraph<U>(CapacitatedGraph<U>(std::move(verts), std::move(cap)),
                        std::move(marks));
}

// Separation oracle for the b-matching polytope.  Explicit violations are
// answered first, exactly as separate_explicit does; otherwise every odd
// marked canonical cut of the slack graph with value below one contributes
// its odd-set constraint, and the deduplicated sum is rescaled to inf-norm
// one with a certified right-hand side.
template <typename I>
SeparationOracle<std::pair<I, I>> build_matching_polytope_oracle(
    const MatchingInstance<I>& inst) {
  using EdgeId = std::pair<I, I>;
  auto shared = std::make_shared<MatchingInstance<I>>(inst);
  auto expl = std::make_shared<ExplicitPolytope<EdgeId>>(matching_explicit_system(inst));

  Rational total_b(0);
  Rational max_b(0);
  for (const I& v : inst.vertices()) {
    total_b += inst.bound(v);
    if (max_b < inst.bound(v)) max_b = inst.bound(v);
  }
  SizeBounds bounds;
  bounds.facet_bits = 3 * inst.edges().size() + total_b.bit_size() + 2;
  bounds.coord_bits = max_b.bit_size() + 1;
  bounds.ray_bits = 0;

  auto query = [shared, expl](const Vec<EdgeId>& y) -> SeparationAnswer<EdgeId> {
    SeparationAnswer<EdgeId> first = separate_explicit(*expl, y);
    if (first.is_violated()) return first;
    if (first.is_infeasible())
      throw std::logic_error("matching oracle: explicit stage cannot cancel");

    std::set<std::set<I>> odd_sets;
    {
      MarkedGraph<SlackVertex<I>> h = slack_graph(*shared, y);
      if (h.marked.empty()) return SeparationAnswer<EdgeId>::inside();
      for (const SlackVertex<I>& s : h.marked)
        for (const SlackVertex<I>& t : h.marked) {
          if (s == t) continue;
          Cut<SlackVertex<I>> c =
              canonical_min_cut(h.base, s, t, FlowBackend::Aug);
          if (!is_odd_marked_cut(h, c)) continue;
          if (!(cut_value(h.base, c) < Rational(1))) continue;
          std::set<I> w;
          if (c.side.count(std::nullopt)) {
            for (const I& v : shared->vertices())
              if (!c.side.count(SlackVertex<I>(v))) w.insert(v);
          } else {
            for (const SlackVertex<I>& v : c.side) w.insert(*v);
          }
          odd_sets.insert(std::move(w));
        }
    }
    if (odd_sets.empty()) return SeparationAnswer<EdgeId>::inside();

    Vec<EdgeId> normal = Vec<EdgeId>::zero(shared->edges());
    Rational rhs(0);
    for (const std::set<I>& w : odd_sets) {
      Rational bw(0);
      for (const I& v : w) bw += shared->bound(v);
      if (bw.num() % 2 == 0)
        throw std::logic_error("matching oracle: collected set has even bound sum");
      for (const EdgeId& e : shared->edges())
        if (w.count(e.first) && w.count(e.second))
          normal.set(e, normal[e] + Rational(1));
      rhs += (bw - Rational(1)) / Rational(2);
    }
    Rational scale = Rational(1) / inf_norm(normal);
    for (const auto& [e, q] : normal) normal.set(e, q * scale);
    return SeparationAnswer<EdgeId>::violated(std::move(normal), rhs * scale);
  };

  return SeparationOracle<EdgeId>{inst.edges(), bounds, std::move(query)};
}

// Optimum of the b-matching linear program, which by integrality of its
// extreme points equals the best integral b-matching value.
template <typename I>
Rational max_b_matching_value(const MatchingInstance<I>& inst) {
  OptOutcome<std::pair<I, I>> out =
      opt_star(build_matching_polytope_oracle(inst), inst.objective());
  if (!out.is_optimal())
    throw std::logic_error("matching: optimization must end optimal");
  return *out.value;
}

// Perfect-matching decision for the unit-bound, unit-weight case.
template <typename I>
bool has_perfect_matching(const MatchingInstance<I>& inst) {
  for (const I& v : inst.vertices())
    if (inst.bound(v) != Rational(1))
      throw std::invalid_argument("perfect matching: requires unit bounds");
  for (const auto& e : inst.edges())
    if (inst.weight(e) != Rational(1))
      throw std::invalid_argument("perfect matching: requires unit weights");
  if (inst.vertices().size() % 2 != 0) return false;
  return max_b_matching_value(inst) ==
         Rational(static_cast<long>(inst.vertices().size()), 2);
}

}  // namespace foldlp

#endif  // FOLDLP_MATCHING_HPP
