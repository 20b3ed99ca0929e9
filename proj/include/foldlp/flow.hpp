// foldlp/flow.hpp
//
// Maximum (s,t)-flow, flow normalization, residual reachability, and the
// canonical minimum cut (the residual-reachable side of any maximum flow,
// which equals the intersection of all minimum cuts and is therefore
// independent of the flow used).
//
// Two interchangeable max-flow backends: the explicit flow linear program
// solved exactly, and a shortest-augmenting-path method.  Both produce
// maximum flows; everything canonical downstream agrees between them.

#ifndef FOLDLP_FLOW_HPP
#define FOLDLP_FLOW_HPP

#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/graph.hpp"
#include "foldlp/polytope.hpp"
#include "foldlp/rational.hpp"
#include "foldlp/vec.hpp"

namespace foldlp {

template <typename I>
struct Flow {
  CapacitatedGraph<I> graph;
  I source;
  I sink;
  std::map<std::pair<I, I>, Rational> assignment;  // missing pairs carry zero

  Rational at(const I& u, const I& v) const {
    auto it = assignment.find({u, v});
    return it == assignment.end() ? Rational(0) : it->second;
  }

  // Net flow into the sink.
  Rational value() const {
    Rational total(0);
    for (const I& v : graph.vertices()) {
      if (v == sink) continue;
      total += at(v, sink) - at(sink, v);
    }
    return total;
  }

  // Capacity bounds and conservation at internal vertices, checked exactly.
  bool is_feasible() const {
    for (const auto& [e, f] : assignment) {
      if (f.sign() < 0 || f > graph.capacity(e.first, e.second)) return false;
    }
    for (const I& u : graph.vertices()) {
      if (u == source || u == sink) continue;
      Rational net(0);
      for (const I& v : graph.vertices()) {
        if (v == u) continue;
        net += at(v, u) - at(u, v);
      }
      if (!net.is_zero()) return false;
    }
    return true;
  }
};

enum class FlowBackend { Lp, Aug };

// The explicit flow system: one variable per ordered distinct pair, capacity
// and nonnegativity bounds on every pair, and conservation (as opposing
// inequalities) at every vertex other than the source and sink.  Constraint
// count is exactly 2|V|^2 - 4.  The objective is the net flow into the sink.
template <typename I>
std::pair<ExplicitPolytope<std::pair<I, I>>, Vec<std::pair<I, I>>> build_flow_lp(
    const CapacitatedGraph<I>& g, const I& s, const I& t) {
  using PairI = std::pair<I, I>;
  if (s == t) throw std::invalid_argument("flow: source equals sink");
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw std::invalid_argument("flow: endpoint not a vertex");

  std::vector<PairI> vars;
  for (const I& u : g.vertices())
    for (const I& v : g.vertices())
      if (u != v) vars.push_back({u, v});

  using Row = typename ExplicitPolytope<PairI>::Row;
  std::vector<Row> rows;
  for (const PairI& p : vars) {
    Vec<PairI> up = Vec<PairI>::zero(vars);
    up.set(p, Rational(1));
    rows.push_back({up, g.capacity(p.first, p.second)});
    Vec<PairI> down = Vec<PairI>::zero(vars);
    down.set(p, Rational(-1));
    rows.push_back({down, Rational(0)});
  }
  for (const I& u : g.vertices()) {
    if (u == s || u == t) continue;
    Vec<PairI> net = Vec<PairI>::zero(vars);
    for (const I& v : g.vertices()) {
      if (v == u) continue;
      net.set({v, u}, Rational(1));
      net.set({u, v}, Rational(-1));
    }
    rows.push_back({net, Rational(0)});
    rows.push_back({-net, Rational(0)});
  }

  Vec<PairI> objective = Vec<PairI>::zero(vars);
  for (const I& v : g.vertices()) {
    if (v == t) continue;
    objective.set({v, t}, Rational(1));
    objective.set({t, v}, Rational(-1));
  }
  return {ExplicitPolytope<PairI>(vars, std::move(rows)), std::move(objective)};
}

namespace detail {

template <typename I>
Flow<I> max_flow_lp(const CapacitatedGraph<I>& g, const I& s, const I& t) {
  auto [lp, objective] = build_flow_lp(g, s, t);
  auto out = optimize_explicit(lp, objective);
  if (!out.is_optimal())
    throw std::logic_error("flow: explicit flow system must have an optimum");
  Flow<I> f{g, s, t, {}};
  for (const auto& [pair, q] : *out.point)
    if (!q.is_zero()) f.assignment.emplace(pair, q);
  return f;
}

// Shortest augmenting paths on the residual graph; exact rational capacities.
// Augmenting an arc first cancels opposing flow, then uses spare capacity,
// so bounds stay respected throughout.
template <typename I>
Flow<I> max_flow_aug(const CapacitatedGraph<I>& g, const I& s, const I& t) {
  if (s == t) throw std::invalid_argument("flow: source equals sink");
  if (!g.has_vertex(s) || !g.has_vertex(t))
    throw std::invalid_argument("flow: endpoint not a vertex");
  Flow<I> f{g, s, t, {}};
  const std::vector<I>& vs = g.vertices();
  auto residual = [&](const I& u, const I& v) {
    return g.capacity(u, v) - f.at(u, v) + f.at(v, u);
  };
  while (true) {
    // Breadth-first search for a shortest residual s->t path.
    std::map<I, I> parent;
    std::deque<I> queue{s};
    std::set<I> seen{s};
    while (!queue.empty() && !seen.count(t)) {
      I u = queue.front();
      queue.pop_front();
      for (const I& v : vs) {
        if (v == u || seen.count(v) || residual(u, v).sign() <= 0) continue;
        parent.emplace(v, u);
        seen.insert(v);
        queue.push_back(v);
      }
    }
    if (!seen.count(t)) return f;

    std::vector<I> path{t};
    while (path.back() != s) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());

    Rational bottleneck = residual(path[0], path[1]);
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      bottleneck = std::min(bottleneck, residual(path[i], path[i + 1]));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const I& u = path[i];
      const I& v = path[i + 1];
      Rational cancel = std::min(f.at(v, u), bottleneck);
      if (!cancel.is_zero()) f.assignment[{v, u}] = f.at(v, u) - cancel;
      Rational add = bottleneck - cancel;
      if (!add.is_zero()) f.assignment[{u, v}] = f.at(u, v) + add;
    }
  }
}

}  // namespace detail

template <typename I>
Flow<I> max_flow(const CapacitatedGraph<I>& g, const I& s, const I& t,
                 FlowBackend backend = FlowBackend::Lp) {
  return backend == FlowBackend::Lp ? detail::max_flow_lp(g, s, t)
                                    : detail::max_flow_aug(g, s, t);
}

// Cancels opposing flow pairwise: f'(u,v) = max(0, f(u,v) - f(v,u)).  Keeps
// value and feasibility, and afterwards at most one direction per pair is
// positive.
template <typename I>
Flow<I> normalize_flow(const Flow<I>& f) {
  Flow<I> out{f.graph, f.source, f.sink, {}};
  for (const auto& [e, q] : f.assignment) {
    Rational net = q - f.at(e.second, e.first);
    if (net.sign() > 0) out.assignment.emplace(e, net);
  }
  return out;
}

// Vertices reachable from start along arcs with strictly positive residual
// capacity c - f'; expects a normalized flow.
template <typename I>
std::set<I> residual_reachable(const CapacitatedGraph<I>& g, const Flow<I>& f,
                               const I& start) {
  std::set<I> seen{start};
  std::deque<I> queue{start};
  while (!queue.empty()) {
    I u = queue.front();
    queue.pop_front();
    for (const I& v : g.vertices()) {
      if (v == u || seen.count(v)) continue;
      if ((g.capacity(u, v) - f.at(u, v)).sign() > 0) {
        seen.insert(v);
        queue.push_back(v);
      }
    }
  }
  return seen;
}

// The source side of the canonical minimum (s,t)-cut: vertices reachable
// from s along arcs with positive residual capacity, where the residual of
// (u,v) counts both spare capacity and the option of undoing opposing flow,
// c(u,v) - f'(u,v) + f'(v,u).  This set is a minimum cut and equals the
// intersection of all minimum (s,t)-cuts, for every maximum flow and either
// backend.  On symmetric graphs the undo term is never needed (spare
// capacity c(u,v) - f'(u,v) is already positive whenever f'(v,u) is), so
// there this is plain reachability in the capacity-minus-flow graph.
template <typename I>
Cut<I> canonical_min_cut(const CapacitatedGraph<I>& g, const I& s, const I& t,
                         FlowBackend backend = FlowBackend::Lp) {
  Flow<I> f = normalize_flow(max_flow(g, s, t, backend));
  std::set<I> seen{s};
  std::deque<I> queue{s};
  while (!queue.empty()) {
    I u = queue.front();
    queue.pop_front();
    for (const I& v : g.vertices()) {
      if (v == u || seen.count(v)) continue;
      if ((g.capacity(u, v) - f.at(u, v) + f.at(v, u)).sign() > 0) {
        seen.insert(v);
        queue.push_back(v);
      }
    }
  }
  return Cut<I>{std::move(seen)};
}

}  // namespace foldlp

#endif  // FOLDLP_FLOW_HPP
