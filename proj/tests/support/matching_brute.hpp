// Exhaustive reference computations for b-matchings: the best integral
// b-matching value for an arbitrary objective (the polytope's extreme points
// are integral, so this is also the maximum of that objective over the
// polytope), and a direct constraint check against every odd-bound vertex
// set.

#ifndef FOLDLP_TESTS_SUPPORT_MATCHING_BRUTE_HPP
#define FOLDLP_TESTS_SUPPORT_MATCHING_BRUTE_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "foldlp/matching.hpp"
#include "foldlp/rational.hpp"
#include "foldlp/vec.hpp"

namespace testsupport {

// Maximum of objective^T y over all integral y with 0 <= y and Ay <= b,
// by depth-first search over edge values bounded by endpoint slacks.
template <typename I>
foldlp::Rational brute_b_matching_max(const foldlp::MatchingInstance<I>& inst,
                                      const foldlp::Vec<std::pair<I, I>>& objective) {
  const auto& edges = inst.edges();
  std::map<I, long> slack;
  for (const I& v : inst.vertices()) {
    if (!inst.bound(v).is_integer())
      throw std::invalid_argument("brute matching: bounds must be integers");
    slack[v] = inst.bound(v).num().get_si();
  }
  foldlp::Rational best(0);
  foldlp::Rational run(0);
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      if (best < run) best = run;
      return;
    }
    const auto& [u, w] = edges[i];
    long cap = std::min(slack[u], slack[w]);
    for (long t = 0; t <= cap; ++t) {
      slack[u] -= t;
      slack[w] -= t;
      run += objective[edges[i]] * foldlp::Rational(t);
      self(self, i + 1);
      run -= objective[edges[i]] * foldlp::Rational(t);
      slack[u] += t;
      slack[w] += t;
    }
  };
  dfs(dfs, 0);
  return best;
}

template <typename I>
foldlp::Rational brute_b_matching_max(const foldlp::MatchingInstance<I>& inst) {
  return brute_b_matching_max(inst, inst.objective());
}

// Direct membership test for the b-matching polytope: nonnegativity, degree
// constraints, and the odd-set constraint for every W with odd total bound.
template <typename I>
bool brute_inside_matching_polytope(const foldlp::MatchingInstance<I>& inst,
                                    const foldlp::Vec<std::pair<I, I>>& y) {
  using foldlp::Rational;
  for (const auto& [e, q] : y)
    if (q.sign() < 0) return false;
  for (const I& v : inst.vertices()) {
    Rational deg(0);
    for (const auto& e : inst.edges())
      if (inst.incidence(v, e)) deg += y[e];
    if (inst.bound(v) < deg) return false;
  }
  const std::vector<I>& vs = inst.vertices();
  if (vs.size() > 20)
    throw std::invalid_argument("brute matching: vertex set too large");
  for (unsigned long mask = 0; mask < (1ul << vs.size()); ++mask) {
    std::set<I> w;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask & (1ul << i)) w.insert(vs[i]);
    Rational bw(0);
    for (const I& v : w) bw += inst.bound(v);
    if (bw.num() % 2 == 0) continue;
    Rational yw(0);
    for (const auto& e : inst.edges())
      if (w.count(e.first) && w.count(e.second)) yw += y[e];
    if ((bw - Rational(1)) / Rational(2) < yw) return false;
  }
  return true;
}

}  // namespace testsupport

#endif  // FOLDLP_TESTS_SUPPORT_MATCHING_BRUTE_HPP
