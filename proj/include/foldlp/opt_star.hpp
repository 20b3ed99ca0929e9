// foldlp/opt_star.hpp
//
// Optimization over an unordered variable set from a separation oracle
// alone.  The driver folds the problem through a progressively refined index
// map: variables the current map cannot distinguish share one folded
// coordinate, the inner ordered optimizer runs on the folded image, and any
// oracle answer that distinguishes variables inside a class aborts the inner
// run, refines the map, and restarts.  Each restart strictly increases the
// class count, so at most |V| restarts happen before the answer is final.
//
// The folded image of the feasible set is exactly { fold(y) : y feasible }:
// objectives and separating normals that agree with the current map transport
// through almost-folding with values preserved, which is what makes the inner
// optimum, once confirmed by a final membership query, the true optimum.

#ifndef FOLDLP_OPT_STAR_HPP
#define FOLDLP_OPT_STAR_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "foldlp/folding.hpp"
#include "foldlp/oracle_opt.hpp"
#include "foldlp/polytope.hpp"
#include "foldlp/rational.hpp"
#include "foldlp/vec.hpp"

namespace foldlp {

// Instrumentation hook: called once per driver event with a running event
// number, the index map in force when the event fired, and the event kind.
template <typename I>
using TraceSink =
    std::function<void(std::size_t iteration, const IndexMap<I>& sigma, TraceEvent event)>;

namespace detail {

// Thrown by the folded oracle when an answer distinguishes variables within a
// class of the current index map; carries the refined replacement map.
template <typename I>
struct FoldAbort {
  IndexMap<I> refined;
};

inline std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

}  // namespace detail

template <typename I>
OptOutcome<I> opt_star(const SeparationOracle<I>& oracle, const Vec<I>& c,
                       const TraceSink<I>& trace = nullptr) {
  const std::vector<I>& v = oracle.variables;
  if (c.indices() != v)
    throw std::invalid_argument("opt_star: objective over wrong variable set");

  if (v.empty()) {
    SeparationAnswer<I> ans = oracle.query(Vec<I>());
    if (ans.is_inside()) return OptOutcome<I>::optimal(Vec<I>(), Rational(0));
    if (ans.is_infeasible()) return OptOutcome<I>::empty();
    throw OracleError("malformed oracle answer");
  }

  IndexMap<I> sigma = refine(IndexMap<I>::trivial(v), c);
  std::size_t refinements = 0;
  std::size_t events = 0;

  auto refined_to = [&](IndexMap<I> next) {
    sigma = std::move(next);
    if (++refinements > v.size()) throw OracleError("oracle disagreement overflow");
    if (trace) trace(++events, sigma, TraceEvent::Abort);
  };

  while (true) {
    const std::size_t k = sigma.class_count();
    const std::vector<std::size_t> folded_vars = class_labels(k);

    SeparationOracle<std::size_t> folded;
    folded.variables = folded_vars;
    // Folding blows facet complexity up by at most a fixed polynomial in the
    // dimensions; vertex coordinates are class averages of vertex coordinates
    // (one extra division), and extreme directions scale by at most the lcm
    // of the class sizes.
    folded.bounds.facet_bits = detail::sat_mul(
        48, detail::sat_mul(detail::sat_mul(k, detail::sat_mul(k, k)),
                            detail::sat_mul(v.size(),
                                            detail::sat_mul(v.size(), v.size()))));
    folded.bounds.facet_bits =
        detail::sat_mul(folded.bounds.facet_bits, oracle.bounds.facet_bits);
    folded.bounds.coord_bits = oracle.bounds.coord_bits + ceil_log2(v.size()) + 1;
    folded.bounds.ray_bits = oracle.bounds.ray_bits + 2 * v.size() + 2;
    folded.query = [&oracle, &sigma, &v](const Vec<std::size_t>& xbar) {
      SeparationAnswer<I> ans = oracle.query(unfold(xbar, sigma));
      if (ans.is_inside()) return SeparationAnswer<std::size_t>::inside();
      if (ans.is_infeasible()) return SeparationAnswer<std::size_t>::infeasible();
      const Vec<I>& d = *ans.normal;
      if (d.indices() != v || d.is_zero()) throw OracleError("malformed oracle answer");
      if (!agrees_with(d, sigma)) throw detail::FoldAbort<I>{refine(sigma, d)};
      Vec<std::size_t> afd = almost_fold(d, sigma);
      Rational scale = Rational(1) / inf_norm(afd);
      std::optional<Rational> hint;
      if (ans.certified_max) hint = scale * *ans.certified_max;
      return SeparationAnswer<std::size_t>::violated(scale * afd, std::move(hint));
    };

    Vec<std::size_t> folded_objective = almost_fold(c, sigma);
    OptOutcome<std::size_t> inner;
    try {
      inner = optimize_via_oracle_ordered<std::size_t>(
          folded, folded_objective, [&](TraceEvent ev) {
            if (trace) trace(++events, sigma, ev);
          });
    } catch (const detail::FoldAbort<I>& abort) {
      refined_to(abort.refined);
      continue;
    }

    if (inner.is_empty()) return OptOutcome<I>::empty();
    if (inner.is_unbounded()) return OptOutcome<I>::unbounded();

    // Confirmation query at the unfolded optimum; a distinguishing answer
    // refines the map and restarts, an agreeing violation contradicts the
    // Inside answer the inner run just obtained at this very point.
    Vec<I> y = unfold(*inner.point, sigma);
    SeparationAnswer<I> confirm = oracle.query(y);
    Vec<I> d = Vec<I>::zero(v);
    if (confirm.is_violated()) {
      if (confirm.normal->indices() != v) throw OracleError("malformed oracle answer");
      d = *confirm.normal;
    } else if (confirm.is_infeasible()) {
      throw OracleError("malformed oracle answer");
    }
    IndexMap<I> next = refine(sigma, d);
    if (next != sigma) {
      refined_to(std::move(next));
      continue;
    }
    if (confirm.is_violated()) throw OracleError("malformed oracle answer");
    return OptOutcome<I>::optimal(std::move(y), *inner.value);
  }
}

}  // namespace foldlp

#endif  // FOLDLP_OPT_STAR_HPP
