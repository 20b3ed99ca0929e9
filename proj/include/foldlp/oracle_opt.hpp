// foldlp/oracle_opt.hpp
//
// Cutting-plane optimization over a separation oracle, treating the oracle's
// variable list in its natural order.  The driver boxes the variables using
// the oracle's declared size bounds, repeatedly maximizes the objective over
// the working relaxation with the exact simplex solver, and feeds the
// optimizer's answer back to the oracle:
//
//   * Inside answers settle the outcome: the relaxation value equals the true
//     optimum, and a value beyond what any vertex can attain certifies
//     unboundedness.
//   * Violated answers become cutting planes.  An answer with a certified
//     right-hand side is added verbatim (guaranteed strict progress); without
//     one the driver falls back to two cuts through and just below the
//     current point, at depth controlled by the declared facet complexity.
//   * Infeasibility certificates, or a working relaxation with no feasible
//     point left, settle emptiness.
//
// A generous oracle-call cap turns a non-terminating (hence malformed) oracle
// into an error instead of a hang.

#ifndef FOLDLP_ORACLE_OPT_HPP
#define FOLDLP_ORACLE_OPT_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/polytope.hpp"
#include "foldlp/rational.hpp"
#include "foldlp/simplex.hpp"
#include "foldlp/vec.hpp"

namespace foldlp {

// Events reported by the optimization drivers, in the order they occur.
enum class TraceEvent { Abort, Inside, Cut };

template <typename I>
OptOutcome<I> optimize_via_oracle_ordered(
    const SeparationOracle<I>& oracle, const Vec<I>& c,
    const std::function<void(TraceEvent)>& notify = nullptr) {
  const std::vector<I>& vars = oracle.variables;
  const std::size_t k = vars.size();
  if (c.indices() != vars)
    throw std::invalid_argument("optimize_via_oracle_ordered: objective over wrong variable set");

  if (k == 0) {
    SeparationAnswer<I> ans = oracle.query(Vec<I>());
    if (ans.is_inside()) {
      if (notify) notify(TraceEvent::Inside);
      return OptOutcome<I>::optimal(Vec<I>(), Rational(0));
    }
    if (ans.is_infeasible()) return OptOutcome<I>::empty();
    throw OracleError("malformed oracle answer");
  }

  const SizeBounds& sb = oracle.bounds;

  // Box radius: large enough that a vertex plus one scaled extreme-ray step
  // clears every vertex value, so optima of the boxed relaxation are never
  // artificially clipped.
  const std::size_t radius_exp =
      sb.coord_bits + sb.ray_bits + 2 * bit_size(c) + ceil_log2(k) + 4;
  const Rational radius = Rational::pow2(static_cast<long>(radius_exp));

  // No vertex can score above this; an inside point that does certifies an
  // unbounded objective direction.
  Rational vertex_value_bound(0);
  const Rational coord_cap = Rational::pow2(static_cast<long>(sb.coord_bits));
  for (const auto& e : c) vertex_value_bound += e.second.abs() * coord_cap;

  // Fallback cut depth for hint-less oracles, built only when needed: facets
  // of the declared complexity cannot distinguish points closer than this.
  std::optional<Rational> fallback_eps;
  auto eps = [&]() -> const Rational& {
    if (!fallback_eps)
      fallback_eps = Rational::pow2(-2 * static_cast<long>(sb.facet_bits));
    return *fallback_eps;
  };

  DenseLp lp;
  lp.n = k;
  lp.nonneg.assign(k, false);
  lp.obj.resize(k);
  for (std::size_t j = 0; j < k; ++j) lp.obj[j] = c[vars[j]];
  for (std::size_t j = 0; j < k; ++j) {
    DenseRow up(k, Rational(0)), down(k, Rational(0));
    up[j] = Rational(1);
    down[j] = Rational(-1);
    lp.rows.push_back(std::move(up));
    lp.rhs.push_back(radius);
    lp.rows.push_back(std::move(down));
    lp.rhs.push_back(radius);
  }

  const mpz_class kc = static_cast<unsigned long>(k);
  const mpz_class complexity = mpz_class(static_cast<unsigned long>(sb.facet_bits)) + kc;
  const mpz_class cap = 64 * kc * kc * complexity * complexity;
  mpz_class calls = 0;

  while (true) {
    DenseLpResult rel = solve_dense_lp(lp);
    if (rel.status == LpStatus::Infeasible) return OptOutcome<I>::empty();
    if (rel.status == LpStatus::Unbounded)
      throw std::logic_error("optimize_via_oracle_ordered: boxed relaxation unbounded");

    std::vector<typename Vec<I>::Entry> entries;
    entries.reserve(k);
    for (std::size_t j = 0; j < k; ++j) entries.emplace_back(vars[j], rel.x[j]);
    Vec<I> y(std::move(entries));

    SeparationAnswer<I> ans = oracle.query(y);
    ++calls;
    if (ans.is_inside()) {
      if (notify) notify(TraceEvent::Inside);
      if (rel.value > vertex_value_bound) return OptOutcome<I>::unbounded();
      return OptOutcome<I>::optimal(std::move(y), rel.value);
    }
    if (ans.is_infeasible()) return OptOutcome<I>::empty();

    const Vec<I>& d = *ans.normal;
    if (d.indices() != vars || d.is_zero())
      throw OracleError("malformed oracle answer");
    Rational dv = dot(d, y);
    DenseRow dense(k);
    for (std::size_t j = 0; j < k; ++j) dense[j] = d[vars[j]];
    if (ans.certified_max && *ans.certified_max < dv) {
      lp.rows.push_back(std::move(dense));
      lp.rhs.push_back(*ans.certified_max);
    } else {
      lp.rows.push_back(dense);
      lp.rhs.push_back(dv);
      lp.rows.push_back(std::move(dense));
      lp.rhs.push_back(dv - eps());
    }
    if (notify) notify(TraceEvent::Cut);
    if (calls > cap) throw OracleError("oracle call cap exceeded");
  }
}

}  // namespace foldlp

#endif  // FOLDLP_ORACLE_OPT_HPP
