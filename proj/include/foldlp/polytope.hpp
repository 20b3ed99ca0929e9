// foldlp/polytope.hpp
//
// Core optimization vocabulary: explicit inequality systems over a named
// index set, separation answers, optimization outcomes, and the separation
// oracle abstraction with its declared size bounds.
//
// An explicit polytope is { x : a_r . x <= b_r for every row r } over a fixed
// sorted variable set.  Rows are numbered 0..m-1 in insertion order.

#ifndef FOLDLP_POLYTOPE_HPP
#define FOLDLP_POLYTOPE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/matrix.hpp"
#include "foldlp/rational.hpp"
#include "foldlp/simplex.hpp"
#include "foldlp/vec.hpp"

namespace foldlp {

// Raised when an oracle misbehaves (zero separating normal, call-cap
// exhaustion, more disagreement refinements than the index set can support).
class OracleError : public std::runtime_error {
 public:
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

// Smallest r with 2^r >= n (0 for n <= 1).
inline std::size_t ceil_log2(std::size_t n) {
  if (n <= 1) return 0;
  return nat_bit_size(mpz_class(static_cast<unsigned long>(n - 1)));
}

template <typename I>
class ExplicitPolytope {
 public:
  struct Row {
    Vec<I> a;
    Rational b;
  };

  ExplicitPolytope(std::vector<I> variables, std::vector<Row> rows)
      : vars_(std::move(variables)), rows_(std::move(rows)) {
    std::sort(vars_.begin(), vars_.end());
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
      throw std::invalid_argument("polytope: duplicate variable");
    for (const Row& r : rows_) {
      if (r.a.indices() != vars_)
        throw std::invalid_argument("polytope: row over wrong variable set");
    }
  }

  const std::vector<I>& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_.size(); }
  std::size_t row_count() const { return rows_.size(); }
  const Row& row(std::size_t r) const { return rows_.at(r); }
  const std::vector<Row>& rows() const { return rows_; }

  // Matrix/vector views keyed by row number, built on demand.
  Matrix<int, I> a_matrix() const {
    std::vector<std::pair<int, Vec<I>>> rows;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      rows.emplace_back(static_cast<int>(r), rows_[r].a);
    return Matrix<int, I>(std::move(rows));
  }
  Vec<int> b_vector() const {
    std::vector<std::pair<int, Rational>> entries;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      entries.emplace_back(static_cast<int>(r), rows_[r].b);
    return Vec<int>(std::move(entries));
  }

  bool contains(const Vec<I>& y) const {
    for (const Row& r : rows_)
      if (dot(r.a, y) > r.b) return false;
    return true;
  }

 private:
  std::vector<I> vars_;
  std::vector<Row> rows_;
};

// Answer to "is y in P, and if not, why not".
//   Inside      -- y is a member.
//   Violated    -- carries a separating normal c with inf-norm 1 such that
//                  c . y > c . x for all x in P.  When the oracle can certify
//                  a concrete bound max { c . x : x in P } <= beta < c . y it
//                  ships it as certified_max; cutting loops then make
//                  guaranteed progress.
//   Infeasible  -- the oracle certifies P is empty (a nonnegative combination
//                  of its constraints reads 0 <= negative).
template <typename I>
struct SeparationAnswer {
  enum class Kind { Inside, Violated, Infeasible };

  Kind kind;
  std::optional<Vec<I>> normal;
  std::optional<Rational> certified_max;

  static SeparationAnswer inside() { return {Kind::Inside, std::nullopt, std::nullopt}; }
  static SeparationAnswer infeasible() { return {Kind::Infeasible, std::nullopt, std::nullopt}; }
  static SeparationAnswer violated(Vec<I> c, std::optional<Rational> max_hint = std::nullopt) {
    return {Kind::Violated, std::move(c), std::move(max_hint)};
  }

  bool is_inside() const { return kind == Kind::Inside; }
  bool is_violated() const { return kind == Kind::Violated; }
  bool is_infeasible() const { return kind == Kind::Infeasible; }
};

// Outcome of maximizing a linear objective over a polyhedron.
template <typename I>
struct OptOutcome {
  enum class Kind { Empty, Unbounded, Optimal };

  Kind kind = Kind::Empty;
  std::optional<Vec<I>> point;
  std::optional<Rational> value;

  static OptOutcome empty() { return {Kind::Empty, std::nullopt, std::nullopt}; }
  static OptOutcome unbounded() { return {Kind::Unbounded, std::nullopt, std::nullopt}; }
  static OptOutcome optimal(Vec<I> point, Rational value) {
    return {Kind::Optimal, std::move(point), std::move(value)};
  }

  bool is_empty() const { return kind == Kind::Empty; }
  bool is_unbounded() const { return kind == Kind::Unbounded; }
  bool is_optimal() const { return kind == Kind::Optimal; }
};

// Declared complexity bounds a separation oracle promises about the
// polyhedron it describes.  All three are bit counts.
//   facet_bits -- every facet has an inequality description of at most this
//                 encoding size; drives iteration caps and the fallback
//                 cut perturbation.
//   coord_bits -- every vertex coordinate is a rational with numerator and
//                 denominator at most 2^coord_bits in magnitude, and a
//                 nonempty polyhedron contains at least one such point.
//   ray_bits   -- every extreme direction of unboundedness has an integer
//                 representative with entries at most 2^ray_bits; zero is the
//                 natural declaration for provably bounded polyhedra.
struct SizeBounds {
  std::size_t facet_bits = 0;
  std::size_t coord_bits = 0;
  std::size_t ray_bits = 0;
};

template <typename I>
struct SeparationOracle {
  std::vector<I> variables;  // sorted index set
  SizeBounds bounds;
  std::function<SeparationAnswer<I>(const Vec<I>&)> query;
};

// Membership test with constructive refutation: sums every violated row into
// a single inequality, rescales its normal to inf-norm 1, and certifies the
// rescaled right-hand side as an upper bound over the polytope.  If the
// violated rows cancel to the zero normal their sum reads 0 <= negative, an
// infeasibility certificate.
template <typename I>
SeparationAnswer<I> separate_explicit(const ExplicitPolytope<I>& p, const Vec<I>& y) {
  if (y.indices() != p.variables())
    throw std::invalid_argument("separate_explicit: point over wrong variable set");
  Vec<I> sum_a = Vec<I>::zero(p.variables());
  Rational sum_b(0);
  bool any = false;
  for (const auto& row : p.rows()) {
    if (dot(row.a, y) > row.b) {
      sum_a = sum_a + row.a;
      sum_b += row.b;
      any = true;
    }
  }
  if (!any) return SeparationAnswer<I>::inside();
  if (sum_a.is_zero()) return SeparationAnswer<I>::infeasible();
  Rational scale = Rational(1) / inf_norm(sum_a);
  return SeparationAnswer<I>::violated(scale * sum_a, scale * sum_b);
}

// Maximizes c . x over an explicit polytope with the exact simplex solver.
// Rows of the shape -t x_j <= 0 (t > 0) are recognized as plain
// nonnegativity and handed to the solver as variable markers instead of
// inequality rows; every other variable is treated as free.
template <typename I>
OptOutcome<I> optimize_explicit(const ExplicitPolytope<I>& p, const Vec<I>& c) {
  const std::vector<I>& vars = p.variables();
  if (c.indices() != vars)
    throw std::invalid_argument("optimize_explicit: objective over wrong variable set");
  const std::size_t k = vars.size();

  if (k == 0) {
    for (const auto& row : p.rows())
      if (row.b.sign() < 0) return OptOutcome<I>::empty();
    return OptOutcome<I>::optimal(Vec<I>(), Rational(0));
  }

  DenseLp lp;
  lp.n = k;
  lp.nonneg.assign(k, false);
  lp.obj.resize(k);
  for (std::size_t j = 0; j < k; ++j) lp.obj[j] = c[vars[j]];

  for (const auto& row : p.rows()) {
    std::size_t nonzero = 0, last = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (!row.a[vars[j]].is_zero()) {
        ++nonzero;
        last = j;
      }
    }
    if (nonzero == 1 && row.b.is_zero() && row.a[vars[last]].sign() < 0) {
      lp.nonneg[last] = true;
      continue;
    }
    DenseRow dense(k);
    for (std::size_t j = 0; j < k; ++j) dense[j] = row.a[vars[j]];
    lp.rows.push_back(std::move(dense));
    lp.rhs.push_back(row.b);
  }

  DenseLpResult res = solve_dense_lp(lp);
  switch (res.status) {
    case LpStatus::Infeasible:
      return OptOutcome<I>::empty();
    case LpStatus::Unbounded:
      return OptOutcome<I>::unbounded();
    case LpStatus::Optimal:
      break;
  }
  std::vector<std::pair<I, Rational>> entries;
  for (std::size_t j = 0; j < k; ++j) entries.emplace_back(vars[j], res.x[j]);
  return OptOutcome<I>::optimal(Vec<I>(std::move(entries)), res.value);
}

// Wraps an explicit polytope as a separation oracle.  The declared size
// bounds come from a Hadamard-style determinant estimate: any vertex (or
// extreme-ray) coordinate is a ratio of subdeterminants of the row-scaled
// integer system, and the bit size of any such determinant is at most the
// total encoding size of the rows plus a per-dimension log factor.
template <typename I>
SeparationOracle<I> explicit_oracle(const ExplicitPolytope<I>& p) {
  const std::size_t k = p.variable_count();
  std::size_t total = 0, row_max = 0;
  for (const auto& row : p.rows()) {
    std::size_t enc = bit_size(row.a) + row.b.bit_size();
    total += enc;
    row_max = std::max(row_max, enc);
  }
  SizeBounds bounds;
  bounds.facet_bits = row_max + 2;
  bounds.coord_bits = total + k * (ceil_log2(k) + 1) + 2;
  bounds.ray_bits = bounds.coord_bits;
  auto body = std::make_shared<ExplicitPolytope<I>>(p);
  return SeparationOracle<I>{
      p.variables(), bounds,
      [body](const Vec<I>& y) { return separate_explicit(*body, y); }};
}

}  // namespace foldlp

#endif  // FOLDLP_POLYTOPE_HPP
