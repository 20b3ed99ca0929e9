// foldlp/simplex.hpp
//
// Exact rational simplex over dense ordered data: the subsolver behind both
// the explicit optimizer and the cutting-plane loop.  Two phases, Bland's
// pivoting rule throughout (lowest eligible column index; ties in the ratio
// test broken by lowest basic variable index), which guarantees termination.
//
// The input is "maximize obj . x subject to rows . x <= rhs", where each
// variable is either free or explicitly nonnegative.  Free variables are
// split into positive and negative parts internally.

#ifndef FOLDLP_SIMPLEX_HPP
#define FOLDLP_SIMPLEX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/rational.hpp"

namespace foldlp {

using DenseRow = std::vector<Rational>;

struct DenseLp {
  std::size_t n = 0;               // variable count
  std::vector<DenseRow> rows;      // each of width n
  DenseRow rhs;                    // one entry per row
  DenseRow obj;                    // width n
  std::vector<bool> nonneg;        // width n; false = free variable
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct DenseLpResult {
  LpStatus status = LpStatus::Infeasible;
  DenseRow x;       // width n, only for Optimal
  Rational value;   // obj . x, only for Optimal
};

namespace detail {

class SimplexTableau {
 public:
  SimplexTableau(const DenseLp& lp) : lp_(lp), m_(lp.rows.size()) {
    if (lp.rhs.size() != m_ || lp.obj.size() != lp.n || lp.nonneg.size() != lp.n)
      throw std::invalid_argument("simplex: inconsistent input sizes");

    // Column layout: per-variable columns (one for nonnegative variables, a
    // +/- pair for free ones), then one slack per row, then artificials.
    for (std::size_t j = 0; j < lp_.n; ++j) {
      col_of_var_.push_back(cols_);
      cols_ += lp_.nonneg[j] ? 1 : 2;
    }
    slack0_ = cols_;
    cols_ += m_;
    art0_ = cols_;

    t_.assign(m_, DenseRow(art0_, Rational(0)));
    b_.assign(m_, Rational(0));
    basis_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = lp_.rhs[i].sign() < 0;
      Rational s = flip ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < lp_.n; ++j) {
        const Rational& a = lp_.rows[i][j];
        if (a.is_zero()) continue;
        t_[i][col_of_var_[j]] = s * a;
        if (!lp_.nonneg[j]) t_[i][col_of_var_[j] + 1] = -(s * a);
      }
      t_[i][slack0_ + i] = s;
      b_[i] = s * lp_.rhs[i];
      if (flip) {
        // Negative right-hand side: start from an artificial basis column.
        for (auto& row : t_) row.push_back(Rational(0));
        t_[i][cols_] = Rational(1);
        basis_[i] = cols_;
        artificial_rows_.push_back(i);
        ++cols_;
      } else {
        basis_[i] = slack0_ + i;
      }
    }
  }

  DenseLpResult solve() {
    if (!artificial_rows_.empty()) {
      // Phase 1: maximize minus the sum of artificials.
      DenseRow cost(cols_, Rational(0));
      for (std::size_t c = art0_; c < cols_; ++c) cost[c] = Rational(-1);
      load_objective(cost);
      run(/*exclude_artificials=*/false);
      if (zval_.sign() < 0) return {LpStatus::Infeasible, {}, Rational(0)};
      // Drive leftover basic artificials out with degenerate pivots so they
      // cannot creep back above zero later.  A row with no real nonzero entry
      // is redundant and stays inert for the rest of the solve.
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < art0_) continue;
        for (std::size_t j = 0; j < art0_; ++j) {
          if (!t_[i][j].is_zero()) {
            pivot(i, j);
            break;
          }
        }
      }
    }

    // Phase 2 with the real objective; artificial columns may no longer enter.
    DenseRow cost(cols_, Rational(0));
    for (std::size_t j = 0; j < lp_.n; ++j) {
      cost[col_of_var_[j]] = lp_.obj[j];
      if (!lp_.nonneg[j]) cost[col_of_var_[j] + 1] = -lp_.obj[j];
    }
    load_objective(cost);
    if (!run(/*exclude_artificials=*/true))
      return {LpStatus::Unbounded, {}, Rational(0)};

    DenseRow x(lp_.n, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t c = basis_[i];
      if (c >= slack0_) continue;
      for (std::size_t j = 0; j < lp_.n; ++j) {
        if (c == col_of_var_[j]) {
          x[j] += b_[i];
          break;
        }
        if (!lp_.nonneg[j] && c == col_of_var_[j] + 1) {
          x[j] -= b_[i];
          break;
        }
      }
    }
    return {LpStatus::Optimal, std::move(x), zval_};
  }

 private:
  void load_objective(const DenseRow& cost) {
    zrow_ = cost;
    zval_ = Rational(0);
    // Price out the current basis so reduced costs of basic columns are zero.
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!t_[i][j].is_zero()) zrow_[j] -= cb * t_[i][j];
      zval_ += cb * b_[i];
    }
  }

  // Runs primal simplex to optimality; returns false on unboundedness.
  bool run(bool exclude_artificials) {
    const std::size_t limit = exclude_artificials ? art0_ : cols_;
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (zrow_[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;  // optimal

      std::size_t leave = m_;
      Rational best_ratio(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Rational ratio = b_[i] / t_[i][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;  // unbounded

      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    Rational p = t_[r][e];
    for (auto& q : t_[r]) q /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][e].is_zero()) continue;
      Rational f = t_[i][e];
      for (std::size_t j = 0; j < cols_; ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
      b_[i] -= f * b_[r];
    }
    if (!zrow_[e].is_zero()) {
      Rational f = zrow_[e];
      for (std::size_t j = 0; j < cols_; ++j)
        if (!t_[r][j].is_zero()) zrow_[j] -= f * t_[r][j];
      zval_ += f * b_[r];
    }
    basis_[r] = e;
  }

  const DenseLp& lp_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::size_t slack0_ = 0;
  std::size_t art0_ = 0;
  std::vector<std::size_t> col_of_var_;
  std::vector<DenseRow> t_;
  DenseRow b_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> artificial_rows_;
  DenseRow zrow_;
  Rational zval_;
};

}  // namespace detail

inline DenseLpResult solve_dense_lp(const DenseLp& lp) {
  return detail::SimplexTableau(lp).solve();
}

}  // namespace foldlp

#endif  // FOLDLP_SIMPLEX_HPP
