// foldlp/rational.hpp
//
// Exact rational scalar on top of GMP's mpq_class, together with the bit-size
// accounting the optimizers use for box sizes and iteration caps, and the
// strict "p/q" text form shared by every file format in the toolkit.

#ifndef FOLDLP_RATIONAL_HPP
#define FOLDLP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace foldlp {

// Encoding length of a nonnegative integer: ceil(log2(n + 1)).  This equals
// the number of binary digits of n, and is 0 for n = 0.
inline std::size_t nat_bit_size(const mpz_class& n) {
  if (sgn(n) < 0) throw std::invalid_argument("nat_bit_size: negative input");
  if (sgn(n) == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

// A rational number kept canonically in lowest terms with positive
// denominator; zero is 0/1.  All arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}              // NOLINT: implicit for literals
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpz_class num, mpz_class den = 1) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // -1, 0, +1.
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  // Signed numerator and positive denominator, in lowest terms.
  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  // Encoding length: 1 + ceil(log2(|num| + 1)) + ceil(log2(den + 1)).
  std::size_t bit_size() const {
    return 1 + nat_bit_size(mpz_class(::abs(num()))) + nat_bit_size(den());
  }

  // "p" for integers, "p/q" otherwise; a leading '-' sits on the numerator.
  std::string str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  double to_double() const { return q_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  // 2^e as a Rational, for any integer e (negative exponents allowed).
  static Rational pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpz_class(1), std::move(p)) : Rational(std::move(p));
  }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

// Strict parser for the shared literal syntax: an optional '-', a digit run,
// and optionally '/' followed by a positive digit run.  No decimals, no
// whitespace, no '+' sign.  Returns nullopt on any deviation.
inline std::optional<Rational> parse_rational(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool neg = false;
  if (tok[pos] == '-') {
    neg = true;
    ++pos;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') ++pos;
    if (pos == start) return false;
    out.assign(tok.substr(start, pos - start));
    return true;
  };
  std::string num_s, den_s = "1";
  if (!digits(num_s)) return std::nullopt;
  if (pos < tok.size()) {
    if (tok[pos] != '/') return std::nullopt;
    ++pos;
    if (!digits(den_s)) return std::nullopt;
    if (pos != tok.size()) return std::nullopt;
  }
  mpz_class num(num_s, 10), den(den_s, 10);
  if (sgn(den) == 0) return std::nullopt;
  if (neg) num = -num;
  return Rational(std::move(num), std::move(den));
}

}  // namespace foldlp

#endif  // FOLDLP_RATIONAL_HPP
