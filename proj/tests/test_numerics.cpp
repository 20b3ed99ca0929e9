// Unit tests for the exact scalar/vector/matrix layer.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "foldlp/matrix.hpp"
#include "foldlp/rational.hpp"
#include "foldlp/vec.hpp"

using foldlp::Matrix;
using foldlp::Rational;
using foldlp::Vec;

namespace {

using SVec = Vec<std::string>;

Rational Q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);

  Rational b(-6, 4);
  CHECK(b.num() == -3);
  CHECK(b.den() == 2);
  CHECK(b.sign() == -1);

  CHECK(Q(1, 2) + Q(1, 3) == Q(5, 6));
  CHECK(Q(1, 2) - Q(1, 2) == Q(0));
  CHECK(Q(2, 3) * Q(3, 2) == Q(1));
  CHECK(Q(7, 2) / Q(7, 4) == Q(2));
  CHECK_THROWS_AS(Q(1) / Q(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

  // gcd(num, den) == 1 after a mixed computation.
  Rational c = (Q(6, 8) + Q(10, 4)) * Q(4, 26);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), mpz_class(abs(c.num())).get_mpz_t(), c.den().get_mpz_t());
  CHECK(g == 1);

  CHECK(Q(0).sign() == 0);
  CHECK(Q(0).den() == 1);  // zero is canonically 0/1
  CHECK(Q(-3, 7) < Q(1, 9));
  CHECK(Q(-3, 7).abs() == Q(3, 7));
}

TEST_CASE("rational text form and parser round-trip") {
  CHECK(Q(5, 3).str() == "5/3");
  CHECK(Q(-5, 3).str() == "-5/3");
  CHECK(Q(4, 2).str() == "2");
  CHECK(Q(0).str() == "0");

  auto p = foldlp::parse_rational("22/7");
  REQUIRE(p.has_value());
  CHECK(*p == Q(22, 7));
  CHECK(*foldlp::parse_rational("-8") == Q(-8));
  CHECK(*foldlp::parse_rational("-6/4") == Q(-3, 2));
  CHECK(*foldlp::parse_rational("0") == Q(0));

  CHECK_FALSE(foldlp::parse_rational("").has_value());
  CHECK_FALSE(foldlp::parse_rational("1.5").has_value());
  CHECK_FALSE(foldlp::parse_rational("+3").has_value());
  CHECK_FALSE(foldlp::parse_rational("3/").has_value());
  CHECK_FALSE(foldlp::parse_rational("/4").has_value());
  CHECK_FALSE(foldlp::parse_rational("3/0").has_value());
  CHECK_FALSE(foldlp::parse_rational("1/-2").has_value());
  CHECK_FALSE(foldlp::parse_rational("2 /3").has_value());

  for (long n = -40; n <= 40; ++n)
    for (long d = 1; d <= 12; ++d) {
      Rational r(n, d);
      auto back = foldlp::parse_rational(r.str());
      REQUIRE(back.has_value());
      CHECK(*back == r);
    }
}

TEST_CASE("scalar encoding lengths") {
  // size(p/q) = 1 + ceil(log2(|p|+1)) + ceil(log2(q+1)).
  CHECK(Q(0).bit_size() == 2);        // 1 + 0 + 1
  CHECK(Q(1).bit_size() == 3);        // 1 + 1 + 1
  CHECK(Q(-1).bit_size() == 3);
  CHECK(Q(3, 2).bit_size() == 5);     // 1 + 2 + 2
  CHECK(Q(8).bit_size() == 6);        // 1 + 4 + 1
  CHECK(Q(255, 256).bit_size() == 18);  // 1 + 8 + 9
}

TEST_CASE("pow2 covers both signs of the exponent") {
  CHECK(Rational::pow2(0) == Q(1));
  CHECK(Rational::pow2(5) == Q(32));
  CHECK(Rational::pow2(-3) == Q(1, 8));
}

TEST_CASE("infinity norm") {
  SVec v{{"a", Q(1, 2)}, {"b", Q(-3)}, {"c", Q(2)}};
  CHECK(foldlp::inf_norm(v) == Q(3));

  SVec z = SVec::zero({"a", "b", "c"});
  CHECK(foldlp::inf_norm(z) == Q(0));

  SVec sym{{"a", Q(-5, 2)}, {"b", Q(5, 2)}};
  CHECK(foldlp::inf_norm(sym) == Q(5, 2));

  CHECK_THROWS_AS(foldlp::inf_norm(SVec{}), std::invalid_argument);

  // inf_norm(v) == 0 iff v == 0, over a small sweep.
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      SVec w{{"x", Q(a)}, {"y", Q(b)}};
      CHECK((foldlp::inf_norm(w) == Q(0)) == w.is_zero());
    }
}

TEST_CASE("vector encoding lengths") {
  SVec z3 = SVec::zero({"a", "b", "c"});
  CHECK(foldlp::bit_size(z3) == 6);
  CHECK(foldlp::bit_size(z3) >= z3.size());

  SVec one{{"a", Q(1)}};
  CHECK(foldlp::bit_size(one) == Q(1).bit_size());

  SVec u{{"a", Q(3, 2)}, {"b", Q(1)}};
  SVec w{{"a", Q(3, 2)}, {"b", Q(1)}, {"c", Q(1)}};
  CHECK(foldlp::bit_size(w) > foldlp::bit_size(u));
}

TEST_CASE("dot products") {
  SVec u{{"a", Q(1)}, {"b", Q(2)}};
  SVec v{{"a", Q(3)}, {"b", Q(4)}};
  CHECK(dot(u, v) == Q(11));

  CHECK(dot(u, SVec::zero({"a", "b"})) == Q(0));

  SVec thirds = SVec::constant({"a", "b", "c"}, Q(1, 3));
  SVec ones = SVec::constant({"a", "b", "c"}, Q(1));
  CHECK(dot(thirds, ones) == Q(1));

  SVec other{{"a", Q(1)}, {"z", Q(1)}};
  CHECK_THROWS_AS(dot(u, other), std::invalid_argument);
  CHECK_THROWS_AS(dot(u, ones), std::invalid_argument);
}

TEST_CASE("dot is bilinear over random rationals") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  std::vector<std::string> ids = {"p", "q", "r", "s"};
  auto rand_vec = [&] {
    return SVec::build(ids, [&](const std::string&) { return Q(num(rng), den(rng)); });
  };
  for (int trial = 0; trial < 200; ++trial) {
    SVec u = rand_vec(), w = rand_vec(), v = rand_vec();
    Rational alpha = Q(num(rng), den(rng));
    CHECK(dot(alpha * u + w, v) == alpha * dot(u, v) + dot(w, v));
  }
}

TEST_CASE("vector invariants and operations") {
  CHECK_THROWS_AS(SVec({{"a", Q(1)}, {"a", Q(2)}}), std::invalid_argument);

  SVec v{{"a", Q(1)}, {"b", Q(2)}};
  CHECK(v["b"] == Q(2));
  CHECK_THROWS_AS(v["zz"], std::invalid_argument);
  CHECK(v.has_index("a"));
  CHECK_FALSE(v.has_index("zz"));

  SVec w = v;
  w.set("a", Q(7));
  CHECK(w["a"] == Q(7));
  CHECK(v["a"] == Q(1));  // value semantics
  CHECK(v != w);
  CHECK(v == SVec({{"b", Q(2)}, {"a", Q(1)}}));  // entry order is irrelevant

  CHECK((v + w)["a"] == Q(8));
  CHECK((v - w)["a"] == Q(-6));
  CHECK((Q(3) * v)["b"] == Q(6));
  CHECK((-v)["a"] == Q(-1));
}

TEST_CASE("matrix rows and products") {
  using M = Matrix<int, std::string>;
  M m({{0, SVec{{"x", Q(1)}, {"y", Q(0)}}},
       {1, SVec{{"x", Q(0)}, {"y", Q(2)}}}});

  CHECK(m.row_count() == 2);
  CHECK(m.row(1)["y"] == Q(2));
  CHECK(m.entry(0, "x") == Q(1));
  CHECK_THROWS_AS(m.row(5), std::invalid_argument);

  SVec x{{"x", Q(3)}, {"y", Q(5, 2)}};
  Vec<int> prod = mat_vec(m, x);
  CHECK(prod[0] == Q(3));
  CHECK(prod[1] == Q(5));

  CHECK_THROWS_AS(M({{0, SVec{{"x", Q(1)}}}, {1, SVec{{"y", Q(1)}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(M({{0, SVec{{"x", Q(1)}}}, {0, SVec{{"x", Q(2)}}}}),
                  std::invalid_argument);

  M z = M::zero({0, 1, 2}, {"a", "b"});
  CHECK(z.row_count() == 3);
  CHECK(z.row(2).is_zero());
  z.set(2, "b", Q(9));
  CHECK(z.entry(2, "b") == Q(9));
}
