#include <doctest.h>

#include <random>

#include "sl2vvmf/errors.hpp"
#include "sl2vvmf/modular.hpp"

using namespace sl2vvmf;

namespace {

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(Rational::parse(x));
  return v;
}

QExpansion random_series(std::mt19937& rng, std::size_t order, const Rational& lead = 0, bool unit = false) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  std::vector<Rational> c(order);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (unit || c[0].is_zero()) c[0] = 1;
  return QExpansion(lead, c);
}

// b_n = (1/n) sum_{j=1}^n (alpha j - (n - j)) a_j b_{n-j}, for a_0 = 1
std::vector<Rational> miller_power(const std::vector<Rational>& a, const Rational& alpha) {
  std::vector<Rational> b(a.size());
  b[0] = 1;
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational s;
    for (std::size_t j = 1; j <= n; ++j)
      s += (alpha * Rational(static_cast<long>(j)) - Rational(static_cast<long>(n - j))) * a[j] * b[n - j];
    b[n] = s / Rational(static_cast<long>(n));
  }
  return b;
}

// Euler: prod (1 - q^n) = sum_m (-1)^m q^{m(3m-1)/2}
std::vector<Rational> pentagonal(std::size_t order) {
  std::vector<Rational> c(order);
  for (long m = -50; m <= 50; ++m) {
    long e = m * (3 * m - 1) / 2;
    if (e >= 0 && static_cast<std::size_t>(e) < order) c[static_cast<std::size_t>(e)] += (m % 2 ? -1 : 1);
  }
  return c;
}

}  // namespace

TEST_CASE("rational arithmetic and serialization") {
  Rational a(6, -8);
  CHECK(a.str() == "-3/4");
  CHECK(a.den() == 4);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational(7, 3).floor() == 2);
  CHECK(Rational(-7, 3).floor() == -3);
  CHECK(Rational(-7, 3).frac() == Rational(2, 3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1/x"), InvalidArgument);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("bernoulli") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned n = 3; n < 30; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("eisenstein") {
  CHECK(eisenstein(2, 3).coeffs() == rats({"-1/12", "2", "6"}));
  CHECK(eisenstein(4, 2).coeffs() == rats({"1/720", "1/3"}));
  CHECK(eisenstein(6, 1).coeffs() == rats({"-1/30240"}));
  // 720 E4 = 1 + 240 sum sigma_3, -30240 E6 = 1 - 504 sum sigma_5
  CHECK(eisenstein(4, 4).scaled(720).coeffs() == rats({"1", "240", "2160", "6720"}));
  CHECK(eisenstein(6, 4).scaled(-30240).coeffs() == rats({"1", "-504", "-16632", "-122976"}));
  CHECK_THROWS_AS(eisenstein(3, 2), InvalidArgument);
  CHECK_THROWS_AS(eisenstein(0, 2), InvalidArgument);
}

TEST_CASE("eta powers") {
  auto e1 = eta_power(1, 6);
  CHECK(e1.leading_exponent() == Rational(1, 24));
  CHECK(e1.coeffs() == rats({"1", "-1", "-1", "0", "0", "1"}));
  auto e0 = eta_power(0, 4);
  CHECK(e0.leading_exponent() == 0);
  CHECK(e0.coeffs() == rats({"1", "0", "0", "0"}));
  auto d = eta_power(24, 8);
  CHECK(d.leading_exponent() == 1);
  CHECK(d.coeffs() == rats({"1", "-24", "252", "-1472", "4830", "-6048", "-16744", "84480"}));
  CHECK(eta_power(1, 40).coeffs() == pentagonal(40));

  SUBCASE("fractional exponents agree with the Miller recurrence") {
    auto p = pentagonal(25);
    for (Rational r : {Rational(1, 2), Rational(-5, 7), Rational(33, 10), Rational(-3)})
      CHECK(eta_power(r, 25).coeffs() == miller_power(p, r));
  }
  SUBCASE("additivity") {
    std::vector<Rational> rs = {Rational(1, 3), Rational(-7, 5), Rational(2), Rational(11, 24)};
    for (const auto& r : rs)
      for (const auto& s : rs) CHECK(eta_power(r, 15) * eta_power(s, 15) == eta_power(r + s, 15));
  }
}

TEST_CASE("j inverse") {
  CHECK(j_inverse(2).coeffs() == rats({"1728", "-1285632"}));
  CHECK(j_inverse(2).leading_exponent() == 1);
  CHECK(j_inverse(1).coeffs() == rats({"1728"}));
  // 1/j = q - 744 q^2 + 356652 q^3 - 140361152 q^4 + ...
  auto ji = j_inverse(4).scaled(Rational(1, 1728));
  CHECK(ji.coeffs() == rats({"1", "-744", "356652", "-140361152"}));
  CHECK(j_inverse_unit_part(5)[0] == 1);
}

TEST_CASE("series multiplication") {
  QExpansion a(Rational(1, 2), rats({"1", "1", "0"}));
  QExpansion b(Rational(1, 2), rats({"1", "-1", "0"}));
  auto c = a * b;
  CHECK(c.leading_exponent() == 1);
  CHECK(c.coeffs() == rats({"1", "0", "-1"}));
  CHECK((eta_power(1, 10) * eta_power(1, 10)) == eta_power(2, 10));
  CHECK((a * QExpansion::zero(3)).is_zero());
  // order is the shorter one
  CHECK((a * eta_power(1, 2)).order() == 2);
}

TEST_CASE("series addition tracks validity") {
  QExpansion a(0, rats({"1", "2", "3", "4"}));
  QExpansion b(2, rats({"1", "1"}));
  auto s = a + b;
  CHECK(s.coeffs() == rats({"1", "2", "4", "5"}));
  QExpansion c(3, rats({"1"}));
  CHECK((a + c).order() == 4);
  QExpansion d(0, rats({"1", "1"}));
  CHECK((a + d).order() == 2);
  CHECK_THROWS_AS(a + QExpansion(Rational(1, 2), rats({"1"})), InvalidArgument);
}

TEST_CASE("rational powers") {
  QExpansion one_plus_q(0, rats({"1", "1", "0", "0"}));
  CHECK(series_pow_rational(one_plus_q, Rational(1, 2)).coeffs() == rats({"1", "1/2", "-1/8", "1/16"}));
  std::mt19937 rng(7);
  auto u = random_series(rng, 8, 0, true);
  CHECK(series_pow_rational(u, 0) == QExpansion::constant(1, 8));
  QExpansion geom(0, rats({"1", "1", "1", "1", "1"}));
  CHECK(series_pow_rational(geom, -1).coeffs() == rats({"1", "-1", "0", "0", "0"}));
  CHECK(series_pow_rational(series_pow_rational(geom, -1), -1) == geom);
  CHECK_THROWS_AS(series_pow_rational(QExpansion(0, rats({"2", "1"})), Rational(1, 2)), InvalidArgument);
  // integer powers of non-unit series
  QExpansion x(Rational(1, 3), rats({"2", "1", "0"}));
  CHECK(series_pow_rational(x, 2) == x * x);
  CHECK(series_pow_rational(x, -1) * x == QExpansion::constant(1, 3));

  SUBCASE("exponent law and the Miller oracle on random unit series") {
    for (int t = 0; t < 10; ++t) {
      auto a = random_series(rng, 9, 0, true);
      std::uniform_int_distribution<long> n(-20, 20), d(1, 9);
      Rational p(n(rng), d(rng)), q(n(rng), d(rng));
      CHECK(series_pow_rational(a, p) * series_pow_rational(a, q) == series_pow_rational(a, p + q));
      CHECK(series_pow_rational(a, p).coeffs() == miller_power(a.coeffs(), p));
    }
  }
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto a = random_series(rng, 7, Rational(1, 5));
    auto b = random_series(rng, 6, Rational(6, 5));
    auto c = random_series(rng, 8, Rational(-4, 5));
    CHECK(agree_on_overlap((a * b) * c, a * (b * c)));
    CHECK(agree_on_overlap(a * (b + b.shifted(-1)), a * b + a * b.shifted(-1)));
    CHECK(agree_on_overlap(a * b, b * a));
    CHECK(series_inverse(a) * a == QExpansion::constant(1, 7));
  }
}

TEST_CASE("modular derivative") {
  // eta is annihilated in weight 1/2
  CHECK(modular_derivative(eta_power(1, 21), Rational(1, 2)).is_zero());
  CHECK(modular_derivative(eta_power(1, 21), Rational(1, 2)).order() == 20);
  CHECK(modular_derivative(QExpansion::constant(1, 5), 0).is_zero());
  // Ramanujan: D_4 E4 = 14 E6 and D_6 E6 = (60/7) E4^2 in this normalization
  auto e4 = eisenstein(4, 15), e6 = eisenstein(6, 15);
  CHECK(modular_derivative(e4, 4) == e6.truncated(14).scaled(14));
  CHECK(modular_derivative(e6, 6) == (e4 * e4).truncated(14).scaled(Rational(60, 7)));
  // Delta has weight 12 and is annihilated
  CHECK(modular_derivative(eta_power(24, 12), 12).is_zero());

  SUBCASE("derivation rule") {
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
      auto f = random_series(rng, 9, Rational(1, 7));
      auto g = random_series(rng, 9, Rational(2, 7));
      Rational k(1, 3), l(5, 2);
      auto lhs = modular_derivative(f * g, k + l);
      auto rhs = modular_derivative(f, k) * g.truncated(8) + f.truncated(8) * modular_derivative(g, l);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("normalization") {
  QExpansion a(Rational(1, 4), rats({"0", "0", "3", "6"}));
  auto n = a.normalized();
  CHECK(n.leading_exponent() == Rational(9, 4));
  CHECK(n.coeffs() == rats({"1", "2"}));
  CHECK(n.is_normalized());
  CHECK(QExpansion::zero(3).is_normalized());
}
