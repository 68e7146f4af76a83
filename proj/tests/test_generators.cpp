#include <doctest.h>

#include "sl2vvmf/errors.hpp"
#include "sl2vvmf/generators.hpp"
#include "sl2vvmf/modular.hpp"
#include "sl2vvmf/rep_analysis.hpp"

using namespace sl2vvmf;

namespace {

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(Rational::parse(x));
  return v;
}

}  // namespace

TEST_CASE("hypergeometric series") {
  HypergeomSpec geo{{1, 1}, {1}};
  CHECK(hypergeom_series(geo, QExpansion::zero(4), 4) == QExpansion::constant(1, 4));
  auto g = hypergeom_series(geo, QExpansion::monomial(1, 8), 6);
  CHECK(g.coeffs() == std::vector<Rational>(6, Rational(1)));
  HypergeomSpec k3{{Rational(-1, 24), Rational(7, 24)}, {Rational(3, 4)}};
  auto c = hypergeom_coefficients(k3, 2);
  CHECK(c[0] == 1);
  CHECK(c[1] == Rational(-1, 24) * Rational(7, 24) / Rational(3, 4));
  CHECK_THROWS_AS(hypergeom_coefficients(HypergeomSpec{{1}, {-2}}, 3), InvalidArgument);
  CHECK_THROWS_AS(hypergeom_series(geo, QExpansion::monomial(0, 3), 3), InvalidArgument);
}

TEST_CASE("dimension two generator at k=3") {
  auto v = cyclic_generator(3, 2, 5);
  REQUIRE(v.dimension() == 2);
  CHECK(v.component(1).leading_exponent() == Rational(3, 40));
  CHECK(v.component(1).coeffs() == rats({"1", "1/5", "-117/25", "-84/125", "3659/625"}));
  CHECK(v.component(2).leading_exponent() == Rational(13, 40));
  CHECK(v.component(2).coeffs() == rats({"1", "-9/5", "-2/25", "-39/125", "-126/625"}));
}

TEST_CASE("dimension one generator") {
  auto v = cyclic_generator(2, 2, 4);
  REQUIRE(v.dimension() == 1);
  CHECK(v.components[0].series == eta_power(3, 4));
  CHECK(v.components[0].series.leading_exponent() == Rational(1, 8));
  for (int k = 2; k <= 20; k += 2) CHECK(cyclic_generator(k, k, 30).components[0].series == eta_power(Rational(3 * k, 2), 30));
}

TEST_CASE("dimension three generator at k=4 leading data") {
  auto v = cyclic_generator(4, 2, 5);
  REQUIRE(v.dimension() == 3);
  CHECK(v.component(1).leading_exponent() == Rational(1, 24));
  CHECK(v.component(2).leading_exponent() == Rational(1, 4));
  CHECK(v.component(3).leading_exponent() == Rational(13, 24));
  for (const auto& c : v.components) CHECK(c.series.coeffs()[0] == 1);
}

TEST_CASE("generator input checks") {
  CHECK_THROWS_AS(cyclic_generator(4, 0, 5), Unsupported);
  CHECK_THROWS_AS(cyclic_generator(6, 5, 5), InvalidArgument);
  CHECK_THROWS_AS(cyclic_generator(2, 4, 5), InvalidArgument);
  CHECK_THROWS_AS(cyclic_generator(-1, 0, 5), InvalidArgument);
}

TEST_CASE("leading exponents agree with the theory for all small levels") {
  for (int k = 2; k <= 24; ++k)
    for (int lambda = k - 2; lambda <= k; ++lambda) {
      if (lambda < 0 || lambda % 2) continue;
      auto v = cyclic_generator(k, lambda, 4);
      auto want = leading_exponents(k, lambda);
      REQUIRE(v.dimension() == want.size());
      for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(v.components[i].series.leading_exponent() == want[i]);
        CHECK(v.components[i].series.is_normalized());
        if (i) CHECK(want[i - 1] < want[i]);
      }
    }
}

TEST_CASE("differential equations") {
  SUBCASE("dimension two") {
    for (int k : {3, 5, 7, 9, 11, 13}) {
      auto m = mlde_residual(k, k - 1, 8);
      CHECK(m.weight == Rational(1, 2));
      REQUIRE(m.kappa.size() == 1);
      CHECK(m.kappa[0] == Rational(25, 4));
      CHECK(m.all_zero());
      CHECK(m.residuals[0].order() >= 6);
    }
  }
  SUBCASE("dimension three") {
    // frozen from the exact linear solve
    const std::vector<std::pair<int, std::vector<Rational>>> frozen = {
        {4, {Rational(-305, 12), Rational(-27125, 216)}},
        {6, {Rational(-1615, 64), Rational(-70315, 512)}},
        {10, {Rational(-1205, 48), Rational(-258335, 1728)}},
    };
    for (const auto& [k, kappa] : frozen) {
      auto m = mlde_residual(k, k - 2, 8);
      CHECK(m.weight == Rational(k + 1, k + 2));
      CHECK(m.kappa == kappa);
      CHECK(m.all_zero());
    }
    CHECK(mlde_residual(8, 6, 8).all_zero());
  }
  SUBCASE("the alternate parameter set is not annihilated") {
    auto alt = build_generator(4, 2, dim3_generator_alternate_parameters(4), 9);
    auto m = mlde_residual_of(alt, 8);
    CHECK_FALSE(m.all_zero());
    CHECK(m.kappa == std::vector<Rational>{Rational(-2931185, 18444), Rational(87584875, 331992)});
  }
}

TEST_CASE("table fixtures") {
  auto t1 = table_fixture_check(Table::table1);
  CHECK(t1.components.size() == 12);
  CHECK(t1.entries() == 60);
  CHECK(t1.mismatches() == 0);
  for (const auto& c : t1.components)
    if (c.level == 13 && c.mu == 7) CHECK(c.expected[4] == Rational(309009, 625));

  // rows with the annihilated parameters differ from the printed dimension-3 data,
  // the alternate parameters reproduce them
  auto t2 = table_fixture_check(Table::table2);
  CHECK(t2.components.size() == 12);
  CHECK(t2.mismatches() == 32);
  CHECK(table_fixture_check_with(Table::table2, true).mismatches() == 0);
  CHECK(table_fixture_check_with(Table::table1, true).mismatches() == 0);
}

TEST_CASE("admissible sets and weights") {
  auto two = minimal_admissible_set(rho_t(3, 2), Rational(-1, 2));
  CHECK(two.exponents == rats({"0", "1/4"}));
  CHECK(weight_lower_bound(two.exponents) == Rational(1, 2));
  auto three = minimal_admissible_set(rho_t(4, 2), Rational(-1, 6));
  CHECK(three.exponents == rats({"0", "5/24", "1/2"}));
  CHECK(weight_lower_bound(three.exponents) == Rational(5, 6));
  for (int k = 4; k <= 30; k += 2) {
    Rational lead = rho_t(k, k - 2).t_exponents[0];
    auto s = minimal_admissible_set(rho_t(k, k - 2), Rational(-12) * lead);
    CHECK(s.exponents == std::vector<Rational>{0, Rational(k + 1, 4 * (k + 2)), Rational(1, 2)});
    CHECK(weight_lower_bound(s.exponents) == Rational(k + 1, k + 2));
  }
  CHECK(weight_lower_bound({Rational(0)}) == 0);
  CHECK_THROWS_AS(weight_lower_bound({}), InvalidArgument);
  // integral exponents reduce to zero
  RepSignature sig;
  sig.t_exponents = {Rational(1), Rational(-2)};
  CHECK(minimal_admissible_set(sig, 0).exponents == rats({"0", "0"}));
}
