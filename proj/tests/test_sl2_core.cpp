#include <doctest.h>

#include "sl2vvmf/errors.hpp"
#include "sl2vvmf/sl2.hpp"

using namespace sl2vvmf;

namespace {

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(Rational::parse(x));
  return v;
}

}  // namespace

TEST_CASE("central charge and weights") {
  CHECK(central_charge(1) == 1);
  CHECK(central_charge(2) == Rational(3, 2));
  CHECK(conformal_weight(3, 2) == Rational(2, 5));
  CHECK(conformal_weight(1, 1) == Rational(1, 4));
  auto d = level_data(4);
  CHECK(d.weights.size() == 5);
  CHECK(d.weights[4] == Rational(1));
}

TEST_CASE("fusion rules") {
  for (int k = 0; k <= 6; ++k)
    for (int mu = 0; mu <= k; ++mu) CHECK(fusion_coefficient(k, 0, mu, mu) == 1);
  CHECK(fusion_coefficient(2, 1, 1, 1) == 0);
  CHECK(fusion_coefficient(2, 2, 1, 1) == 1);
  CHECK(fusion_coefficient(2, 2, 2, 2) == 0);
  CHECK_THROWS_AS(fusion_coefficient(2, 3, 1, 1), InvalidArgument);

  SUBCASE("symmetric and associative") {
    for (int k = 0; k <= 6; ++k)
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
          for (int c = 0; c <= k; ++c) {
            CHECK(fusion_coefficient(k, a, b, c) == fusion_coefficient(k, b, c, a));
            CHECK(fusion_coefficient(k, a, b, c) == fusion_coefficient(k, b, a, c));
            for (int d = 0; d <= k; ++d) {
              int lhs = 0, rhs = 0;
              for (int x = 0; x <= k; ++x) {
                lhs += fusion_coefficient(k, a, b, x) * fusion_coefficient(k, x, c, d);
                rhs += fusion_coefficient(k, b, c, x) * fusion_coefficient(k, a, x, d);
              }
              CHECK(lhs == rhs);
            }
          }
  }
}

TEST_CASE("xi sets") {
  CHECK(xi_set(3, 2) == std::vector<int>{1, 2});
  CHECK(xi_set(5, 3).empty());
  CHECK(xi_set(4, 2) == std::vector<int>{1, 2, 3});
  // Xi_lambda is exactly the set of mu with mu in mu x lambda
  for (int k = 0; k <= 10; ++k)
    for (int lambda = 0; lambda <= k; ++lambda) {
      std::vector<int> brute;
      for (int mu = 0; mu <= k; ++mu)
        if (fusion_coefficient(k, lambda, mu, mu)) brute.push_back(mu);
      CHECK(xi_set(k, lambda) == brute);
    }
}

TEST_CASE("leading exponents") {
  CHECK(leading_exponents(3, 2) == rats({"3/40", "13/40"}));
  CHECK(leading_exponents(4, 2) == rats({"1/24", "1/4", "13/24"}));
  CHECK(leading_exponents(2, 2) == rats({"1/8"}));
  CHECK_THROWS_AS(leading_exponents(5, 3), InvalidArgument);
}

TEST_CASE("rho(T) signatures") {
  auto s = rho_t(3, 2);
  CHECK(s.dimension == 2);
  CHECK(s.t_exponents == rats({"1/24", "7/24"}));
  CHECK(rho_t(4, 2).t_exponents == rats({"1/72", "2/9", "37/72"}));
  for (int k = 0; k <= 30; k += 2) CHECK(rho_t(k, k).t_exponents == std::vector<Rational>{Rational(k, 24)});
  // dimension 2 closed form (k-2)/24, (k+4)/24
  for (int k = 3; k <= 21; k += 2) CHECK(rho_t(k, k - 1).t_exponents == std::vector<Rational>{Rational(k - 2, 24), Rational(k + 4, 24)});
  auto big = rho_t(26, 26);
  CHECK(big.reduced() == std::vector<Rational>{Rational(1, 12)});
  CHECK(big.offsets() == std::vector<BigInt>{1});
  CHECK_THROWS_AS(rho_t(5, 3), InvalidArgument);
}

TEST_CASE("multiplier phases") {
  CHECK(multiplier(12, SL2Generator::T) == 0);
  CHECK(multiplier(Rational(2, 5), SL2Generator::T) == Rational(1, 30));
  CHECK(multiplier(1, SL2Generator::S) == Rational(3, 4));  // -1/4 mod 1
  CHECK(multiplier(1, SL2Generator::ST) == Rational(5, 6));
  // nu(S)^2 = nu(ST)^3 as the relation S^2 = (ST)^3 requires
  for (long n = -20; n <= 20; ++n) {
    Rational r(n, 7);
    CHECK((Rational(2) * multiplier(r, SL2Generator::S)).frac() == (Rational(3) * multiplier(r, SL2Generator::ST)).frac());
  }
}

TEST_CASE("holomorphy") {
  CHECK(holomorphy_classify(3, 2) == Holomorphy::holomorphic_equal);
  CHECK(holomorphy_classify(16, 16) == Holomorphy::holomorphic_proper);
  CHECK(holomorphy_classify(0, 0) == Holomorphy::holomorphic_proper);
  CHECK(holomorphy_classify(1, 0) == Holomorphy::weakly_only);
  CHECK(holomorphy_classify(14, 12) == Holomorphy::holomorphic_proper);
  CHECK(holomorphy_classify(10, 8) == Holomorphy::holomorphic_equal);
  CHECK_THROWS_AS(holomorphy_classify(8, 4), Unsupported);
  CHECK(is_holomorphic(8, 4));
  CHECK_FALSE(is_holomorphic(30, 2));
}

TEST_CASE("saturation") {
  CHECK(saturation_check(3, 2));
  CHECK(saturation_check(4, 2));
  CHECK(saturation_check(2, 0));
  for (int k = 0; k <= 20; ++k)
    for (int lambda = 0; lambda <= k; lambda += 2) CHECK(saturation_check(k, lambda));
}

TEST_CASE("leading trace sums") {
  for (int k = 0; k <= 8; ++k)
    for (int mu = 0; mu <= k; ++mu) CHECK(leading_trace_sum(k, 0, mu) == mu + 1);
  CHECK(leading_trace_sum(2, 2, 1) == 1);
  CHECK(leading_trace_sum(4, 2, 2) == 2);
  CHECK_THROWS_AS(leading_trace_sum(4, 2, 0), InvalidArgument);
  for (int k = 0; k <= 12; ++k)
    for (int lambda = 0; lambda <= k; lambda += 2)
      for (int mu : xi_set(k, lambda)) CHECK(leading_trace_sum(k, lambda, mu) > 0);
}
