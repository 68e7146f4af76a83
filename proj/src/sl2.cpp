#include "sl2vvmf/sl2.hpp"

#include <algorithm>
#include <string>

#include "sl2vvmf/errors.hpp"

namespace sl2vvmf {

namespace {

void check_level(int k) {
  if (k < 0) throw InvalidArgument("level must be non-negative");
}

void check_label(int k, int lambda) {
  check_level(k);
  if (lambda < 0 || lambda > k)
    throw InvalidArgument("label " + std::to_string(lambda) + " outside 0.." + std::to_string(k));
}

void check_even(int k, int lambda) {
  check_label(k, lambda);
  if (lambda % 2) throw InvalidArgument("lambda must be even");
}

Rational ratio_of_factorials(std::initializer_list<long> num, std::initializer_list<long> den) {
  BigInt n = 1, d = 1;
  for (long x : num) n *= factorial(static_cast<unsigned long>(x));
  for (long x : den) d *= factorial(static_cast<unsigned long>(x));
  return Rational(n, d);
}

}  // namespace

Rational central_charge(int k) {
  check_level(k);
  return Rational(3L * k, k + 2L);
}

Rational conformal_weight(int k, long mu) {
  check_level(k);
  return Rational(mu * (mu + 2), 4L * (k + 2));
}

LevelData level_data(int k) {
  LevelData d;
  d.level = k;
  d.central_charge = central_charge(k);
  for (int mu = 0; mu <= k; ++mu) d.weights.push_back(conformal_weight(k, mu));
  return d;
}

int fusion_coefficient(int k, int lambda, int mu, int nu) {
  check_label(k, lambda);
  check_label(k, mu);
  check_label(k, nu);
  if ((lambda + mu + nu) % 2) return 0;
  return (std::abs(lambda - mu) <= nu && nu <= std::min(lambda + mu, 2 * k - lambda - mu)) ? 1 : 0;
}

std::vector<int> xi_set(int k, int lambda) {
  check_label(k, lambda);
  std::vector<int> out;
  if (lambda % 2) return out;
  for (int mu = lambda / 2; mu <= k - lambda / 2; ++mu) out.push_back(mu);
  return out;
}

std::vector<Rational> leading_exponents(int k, int lambda) {
  check_even(k, lambda);
  Rational c24 = central_charge(k) / 24;
  std::vector<Rational> out;
  for (int mu : xi_set(k, lambda)) out.push_back(conformal_weight(k, mu) - c24);
  return out;
}

std::vector<Rational> RepSignature::reduced() const {
  std::vector<Rational> out;
  for (const auto& r : t_exponents) out.push_back(r.frac());
  return out;
}

std::vector<BigInt> RepSignature::offsets() const {
  std::vector<BigInt> out;
  for (const auto& r : t_exponents) out.push_back(r.floor());
  return out;
}

RepSignature rho_t(int k, int lambda) {
  check_even(k, lambda);
  RepSignature s;
  s.level = k;
  s.lambda = lambda;
  s.mu = xi_set(k, lambda);
  s.dimension = static_cast<int>(s.mu.size());
  s.multiplier_weight = conformal_weight(k, lambda);
  Rational shift = s.multiplier_weight / 12;
  for (const auto& e : leading_exponents(k, lambda)) s.t_exponents.push_back(e - shift);
  return s;
}

Rational multiplier(const Rational& r, SL2Generator g) {
  switch (g) {
    case SL2Generator::T:
      return (r / 12).frac();
    case SL2Generator::S:
      return (-r / 4).frac();
    case SL2Generator::ST:
      return (-r / 6).frac();
  }
  return 0;
}

bool is_holomorphic(int k, int lambda) {
  check_even(k, lambda);
  return static_cast<long>(lambda) * lambda + 4L * lambda - 2L * k >= 0;
}

Holomorphy holomorphy_classify(int k, int lambda) {
  if (!is_holomorphic(k, lambda)) return Holomorphy::weakly_only;
  int lo = 0, hi = 0;
  switch (k - lambda) {
    case 0: lo = 2, hi = 14; break;
    case 1: lo = 3, hi = 13; break;
    case 2: lo = 4, hi = 10; break;
    default:
      throw Unsupported("equality refinement only exists in dimensions 1 to 3");
  }
  return (lo <= k && k <= hi) ? Holomorphy::holomorphic_equal : Holomorphy::holomorphic_proper;
}

const char* holomorphy_name(Holomorphy h) {
  switch (h) {
    case Holomorphy::holomorphic_equal: return "holomorphic_equal";
    case Holomorphy::holomorphic_proper: return "holomorphic_proper";
    case Holomorphy::weakly_only: return "weakly_only";
  }
  return "?";
}

bool saturation_check(int k, int lambda) {
  auto ex = leading_exponents(k, lambda);
  Rational d = static_cast<long>(ex.size());
  Rational sum;
  for (const auto& e : ex) sum += e;
  Rational lhs = Rational(12) * sum / d + Rational(1) - d;
  return lhs == conformal_weight(k, lambda) + Rational(lambda, 2);
}

Rational leading_trace_sum(int k, int lambda, int mu) {
  check_even(k, lambda);
  auto xi = xi_set(k, lambda);
  if (std::find(xi.begin(), xi.end(), mu) == xi.end()) throw InvalidArgument("mu not in Xi_lambda");
  long l2 = lambda / 2, top = mu - l2;
  Rational s;
  for (long i = 0; i <= top; ++i)
    s += ratio_of_factorials({mu - i, l2 + i, top}, {i, mu, l2, top - i});
  return s;
}

}  // namespace sl2vvmf
