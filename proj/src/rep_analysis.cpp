#include "sl2vvmf/rep_analysis.hpp"

#include <numeric>

#include "sl2vvmf/errors.hpp"
#include "sl2vvmf/qexpansion.hpp"

namespace sl2vvmf {

AdmissibleSet minimal_admissible_set(const RepSignature& sig, const Rational& multiplier_weight) {
  Rational m = multiplier_weight - Rational(12) * Rational((multiplier_weight / 12).floor());
  AdmissibleSet out;
  for (const auto& r : sig.t_exponents) out.exponents.push_back((r + m / 12).frac());
  return out;
}

Rational weight_lower_bound(const std::vector<Rational>& exponents) {
  if (exponents.empty()) throw InvalidArgument("need at least one exponent");
  Rational d = static_cast<long>(exponents.size()), s;
  for (const auto& e : exponents) s += e;
  return Rational(12) * s / d + Rational(1) - d;
}

long hp_coefficient(int d, int n) {
  if (d < 1 || n < 0) throw InvalidArgument("need d >= 1 and n >= 0");
  auto len = static_cast<std::size_t>(n) + 1;
  auto binomial_factor = [len](std::size_t deg) {
    QExpansion f = QExpansion::constant(1, len);
    if (deg < len) f[deg] = -1;
    return f;
  };
  QExpansion den = binomial_factor(2) * binomial_factor(4) * binomial_factor(6);
  QExpansion c = binomial_factor(2 * static_cast<std::size_t>(d)) * series_inverse(den);
  return c[static_cast<std::size_t>(n)].num().get_si();
}

long graded_dimension(int k, int lambda, int n) {
  if (k < 0 || lambda < 0 || lambda > k || lambda % 2) throw InvalidArgument("need even 0 <= lambda <= k");
  if (n < 0) throw InvalidArgument("n must be non-negative");
  int d = k - lambda + 1;
  static const int min_level[] = {0, 2, 3, 4};
  if (d > 3) throw Unsupported("closed forms exist in dimensions 1 to 3");
  if (k < min_level[d]) throw Unsupported("level below the validity range of the closed form");
  if (n % 2) return 0;
  switch (d) {
    case 1: return n % 12 == 2 ? n / 12 : n / 12 + 1;
    case 2: return n / 6 + 1;
    default: return n / 4 + 1;
  }
}

long t_order(int k, int lambda) {
  auto sig = rho_t(k, lambda);
  BigInt l = 1;
  for (const auto& r : sig.t_exponents) l = lcm(l, r.den());
  return l.get_si();
}

const char* irreducibility_name(Irreducibility r) {
  return r == Irreducibility::irreducible ? "irreducible" : "inconclusive";
}

Irreducibility irreducibility_subproduct_test(const RepSignature& sig) {
  std::size_t d = sig.t_exponents.size();
  if (d > 20) throw Unsupported("subset enumeration refused above dimension 20");
  for (unsigned long mask = 1; mask + 1 < (1UL << d); ++mask) {
    Rational s;
    for (std::size_t j = 0; j < d; ++j)
      if (mask >> j & 1) s += sig.t_exponents[j];
    if ((Rational(12) * s).is_integer()) return Irreducibility::inconclusive;
  }
  return Irreducibility::irreducible;
}

const char* congruence_status_name(CongruenceStatus s) {
  switch (s) {
    case CongruenceStatus::congruence: return "congruence";
    case CongruenceStatus::noncongruence: return "noncongruence";
    case CongruenceStatus::undetermined: return "undetermined";
  }
  return "?";
}

bool divides_dim3_order_bound(long n) {
  if (n <= 0) throw InvalidArgument("positive integer expected");
  for (const auto& [p, e] : kDim3OrderBound) {
    for (int i = 0; i < e && n % p == 0; ++i) n /= p;
  }
  return n == 1;
}

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// n = p^t with p prime, or nullopt
std::optional<std::pair<long, int>> prime_power(long n) {
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    if (!is_prime(p)) return std::nullopt;
    int t = 0;
    while (n % p == 0) n /= p, ++t;
    if (n != 1) return std::nullopt;
    return std::make_pair(p, t);
  }
  return std::nullopt;
}

}  // namespace

CongruenceVerdict congruence_classify(int k, int lambda, bool certified_irreducible) {
  auto sig = rho_t(k, lambda);
  CongruenceVerdict v;
  switch (sig.dimension) {
    case 1:
      v.status = CongruenceStatus::congruence;
      v.congruence_level = t_order(k, lambda);
      v.basis = "rule-dim1-congruence";
      return v;
    case 2:
      v.status = CongruenceStatus::congruence;
      v.congruence_level = k % 3 == 2 ? 8 : 24;
      v.basis = k % 3 == 2 ? "rule-dim2-level8" : "rule-dim2-level24";
      return v;
    case 3:
      if (!divides_dim3_order_bound(t_order(k, lambda))) {
        v.status = CongruenceStatus::noncongruence;
        v.basis = "rule-dim3-order-bound";
      } else {
        v.basis = "rule-dim3-order-divides-bound";
      }
      return v;
    default:
      break;
  }
  if (auto pp = prime_power(k + 2L); pp && pp->first > 3) {
    auto [p, t] = *pp;
    long bound = 1;
    for (int i = 0; i < t - 2; ++i) bound *= p;
    if (t == 1 || lambda + 1L > bound) {
      bool by_subproduct =
          sig.dimension <= 20 && irreducibility_subproduct_test(sig) == Irreducibility::irreducible;
      if (by_subproduct || certified_irreducible) {
        v.status = CongruenceStatus::noncongruence;
        v.basis = by_subproduct ? "rule-prime-power" : "rule-prime-power-certified";
      } else {
        v.basis = "rule-prime-power-needs-irreducibility";
      }
      return v;
    }
  }
  v.basis = "no-rule";
  return v;
}

}  // namespace sl2vvmf
