#include "sl2vvmf/modular.hpp"

#include "sl2vvmf/errors.hpp"

namespace sl2vvmf {

Rational bernoulli(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational s;
    for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -s / Rational(static_cast<long>(m + 1));
  }
  return b[n];
}

namespace {

BigInt divisor_power_sum(unsigned long n, unsigned long p) {
  BigInt s = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), d, p);
    s += t;
    unsigned long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), e, p);
      s += t;
    }
  }
  return s;
}

QExpansion euler_product(std::size_t order) {
  QExpansion p = QExpansion::constant(1, order);
  // multiply by (1 - q^m) in place, high to low
  for (std::size_t m = 1; m < order; ++m)
    for (std::size_t i = order; i-- > m;) p[i] -= p[i - m];
  return p;
}

}  // namespace

QExpansion eisenstein(int weight, std::size_t order) {
  if (weight < 2 || weight % 2) throw InvalidArgument("Eisenstein weight must be even and >= 2");
  if (order < 1) throw InvalidArgument("order must be >= 1");
  auto w = static_cast<unsigned long>(weight);
  std::vector<Rational> c(order);
  c[0] = -bernoulli(static_cast<unsigned>(w)) / Rational(factorial(w));
  Rational scale = Rational(2) / Rational(factorial(w - 1));
  for (std::size_t n = 1; n < order; ++n) c[n] = scale * Rational(divisor_power_sum(n, w - 1));
  return QExpansion(0, std::move(c));
}

QExpansion eta_power(const Rational& r, std::size_t order) {
  if (order < 1) throw InvalidArgument("order must be >= 1");
  return series_pow_rational(euler_product(order), r).shifted(r / 24);
}

QExpansion j_inverse(std::size_t order) {
  if (order < 1) throw InvalidArgument("order must be >= 1");
  // Delta = eta^24 = q(...), and ((720E4)^3 - (-30240E6)^2)/1728 has q^0 term 0
  QExpansion e4 = eisenstein(4, order + 1).scaled(720);
  QExpansion e6 = eisenstein(6, order + 1).scaled(-30240);
  QExpansion e4cubed = e4 * e4 * e4;
  QExpansion diff = (e4cubed - e6 * e6).scaled(Rational(1, 1728));
  if (!diff[0].is_zero()) throw InternalInconsistency("Delta has a constant term");
  std::vector<Rational> tail(diff.coeffs().begin() + 1, diff.coeffs().end());
  QExpansion delta_eis(1, std::move(tail));
  QExpansion delta_eta = eta_power(24, order);
  if (!(delta_eis == delta_eta)) throw InternalInconsistency("eta^24 and Eisenstein Delta disagree");
  return (delta_eta * series_inverse(e4cubed.truncated(order))).scaled(1728);
}

QExpansion j_inverse_unit_part(std::size_t order) {
  return j_inverse(order).scaled(Rational(1, 1728)).shifted(-1);
}

QExpansion modular_derivative(const QExpansion& f, const Rational& weight) {
  if (f.order() < 1) throw InvalidArgument("modular derivative needs a nonempty series");
  std::size_t n = f.order() - 1;
  QExpansion g = f.truncated(n);
  for (std::size_t i = 0; i < n; ++i) g[i] *= f.leading_exponent() + Rational(static_cast<long>(i));
  if (weight.is_zero()) return g;
  return g + (eisenstein(2, n) * f.truncated(n)).scaled(weight);
}

}  // namespace sl2vvmf
