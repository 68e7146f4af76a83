#include "sl2vvmf/hypergeometric.hpp"

#include <algorithm>

#include "sl2vvmf/errors.hpp"

namespace sl2vvmf {

namespace {

void check_lower(const HypergeomSpec& spec) {
  for (const auto& b : spec.lower)
    if (b.is_integer() && b.sign() <= 0) throw InvalidArgument("lower parameter " + b.str() + " is a non-positive integer");
}

}  // namespace

std::vector<Rational> hypergeom_coefficients(const HypergeomSpec& spec, std::size_t count) {
  check_lower(spec);
  std::vector<Rational> c;
  c.reserve(count);
  Rational cur = 1;
  for (std::size_t n = 0; n < count; ++n) {
    c.push_back(cur);
    Rational num = 1, den = static_cast<long>(n + 1);
    for (const auto& a : spec.upper) num *= a + Rational(static_cast<long>(n));
    for (const auto& b : spec.lower) den *= b + Rational(static_cast<long>(n));
    cur *= num / den;
  }
  return c;
}

QExpansion hypergeom_series(const HypergeomSpec& spec, const QExpansion& arg, std::size_t order) {
  check_lower(spec);
  if (arg.is_zero()) return QExpansion::constant(1, order);
  const Rational& e = arg.leading_exponent();
  if (e.sign() <= 0) throw InvalidArgument("argument must vanish at the cusp");
  if (!e.is_integer()) throw InvalidArgument("argument must start at an integral power of q");
  std::size_t step = e.num().get_ui();
  // arg^n is known below n*step + arg.order(), so the sum is known below step + arg.order()
  std::size_t n_out = std::min(order, step + arg.order());
  std::size_t terms = n_out == 0 ? 0 : (n_out - 1) / step + 1;
  auto c = hypergeom_coefficients(spec, terms);
  QExpansion unit(0, arg.coeffs());
  std::vector<Rational> out(n_out);
  if (n_out > 0) out[0] = 1;
  QExpansion power = QExpansion::constant(1, arg.order());
  for (std::size_t n = 1; n < terms; ++n) {
    power = series_mul(power, unit);
    if (c[n].is_zero()) continue;
    std::size_t base = n * step;
    for (std::size_t i = 0; base + i < n_out; ++i) out[base + i] += c[n] * power[i];
  }
  return QExpansion(0, std::move(out));
}

}  // namespace sl2vvmf
