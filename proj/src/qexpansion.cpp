#include "sl2vvmf/qexpansion.hpp"

#include <algorithm>

#include "sl2vvmf/errors.hpp"

namespace sl2vvmf {

namespace {

long to_long_checked(const Rational& r) {
  if (!r.is_integer() || !r.num().fits_slong_p()) throw InvalidArgument("exponent offset not a small integer");
  return r.num().get_si();
}

// coefficient at absolute exponent lead + n, zero below the series' leading exponent
const Rational& coeff_at(const QExpansion& a, long n) {
  static const Rational zero;
  if (n < 0) return zero;
  return a[static_cast<std::size_t>(n)];
}

}  // namespace

QExpansion::QExpansion(Rational leading, std::vector<Rational> coeffs)
    : lead_(std::move(leading)), c_(std::move(coeffs)) {}

QExpansion QExpansion::constant(const Rational& c, std::size_t order) {
  QExpansion r = zero(order);
  if (order > 0) r.c_[0] = c;
  return r;
}

QExpansion QExpansion::zero(std::size_t order, const Rational& leading) {
  return QExpansion(leading, std::vector<Rational>(order));
}

QExpansion QExpansion::monomial(const Rational& lead, std::size_t order) {
  return constant(1, order).shifted(lead);
}

bool QExpansion::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool QExpansion::is_normalized() const { return is_zero() || (!c_.empty() && c_[0] == 1); }

QExpansion QExpansion::truncated(std::size_t order) const {
  if (order > c_.size()) throw InvalidArgument("cannot extend a truncated series");
  return QExpansion(lead_, std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order)));
}

QExpansion QExpansion::shifted(const Rational& delta) const { return QExpansion(lead_ + delta, c_); }

QExpansion QExpansion::scaled(const Rational& s) const {
  QExpansion r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

QExpansion QExpansion::normalized() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k == c_.size()) return *this;
  std::vector<Rational> out(c_.begin() + static_cast<long>(k), c_.end());
  Rational inv = Rational(1) / out[0];
  for (auto& x : out) x *= inv;
  return QExpansion(lead_ + Rational(static_cast<long>(k)), std::move(out));
}

static QExpansion add_impl(const QExpansion& a, const QExpansion& b, int sign) {
  long off = to_long_checked(b.leading_exponent() - a.leading_exponent());
  const QExpansion& lo = off >= 0 ? a : b;
  Rational lead = lo.leading_exponent();
  long oa = off >= 0 ? 0 : -off;  // offset of a relative to lead
  long ob = off >= 0 ? off : 0;
  long end = std::min(oa + static_cast<long>(a.order()), ob + static_cast<long>(b.order()));
  std::vector<Rational> c(static_cast<std::size_t>(std::max(end, 0L)));
  for (long n = 0; n < end; ++n) {
    Rational v = coeff_at(a, n - oa);
    if (sign > 0)
      v += coeff_at(b, n - ob);
    else
      v -= coeff_at(b, n - ob);
    c[static_cast<std::size_t>(n)] = std::move(v);
  }
  return QExpansion(lead, std::move(c));
}

QExpansion series_add(const QExpansion& a, const QExpansion& b) { return add_impl(a, b, 1); }
QExpansion series_sub(const QExpansion& a, const QExpansion& b) { return add_impl(a, b, -1); }

QExpansion series_mul(const QExpansion& a, const QExpansion& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return QExpansion(a.leading_exponent() + b.leading_exponent(), std::move(c));
}

QExpansion series_inverse(const QExpansion& a) {
  if (a.order() == 0) return QExpansion(-a.leading_exponent(), {});
  if (a[0].is_zero()) throw InvalidArgument("series with vanishing leading coefficient is not invertible");
  std::size_t n = a.order();
  std::vector<Rational> b(n);
  Rational inv0 = Rational(1) / a[0];
  b[0] = inv0;
  for (std::size_t m = 1; m < n; ++m) {
    Rational s;
    for (std::size_t i = 1; i <= m; ++i)
      if (!a[i].is_zero()) s += a[i] * b[m - i];
    b[m] = -s * inv0;
  }
  return QExpansion(-a.leading_exponent(), std::move(b));
}

QExpansion series_pow_rational(const QExpansion& a, const Rational& alpha) {
  std::size_t n = a.order();
  bool unit = a.leading_exponent().is_zero() && n > 0 && a[0] == 1;
  if (!unit) {
    if (!alpha.is_integer()) throw InvalidArgument("fractional power of a non-unit series");
    if (alpha.sign() < 0) return series_pow_rational(series_inverse(a), -alpha);
    // repeated squaring for a non-negative integer power
    QExpansion result = QExpansion::constant(1, n);
    QExpansion base(0, a.coeffs());
    BigInt e = alpha.num();
    while (e > 0) {
      if (e % 2 == 1) result = series_mul(result, base);
      e /= 2;
      if (e > 0) base = series_mul(base, base);
    }
    return result.shifted(a.leading_exponent() * alpha);
  }
  // (1+x)^alpha = sum_m C(alpha, m) x^m, x = a - 1 starts at q^1
  QExpansion x = a;
  x[0] = 0;
  QExpansion result = QExpansion::constant(1, n);
  QExpansion xm = QExpansion::constant(1, n);
  Rational binom = 1;
  for (std::size_t m = 1; m < n; ++m) {
    xm = series_mul(xm, x);
    binom *= (alpha - Rational(static_cast<long>(m - 1))) / Rational(static_cast<long>(m));
    if (binom.is_zero()) break;
    for (std::size_t i = m; i < n; ++i) result[i] += binom * xm[i];
  }
  return result;
}

bool agree_on_overlap(const QExpansion& a, const QExpansion& b) {
  Rational d = b.leading_exponent() - a.leading_exponent();
  if (!d.is_integer()) return a.is_zero() && b.is_zero();
  long off = to_long_checked(d);
  long oa = off >= 0 ? 0 : -off;
  long ob = off >= 0 ? off : 0;
  long end = std::min(oa + static_cast<long>(a.order()), ob + static_cast<long>(b.order()));
  for (long n = 0; n < end; ++n)
    if (coeff_at(a, n - oa) != coeff_at(b, n - ob)) return false;
  return true;
}

}  // namespace sl2vvmf
