#pragma once

#include <cstddef>
#include <vector>

#include "sl2vvmf/rational.hpp"

namespace sl2vvmf {

// q^lead * sum_{n < order} c_n q^n, nothing known beyond the order.
class QExpansion {
 public:
  QExpansion() = default;
  QExpansion(Rational leading, std::vector<Rational> coeffs);

  static QExpansion constant(const Rational& c, std::size_t order);
  static QExpansion zero(std::size_t order, const Rational& leading = 0);
  // q^lead, i.e. a monomial
  static QExpansion monomial(const Rational& lead, std::size_t order);

  const Rational& leading_exponent() const { return lead_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  std::size_t order() const { return c_.size(); }
  const Rational& operator[](std::size_t n) const { return c_[n]; }
  Rational& operator[](std::size_t n) { return c_[n]; }

  bool is_zero() const;
  bool is_normalized() const;

  QExpansion truncated(std::size_t order) const;
  // multiply by q^delta
  QExpansion shifted(const Rational& delta) const;
  QExpansion scaled(const Rational& s) const;
  // leading zeros are absorbed into the exponent, then c_0 is scaled to 1
  QExpansion normalized() const;

  friend bool operator==(const QExpansion&, const QExpansion&) = default;

 private:
  Rational lead_;
  std::vector<Rational> c_;
};

QExpansion series_add(const QExpansion& a, const QExpansion& b);
QExpansion series_sub(const QExpansion& a, const QExpansion& b);
QExpansion series_mul(const QExpansion& a, const QExpansion& b);
QExpansion series_inverse(const QExpansion& a);
QExpansion series_pow_rational(const QExpansion& a, const Rational& alpha);

inline QExpansion operator+(const QExpansion& a, const QExpansion& b) { return series_add(a, b); }
inline QExpansion operator-(const QExpansion& a, const QExpansion& b) { return series_sub(a, b); }
inline QExpansion operator*(const QExpansion& a, const QExpansion& b) { return series_mul(a, b); }
inline QExpansion operator*(const Rational& s, const QExpansion& a) { return a.scaled(s); }

// true when both agree on the common validity range
bool agree_on_overlap(const QExpansion& a, const QExpansion& b);

}  // namespace sl2vvmf
