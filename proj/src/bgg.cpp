#include "sl2vvmf/bgg.hpp"

#include "sl2vvmf/errors.hpp"
#include "sl2vvmf/sl2.hpp"

namespace sl2vvmf {

Rational ZQCharacter::coeff(long z, std::size_t n) const {
  if (n >= rows.size()) throw InvalidArgument("q-grade beyond the computed order");
  auto it = rows[n].find(z);
  return it == rows[n].end() ? Rational() : it->second;
}

namespace {

void add_shifted(std::map<long, Rational>& dst, const std::map<long, Rational>& src, long shift, const Rational& c) {
  for (const auto& [a, v] : src) {
    Rational& slot = dst[a + shift];
    slot += c * v;
    if (slot.is_zero()) dst.erase(a + shift);
  }
}

}  // namespace

ZQCharacter denominator_inverse(std::size_t qorder) {
  ZQCharacter g;
  g.qorder = qorder;
  g.rows.resize(qorder);
  if (qorder == 0) return g;
  g.rows[0][0] = 1;
  // geometric factors 1/(1 - z^s q^m), applied in place with ascending grade
  for (std::size_t m = 1; m < qorder; ++m)
    for (long s : {2L, 0L, -2L})
      for (std::size_t n = m; n < qorder; ++n) add_shifted(g.rows[n], g.rows[n - m], s, 1);
  return g;
}

ZQCharacter simple_character(int k, int lambda, std::size_t qorder) {
  if (k < 0 || lambda < 0 || lambda > k) throw InvalidArgument("need 0 <= lambda <= k");
  if (qorder < 1) throw InvalidArgument("qorder must be >= 1");
  ZQCharacter den = denominator_inverse(qorder);
  ZQCharacter out;
  out.qorder = qorder;
  out.rows.resize(qorder);
  Rational h = conformal_weight(k, lambda);
  for (long i = 0;; ++i) {
    long j = (i + 1) / 2;
    long li = (i % 2 == 0) ? lambda + 2 * j * (k + 2) : -lambda - 2 + 2 * j * (k + 2);
    Rational gap = conformal_weight(k, li) - h;
    if (!gap.is_integer()) throw InternalInconsistency("non-integral resolution gap");
    if (gap >= Rational(static_cast<long>(qorder))) break;
    std::size_t g = gap.num().get_ui();
    Rational sign = (i % 2 == 0) ? 1 : -1;
    for (long a = li; a >= -li; a -= 2)
      for (std::size_t n = g; n < qorder; ++n) add_shifted(out.rows[n], den.rows[n - g], a, sign);
  }
  return out;
}

long trivial_multiplicity(const ZQCharacter& ch, std::size_t n) {
  if (n >= ch.qorder) throw InvalidArgument("q-grade beyond the computed order");
  Rational m = ch.coeff(0, n) - ch.coeff(2, n);
  if (!m.is_integer() || m.sign() < 0) throw InternalInconsistency("trivial multiplicity is not a natural number");
  return m.num().get_si();
}

long trivial_multiplicity(int k, int lambda, long n) {
  if (lambda % 2) throw InvalidArgument("lambda must be even");
  if (n < 0) throw InvalidArgument("grade must be non-negative");
  return trivial_multiplicity(simple_character(k, lambda, static_cast<std::size_t>(n) + 1), static_cast<std::size_t>(n));
}

}  // namespace sl2vvmf
