#pragma once

#include <map>
#include <vector>

#include "sl2vvmf/rational.hpp"

namespace sl2vvmf {

// sum_n q^n sum_a c_{a,n} z^a, rows n = 0..qorder-1
struct ZQCharacter {
  std::size_t qorder = 0;
  std::vector<std::map<long, Rational>> rows;

  Rational coeff(long z, std::size_t n) const;
};

// 1 / prod_{m>=1} (1 - z^2 q^m)(1 - q^m)(1 - z^-2 q^m)
ZQCharacter denominator_inverse(std::size_t qorder);

ZQCharacter simple_character(int k, int lambda, std::size_t qorder);

// coeff(z^0 q^n) - coeff(z^2 q^n)
long trivial_multiplicity(const ZQCharacter& ch, std::size_t n);
long trivial_multiplicity(int k, int lambda, long n);

}  // namespace sl2vvmf
