#pragma once

#include <vector>

#include "sl2vvmf/qexpansion.hpp"

namespace sl2vvmf {

struct HypergeomSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
};

// c_0..c_{count-1} of pFq, c_{n+1}/c_n = prod(a+n) / (prod(b+n) (n+1))
std::vector<Rational> hypergeom_coefficients(const HypergeomSpec& spec, std::size_t count);

// sum c_n arg^n; arg must start at a positive integer power of q
QExpansion hypergeom_series(const HypergeomSpec& spec, const QExpansion& arg, std::size_t order);

}  // namespace sl2vvmf
