#pragma once

#include "sl2vvmf/qexpansion.hpp"

namespace sl2vvmf {

Rational bernoulli(unsigned n);

// normalized so the q^0 term is -B_w/w! and q^n is 2 sigma_{w-1}(n)/(w-1)!
QExpansion eisenstein(int weight, std::size_t order);

// eta^r = q^{r/24} prod (1-q^n)^r
QExpansion eta_power(const Rational& r, std::size_t order);

// 1728/j, leading exponent 1; cross-checks the two expressions for Delta
QExpansion j_inverse(std::size_t order);

// unit-constant U with 1/J = 1728 q U
QExpansion j_inverse_unit_part(std::size_t order);

// q d/dq f + weight * E_2 * f; result is valid to one fewer coefficient
QExpansion modular_derivative(const QExpansion& f, const Rational& weight);

}  // namespace sl2vvmf
