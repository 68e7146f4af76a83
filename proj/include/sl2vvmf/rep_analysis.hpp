#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2vvmf/sl2.hpp"

namespace sl2vvmf {

struct AdmissibleSet {
  std::vector<Rational> exponents;  // each in [0,1)
};

AdmissibleSet minimal_admissible_set(const RepSignature& sig, const Rational& multiplier_weight);
Rational weight_lower_bound(const std::vector<Rational>& exponents);

// coefficient of t^n in (1 - t^{2d}) / ((1-t^2)(1-t^4)(1-t^6))
long hp_coefficient(int d, int n);
long graded_dimension(int k, int lambda, int n);

long t_order(int k, int lambda);

enum class Irreducibility { irreducible, inconclusive };
const char* irreducibility_name(Irreducibility r);

Irreducibility irreducibility_subproduct_test(const RepSignature& sig);

enum class CongruenceStatus { congruence, noncongruence, undetermined };
const char* congruence_status_name(CongruenceStatus s);

struct CongruenceVerdict {
  CongruenceStatus status = CongruenceStatus::undetermined;
  std::optional<long> congruence_level;
  std::string basis;  // rule identifier
};

// certified_irreducible: an outside proof of irreducibility (e.g. the categorical probe)
CongruenceVerdict congruence_classify(int k, int lambda, bool certified_irreducible = false);

struct PrimePower {
  long p;
  int e;
};
// 25401600 = 2^8 3^4 5^2 7^2
inline constexpr PrimePower kDim3OrderBound[] = {{2, 8}, {3, 4}, {5, 2}, {7, 2}};
bool divides_dim3_order_bound(long n);

}  // namespace sl2vvmf
