#pragma once

#include <vector>

#include "sl2vvmf/rational.hpp"

namespace sl2vvmf {

struct LevelData {
  int level = 0;
  Rational central_charge;       // 3k/(k+2)
  std::vector<Rational> weights;  // h_0..h_k
};

LevelData level_data(int k);
Rational central_charge(int k);
// h_mu = mu(mu+2)/(4(k+2)); any integer mu, not only 0..k
Rational conformal_weight(int k, long mu);

int fusion_coefficient(int k, int lambda, int mu, int nu);
std::vector<int> xi_set(int k, int lambda);
std::vector<Rational> leading_exponents(int k, int lambda);

struct RepSignature {
  int level = 0;
  int lambda = 0;
  int dimension = 0;
  std::vector<int> mu;                // labels in Xi_lambda
  std::vector<Rational> t_exponents;  // r_mu = h_mu - c/24 - h_lambda/12
  Rational multiplier_weight;         // h_lambda

  // representatives in [0,1) and the integers removed from each
  std::vector<Rational> reduced() const;
  std::vector<BigInt> offsets() const;
};

RepSignature rho_t(int k, int lambda);

enum class SL2Generator { S, T, ST };

// exponent x in [0,1) with nu_r(g) = e(x)
Rational multiplier(const Rational& r, SL2Generator g);

enum class Holomorphy { holomorphic_equal, holomorphic_proper, weakly_only };

// lambda^2 + 4 lambda - 2k >= 0
bool is_holomorphic(int k, int lambda);
Holomorphy holomorphy_classify(int k, int lambda);
const char* holomorphy_name(Holomorphy h);

bool saturation_check(int k, int lambda);
Rational leading_trace_sum(int k, int lambda, int mu);

}  // namespace sl2vvmf
