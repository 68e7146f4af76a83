#pragma once

#include <string>
#include <vector>

#include "sl2vvmf/hypergeometric.hpp"
#include "sl2vvmf/qexpansion.hpp"

namespace sl2vvmf {

struct VvmfComponent {
  int mu = 0;
  QExpansion series;
};

struct VvmfVector {
  int level = 0;
  int weight_label = 0;
  std::vector<VvmfComponent> components;  // increasing mu
  Rational form_weight;                   // h_lambda + lambda/2

  const QExpansion& component(int mu) const;
  std::size_t dimension() const { return components.size(); }
};

// One hypergeometric row: q^{-a} U^{-a} F(1/J), scaled by eta^{eta_exponent}.
struct GeneratorRow {
  Rational j_power;  // a in J^a
  HypergeomSpec spec;
};

// rows of the hypergeometric vector for k - lambda in {1, 2}
std::vector<GeneratorRow> generator_rows(int k, int lambda);
// the eta exponent multiplying those rows
Rational generator_eta_exponent(int k, int lambda);

VvmfVector cyclic_generator(int k, int lambda, std::size_t order);

// Dimension 3 with the alternate parameter set (row 1 upper parameters
// (11k+14)/(24(k+2)), (19k+30)/(24(k+2)); row 2 lower parameter 5/8).
// Kept for comparison only: it does not satisfy the third order equation.
std::vector<GeneratorRow> dim3_generator_alternate_parameters(int k);
VvmfVector build_generator(int k, int lambda, const std::vector<GeneratorRow>& rows, std::size_t order);

struct MldeResult {
  Rational weight;                   // weight of the rescaled vector
  std::vector<Rational> kappa;       // kappa_1 (and kappa_2 in dimension 3)
  std::vector<QExpansion> residuals;  // one per component
  bool all_zero() const;
};

// Residuals of the monic equation on eta^{-24 mu_min} times the generator
MldeResult mlde_residual(int k, int lambda, std::size_t order);
MldeResult mlde_residual_of(const VvmfVector& g, std::size_t order);

enum class Table { table1, table2 };

struct FixtureComponent {
  int level = 0;
  int mu = 0;
  Rational expected_exponent, actual_exponent;
  std::vector<Rational> expected, actual;
  std::vector<bool> match;  // per coefficient
  bool exponent_match = false;
  bool pass() const;
};

struct FixtureReport {
  Table which = Table::table1;
  std::vector<FixtureComponent> components;
  std::size_t entries() const;
  std::size_t mismatches() const;
  bool all_pass() const { return mismatches() == 0; }
};

FixtureReport table_fixture_check(Table which);
// same comparison against an arbitrary builder, used for the alternate dimension-3 rows
FixtureReport table_fixture_check_with(Table which, bool alternate_dim3);

std::string table_name(Table t);

}  // namespace sl2vvmf
