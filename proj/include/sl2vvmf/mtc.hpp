#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "sl2vvmf/rep_analysis.hpp"

namespace sl2vvmf {

using cplx = std::complex<double>;

inline constexpr int kDefaultMaxLevel = 48;

double quantum_integer(int k, int n);
double quantum_factorial(int k, int n);

// a spin j held as the integer 2j, which is also the sl(2) label
struct Spin {
  int twice = 0;
};

// {a b e; d c f} at level k
double six_j(int k, Spin a, Spin b, Spin e, Spin d, Spin c, Spin f);

class MtcLevelData {
 public:
  explicit MtcLevelData(int k);

  int level() const { return k_; }
  int rank() const { return k_ + 1; }
  cplx theta(int r) const { return theta_[static_cast<std::size_t>(r)]; }
  cplx zeta() const { return zeta_; }
  const Eigen::MatrixXd& s_char() const { return s_; }
  double qdim(int i) const { return qdim_[static_cast<std::size_t>(i)]; }
  double global_dim_root() const { return d_root_; }

  bool fusion(int a, int b, int c) const;
  double six_j(Spin a, Spin b, Spin e, Spin d, Spin c, Spin f) const;

  // zero off the admissible tuples
  double f(int r, int s, int t, int u, int p, int q) const;
  cplx r(int a, int b, int c) const;
  cplx g(int i, int j, int k, int l, int p, int q) const;

 private:
  int k_;
  std::vector<double> qint_, qfact_;
  std::vector<cplx> theta_;
  cplx zeta_;
  Eigen::MatrixXd s_;
  std::vector<double> qdim_;
  double d_root_;
};

MtcLevelData f_r_g_matrices(int k, int max_level = kDefaultMaxLevel);

std::vector<int> adjoint_members(int k);

struct GenModularPair {
  int level = 0;
  int p_label = 0;
  std::vector<int> basis;
  Eigen::MatrixXcd s_matrix;
  Eigen::MatrixXcd t_matrix;
  double braid_residual = 0;  // |(ST)^3 - S^2|_inf
  double twist_residual = 0;  // |S^4 - theta_p^{-1}|_inf
};

// residuals are filled in but not enforced
GenModularPair compute_modular_pair(const MtcLevelData& data, int p);
// throws RelationViolation when a residual exceeds tol
GenModularPair gen_modular_pair(const MtcLevelData& data, int p, double tol = 1e-9);

Irreducibility irreducibility_probe(const GenModularPair& pair, const Rational& multiplier_weight, double tol = 1e-9);

struct AnalyticComparison {
  int level = 0;
  int lambda = 0;
  std::vector<int> basis;
  std::vector<double> t_residuals;  // |T_ii / e(h/12) - e(r_mu)|
  bool t_match = false;
  Eigen::MatrixXcd s_over_multiplier;  // S / nu_h(S), reported only
  // lambda = k only: the phase of the 1x1 S, e(-3k/16) and e(-3k/32) as exponents in [0,1)
  std::optional<double> s_phase, three_k_over_sixteen, three_k_over_thirty_two;
};

AnalyticComparison compare_with_analytic(const MtcLevelData& data, int lambda, double tol = 1e-9);

double verlinde_number(const MtcLevelData& data, int a, int b, int c);

// brute force over all admissible tuples; worst |lhs - rhs| and the number of nonzero left sides
struct IdentityCheck {
  double residual = 0;
  long nontrivial = 0;
};
IdentityCheck pentagon_check(const MtcLevelData& data);
IdentityCheck hexagon_check(const MtcLevelData& data);

}  // namespace sl2vvmf
