#include "sl2vvmf/mtc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sl2vvmf/errors.hpp"
#include "sl2vvmf/sl2.hpp"

namespace sl2vvmf {

namespace {

cplx e(double x) { return std::polar(1.0, 2 * std::numbers::pi * x); }

std::vector<double> quantum_integers(int k) {
  std::vector<double> q(static_cast<std::size_t>(k) + 2);
  double s1 = std::sin(std::numbers::pi / (k + 2));
  for (int n = 0; n <= k + 1; ++n) q[static_cast<std::size_t>(n)] = std::sin(std::numbers::pi * n / (k + 2)) / s1;
  return q;
}

std::vector<double> quantum_factorials(const std::vector<double>& qi) {
  std::vector<double> f(qi.size());
  f[0] = 1;
  for (std::size_t n = 1; n < qi.size(); ++n) f[n] = f[n - 1] * qi[n];
  return f;
}

bool triad(int k, int a, int b, int c) {
  return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && std::abs(a - b) <= c && c <= a + b && a + b + c <= 2 * k;
}

// all arguments are twice the spin
double six_j_impl(int k, const std::vector<double>& qi, const std::vector<double>& qf, int A, int B, int E, int D, int C,
                  int F) {
  if (!triad(k, A, B, E) || !triad(k, A, C, F) || !triad(k, C, E, D) || !triad(k, D, B, F))
    throw InvalidArgument("inadmissible triad in 6j symbol");
  auto fac = [&](int twice) { return qf[static_cast<std::size_t>(twice / 2)]; };
  auto delta = [&](int a, int b, int c) {
    return std::sqrt(fac(-a + b + c) * fac(a - b + c) * fac(a + b - c) / fac(a + b + c + 2));
  };
  int lo = std::max({A + B + E, A + C + F, B + D + F, C + D + E}) / 2;
  int hi = std::min({A + B + C + D, A + D + E + F, B + C + E + F}) / 2;
  double sum = 0;
  for (int z = lo; z <= hi; ++z) {
    if (z + 1 > k + 1) break;  // [z+1]! contains [k+2] = 0
    double den = fac(2 * z - A - B - E) * fac(2 * z - A - C - F) * fac(2 * z - B - D - F) * fac(2 * z - D - C - E) *
                 fac(A + B + C + D - 2 * z) * fac(A + D + E + F - 2 * z) * fac(B + C + E + F - 2 * z);
    sum += (z % 2 ? -1.0 : 1.0) * qf[static_cast<std::size_t>(z + 1)] / den;
  }
  int sign_exp = (A + B - C - D - 2 * E) / 2;
  double pre = (sign_exp % 2 ? -1.0 : 1.0) * std::sqrt(qi[static_cast<std::size_t>(E + 1)] * qi[static_cast<std::size_t>(F + 1)]);
  return pre * delta(A, B, E) * delta(A, C, F) * delta(C, E, D) * delta(D, B, F) * sum;
}

}  // namespace

double quantum_integer(int k, int n) {
  if (k < 0 || n < 0 || n > k + 1) throw InvalidArgument("quantum integer index out of range");
  return quantum_integers(k)[static_cast<std::size_t>(n)];
}

double quantum_factorial(int k, int n) {
  if (k < 0 || n < 0) throw InvalidArgument("negative argument");
  if (n > k + 1) throw InvalidArgument("[n]! vanishes for n > k+1");
  return quantum_factorials(quantum_integers(k))[static_cast<std::size_t>(n)];
}

double six_j(int k, Spin a, Spin b, Spin e, Spin d, Spin c, Spin f) {
  if (k < 0) throw InvalidArgument("level must be non-negative");
  auto qi = quantum_integers(k);
  return six_j_impl(k, qi, quantum_factorials(qi), a.twice, b.twice, e.twice, d.twice, c.twice, f.twice);
}

MtcLevelData::MtcLevelData(int k) : k_(k) {
  if (k < 0) throw InvalidArgument("level must be non-negative");
  qint_ = quantum_integers(k);
  qfact_ = quantum_factorials(qint_);
  for (int r = 0; r <= k; ++r) theta_.push_back(e(conformal_weight(k, r).to_double()));
  zeta_ = e(central_charge(k).to_double() / 24);
  s_.resize(k + 1, k + 1);
  double norm = std::sqrt(2.0 / (k + 2));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) s_(i, j) = norm * std::sin(std::numbers::pi * (i + 1) * (j + 1) / (k + 2));
  for (int i = 0; i <= k; ++i) qdim_.push_back(s_(i, 0) / s_(0, 0));
  d_root_ = 1 / s_(0, 0);
}

bool MtcLevelData::fusion(int a, int b, int c) const {
  return a >= 0 && b >= 0 && c >= 0 && a <= k_ && b <= k_ && c <= k_ && fusion_coefficient(k_, a, b, c) == 1;
}

double MtcLevelData::six_j(Spin a, Spin b, Spin e, Spin d, Spin c, Spin f) const {
  return six_j_impl(k_, qint_, qfact_, a.twice, b.twice, e.twice, d.twice, c.twice, f.twice);
}

double MtcLevelData::f(int r, int s, int t, int u, int p, int q) const {
  if (!fusion(s, t, p) || !fusion(r, p, u) || !fusion(r, s, q) || !fusion(q, t, u)) return 0;
  return six_j({t}, {s}, {p}, {r}, {u}, {q});
}

cplx MtcLevelData::r(int a, int b, int c) const {
  if (!fusion(a, b, c)) return 0;
  // spin-unit sign; the label-unit exponent a+b-c is always even
  double sign = ((a + b - c) / 2) % 2 ? -1.0 : 1.0;
  double ph = (conformal_weight(k_, a) + conformal_weight(k_, b) - conformal_weight(k_, c)).to_double() / 2;
  return sign * e(ph);
}

cplx MtcLevelData::g(int i, int j, int k, int l, int p, int q) const {
  if (!fusion(i, j, p) || !fusion(p, k, l) || !fusion(j, k, q) || !fusion(i, q, l)) return 0;
  return r(j, k, q) * r(i, q, l) / (r(i, j, p) * r(p, k, l)) * f(k, j, i, l, p, q);
}

MtcLevelData f_r_g_matrices(int k, int max_level) {
  if (k > max_level) throw Unsupported("level " + std::to_string(k) + " exceeds the max level " + std::to_string(max_level));
  return MtcLevelData(k);
}

std::vector<int> adjoint_members(int k) {
  if (k < 0) throw InvalidArgument("level must be non-negative");
  std::vector<int> out;
  for (int p = 0; p <= k; ++p)
    for (int i = 0; i <= k; ++i)
      if (fusion_coefficient(k, p, i, i) == 1) {
        out.push_back(p);
        break;
      }
  return out;
}

GenModularPair compute_modular_pair(const MtcLevelData& data, int p) {
  int k = data.level();
  if (p < 0 || p > k) throw InvalidArgument("p outside 0..k");
  if (p % 2) throw InvalidArgument("p must be even");
  GenModularPair out;
  out.level = k;
  out.p_label = p;
  for (int i = 0; i <= k; ++i)
    if (data.fusion(p, i, i)) out.basis.push_back(i);
  auto n = static_cast<Eigen::Index>(out.basis.size());
  out.s_matrix = Eigen::MatrixXcd::Zero(n, n);
  out.t_matrix = Eigen::MatrixXcd::Zero(n, n);
  double D = data.global_dim_root();
  for (Eigen::Index a = 0; a < n; ++a) {
    int i = out.basis[static_cast<std::size_t>(a)];
    out.t_matrix(a, a) = data.theta(i) / data.zeta();
    for (Eigen::Index b = 0; b < n; ++b) {
      int j = out.basis[static_cast<std::size_t>(b)];
      cplx sum = 0;
      for (int r = 0; r <= k; ++r) {
        if (!data.fusion(i, j, r) || !data.fusion(i, r, j)) continue;
        sum += data.theta(r) / (data.theta(i) * data.theta(j)) * data.g(i, i, j, j, 0, r) * data.f(i, i, j, j, r, 0) *
               data.g(p, i, r, j, i, j);
      }
      out.s_matrix(a, b) = data.qdim(i) * data.qdim(j) / D * sum;
    }
  }
  const Eigen::MatrixXcd& S = out.s_matrix;
  Eigen::MatrixXcd st = S * out.t_matrix;
  out.braid_residual = (st * st * st - S * S).cwiseAbs().maxCoeff();
  Eigen::MatrixXcd s2 = S * S;
  out.twist_residual =
      (s2 * s2 - Eigen::MatrixXcd::Identity(n, n) / data.theta(p)).cwiseAbs().maxCoeff();
  return out;
}

GenModularPair gen_modular_pair(const MtcLevelData& data, int p, double tol) {
  GenModularPair out = compute_modular_pair(data, p);
  if (out.braid_residual > tol || out.twist_residual > tol)
    throw RelationViolation("S^(" + std::to_string(p) + ") at level " + std::to_string(data.level()) +
                            " violates the braid group relations");
  return out;
}

Irreducibility irreducibility_probe(const GenModularPair& pair, const Rational& multiplier_weight, double tol) {
  auto n = static_cast<std::size_t>(pair.s_matrix.rows());
  if (n > 20) throw Unsupported("subset enumeration refused above dimension 20");
  double w = multiplier_weight.to_double();
  Eigen::MatrixXcd S = pair.s_matrix * e(w / 4);
  Eigen::VectorXcd T = pair.t_matrix.diagonal() * e(-w / 12);
  auto idx = [](std::size_t i) { return static_cast<Eigen::Index>(i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(T(idx(i)) - T(idx(j))) <= tol) return Irreducibility::inconclusive;
  // with distinct T eigenvalues an invariant subspace is spanned by basis vectors B,
  // so S would have to vanish on every (outside B, inside B) entry
  for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
    bool coupled = false;
    for (std::size_t i = 0; i < n && !coupled; ++i)
      for (std::size_t j = 0; j < n && !coupled; ++j)
        if (!(mask >> i & 1) && (mask >> j & 1) && std::abs(S(idx(i), idx(j))) > tol) coupled = true;
    if (!coupled) return Irreducibility::inconclusive;
  }
  return Irreducibility::irreducible;
}

AnalyticComparison compare_with_analytic(const MtcLevelData& data, int lambda, double tol) {
  int k = data.level();
  auto adj = adjoint_members(k);
  if (std::find(adj.begin(), adj.end(), lambda) == adj.end()) throw InvalidArgument("lambda is not in the adjoint subcategory");
  GenModularPair pair = gen_modular_pair(data, lambda, tol);
  RepSignature sig = rho_t(k, lambda);
  AnalyticComparison out;
  out.level = k;
  out.lambda = lambda;
  out.basis = pair.basis;
  Rational h = sig.multiplier_weight;
  cplx nu_t = e((h / 12).to_double());
  cplx nu_s = e((-h / 4).to_double());
  out.t_match = pair.basis == sig.mu;
  for (std::size_t a = 0; a < pair.basis.size() && a < sig.t_exponents.size(); ++a) {
    auto i = static_cast<Eigen::Index>(a);
    double res = std::abs(pair.t_matrix(i, i) / nu_t - e(sig.t_exponents[a].to_double()));
    out.t_residuals.push_back(res);
    if (res > tol) out.t_match = false;
  }
  out.s_over_multiplier = pair.s_matrix / nu_s;
  if (lambda == k) {
    double ph = std::arg(pair.s_matrix(0, 0)) / (2 * std::numbers::pi);
    out.s_phase = ph - std::floor(ph);
    out.three_k_over_sixteen = Rational(-3L * k, 16).frac().to_double();
    out.three_k_over_thirty_two = Rational(-3L * k, 32).frac().to_double();
  }
  return out;
}

double verlinde_number(const MtcLevelData& data, int a, int b, int c) {
  const auto& S = data.s_char();
  double sum = 0;
  for (int m = 0; m < data.rank(); ++m) sum += S(a, m) * S(b, m) * S(c, m) / S(0, m);
  return sum;
}

IdentityCheck pentagon_check(const MtcLevelData& data) {
  int n = data.rank();
  std::vector<double> ft(static_cast<std::size_t>(n * n * n * n * n * n));
  auto at = [n](int a, int b, int c, int d, int e_, int f_) {
    return static_cast<std::size_t>(((((a * n + b) * n + c) * n + d) * n + e_) * n + f_);
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e_ = 0; e_ < n; ++e_)
            for (int f_ = 0; f_ < n; ++f_) ft[at(a, b, c, d, e_, f_)] = data.f(a, b, c, d, e_, f_);
  auto F = [&](int a, int b, int c, int d, int e_, int f_) { return ft[at(a, b, c, d, e_, f_)]; };
  IdentityCheck out;
  // F^{(abx)e}_{yw} F^{(wcd)e}_{xv} = sum_z F^{(bcd)y}_{xz} F^{(azd)e}_{yv} F^{(abc)v}_{zw}
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e_ = 0; e_ < n; ++e_)
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y)
                for (int v = 0; v < n; ++v)
                  for (int w = 0; w < n; ++w) {
                    double lhs = F(a, b, x, e_, y, w) * F(w, c, d, e_, x, v);
                    double rhs = 0;
                    for (int z = 0; z < n; ++z) rhs += F(b, c, d, y, x, z) * F(a, z, d, e_, y, v) * F(a, b, c, v, z, w);
                    if (lhs != 0) ++out.nontrivial;
                    out.residual = std::max(out.residual, std::abs(lhs - rhs));
                  }
  return out;
}

IdentityCheck hexagon_check(const MtcLevelData& data) {
  int n = data.rank();
  IdentityCheck out;
  // R^{(ap)e} F^{(abc)e}_{ps} = sum_q G^{(bca)e}_{pq} R^{(ac)q} F^{(bac)e}_{qs} R^{(ab)s}
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e_ = 0; e_ < n; ++e_)
          for (int p = 0; p < n; ++p)
            for (int s = 0; s < n; ++s) {
              if (!data.fusion(b, c, p) || !data.fusion(a, p, e_) || !data.fusion(a, b, s) || !data.fusion(s, c, e_))
                continue;
              cplx lhs = data.r(a, p, e_) * data.f(a, b, c, e_, p, s);
              cplx rhs = 0;
              for (int q = 0; q < n; ++q) rhs += data.g(b, c, a, e_, p, q) * data.r(a, c, q) * data.f(b, a, c, e_, q, s) * data.r(a, b, s);
              if (std::abs(lhs) > 0) ++out.nontrivial;
              out.residual = std::max(out.residual, std::abs(lhs - rhs));
            }
  return out;
}

}  // namespace sl2vvmf
