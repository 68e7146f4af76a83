#include "sl2vvmf/generators.hpp"

#include <json.hpp>

#include "sl2vvmf/errors.hpp"
#include "sl2vvmf/modular.hpp"
#include "sl2vvmf/sl2.hpp"

namespace sl2vvmf {

namespace detail {
extern const char* const kGeneratorTablesJson;
}

namespace {

void check_generator_input(int k, int lambda) {
  if (k < 0 || lambda < 0 || lambda > k) throw InvalidArgument("need 0 <= lambda <= k");
  if (k - lambda > 2) throw Unsupported("only dimensions 1, 2 and 3 have a cyclic generator here");
  if (lambda % 2) throw InvalidArgument("lambda must be even");
}

// exponents of eta^{-24 mu_min} g and the weight they force
std::vector<Rational> shifted_exponents(int k, int lambda) {
  auto ex = leading_exponents(k, lambda);
  Rational lo = ex.front();
  for (auto& e : ex) e -= lo;
  return ex;
}

Rational bound_weight(const std::vector<Rational>& ex) {
  Rational d = static_cast<long>(ex.size()), s;
  for (const auto& e : ex) s += e;
  return Rational(12) * s / d + Rational(1) - d;
}

}  // namespace

const QExpansion& VvmfVector::component(int mu) const {
  for (const auto& c : components)
    if (c.mu == mu) return c.series;
  throw InvalidArgument("no component with mu = " + std::to_string(mu));
}

// Row j: eta^{2w} J^{-alpha_j} pFq(alpha_j, alpha_j + 1/d, ...; lambda_j - lambda_i + 1; 1/J)
// with alpha_j = lambda_j - w/12, lambda the shifted exponents.
std::vector<GeneratorRow> generator_rows(int k, int lambda) {
  check_generator_input(k, lambda);
  if (k == lambda) throw InvalidArgument("dimension 1 has no hypergeometric rows");
  auto ex = shifted_exponents(k, lambda);
  Rational w = bound_weight(ex);
  long d = static_cast<long>(ex.size());
  std::vector<GeneratorRow> rows;
  for (std::size_t j = 0; j < ex.size(); ++j) {
    GeneratorRow r;
    Rational alpha = ex[j] - w / 12;
    r.j_power = -alpha;
    for (long t = 0; t < d; ++t) r.spec.upper.push_back(alpha + Rational(t, 3));
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (i != j) r.spec.lower.push_back(ex[j] - ex[i] + Rational(1));
    rows.push_back(std::move(r));
  }
  return rows;
}

Rational generator_eta_exponent(int k, int lambda) {
  check_generator_input(k, lambda);
  if (k == lambda) return Rational(3L * k, 2);
  auto ex = leading_exponents(k, lambda);
  return Rational(24) * ex.front() + Rational(2) * bound_weight(shifted_exponents(k, lambda));
}

std::vector<GeneratorRow> dim3_generator_alternate_parameters(int k) {
  auto rows = generator_rows(k, k - 2);
  Rational kk = k;
  rows[0].spec.upper[1] = (Rational(11) * kk + Rational(14)) / (Rational(24) * (kk + Rational(2)));
  rows[0].spec.upper[2] = (Rational(19) * kk + Rational(30)) / (Rational(24) * (kk + Rational(2)));
  rows[1].spec.lower[1] = Rational(5, 8);
  return rows;
}

VvmfVector build_generator(int k, int lambda, const std::vector<GeneratorRow>& rows, std::size_t order) {
  check_generator_input(k, lambda);
  if (order < 1) throw InvalidArgument("order must be >= 1");
  VvmfVector v;
  v.level = k;
  v.weight_label = lambda;
  v.form_weight = conformal_weight(k, lambda) + Rational(lambda, 2);
  auto xi = xi_set(k, lambda);
  auto expected = leading_exponents(k, lambda);
  QExpansion eta = eta_power(generator_eta_exponent(k, lambda), order);
  if (k == lambda) {
    v.components.push_back({xi[0], eta});
  } else {
    QExpansion jinv = j_inverse(order);
    QExpansion unit = j_inverse_unit_part(order);
    if (rows.size() != xi.size()) throw InvalidArgument("row count does not match the dimension");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const Rational& a = rows[j].j_power;
      // J^a = 1728^{-a} q^{-a} U^{-a}; the constant goes away on normalizing
      QExpansion s = eta * series_pow_rational(unit, -a).shifted(-a) * hypergeom_series(rows[j].spec, jinv, order);
      v.components.push_back({xi[j], s.normalized()});
    }
  }
  for (std::size_t j = 0; j < v.components.size(); ++j)
    if (v.components[j].series.leading_exponent() != expected[j])
      throw InternalInconsistency("generator component has the wrong leading exponent");
  return v;
}

VvmfVector cyclic_generator(int k, int lambda, std::size_t order) {
  check_generator_input(k, lambda);
  return build_generator(k, lambda, k == lambda ? std::vector<GeneratorRow>{} : generator_rows(k, lambda), order);
}

bool MldeResult::all_zero() const {
  for (const auto& r : residuals)
    if (!r.is_zero()) return false;
  return true;
}

MldeResult mlde_residual_of(const VvmfVector& g, std::size_t order) {
  std::size_t d = g.dimension();
  if (d != 2 && d != 3) throw Unsupported("monic equations are checked in dimensions 2 and 3");
  if (order < 4) throw InvalidArgument("order must be >= 4");
  Rational mu_min = g.components.front().series.leading_exponent();
  QExpansion shift = eta_power(Rational(-24) * mu_min, order);
  std::vector<QExpansion> f;
  std::vector<Rational> ex;
  for (const auto& c : g.components) {
    f.push_back(shift * c.series.truncated(order));
    ex.push_back(f.back().leading_exponent());
  }
  MldeResult out;
  out.weight = bound_weight(ex);
  const Rational& w = out.weight;
  QExpansion e4 = eisenstein(4, order), e6 = eisenstein(6, order);
  if (d == 2) {
    out.kappa = {Rational(25, 4)};
    for (const auto& fj : f) {
      QExpansion d2 = modular_derivative(modular_derivative(fj, w), w + Rational(2));
      out.residuals.push_back(d2 - (e4 * fj).scaled(out.kappa[0]));
    }
    return out;
  }
  struct Parts {
    QExpansion d3, e4d1, e6f;
  };
  auto parts = [&](const QExpansion& fj) {
    QExpansion d1 = modular_derivative(fj, w);
    QExpansion d3 = modular_derivative(modular_derivative(d1, w + Rational(2)), w + Rational(4));
    return Parts{d3, e4 * d1, e6 * fj};
  };
  std::vector<Parts> ps;
  for (const auto& fj : f) ps.push_back(parts(fj));
  // kappa from the two lowest coefficients of the first component (all share its exponent)
  const Parts& p = ps.front();
  Rational a0 = p.e4d1[0], a1 = p.e4d1[1], b0 = p.e6f[0], b1 = p.e6f[1];
  Rational det = a0 * b1 - a1 * b0;
  if (det.is_zero()) throw DegenerateMlde("singular system for kappa");
  Rational r0 = -p.d3[0], r1 = -p.d3[1];
  Rational k1 = (r0 * b1 - r1 * b0) / det;
  Rational k2 = (a0 * r1 - a1 * r0) / det;
  out.kappa = {k1, k2};
  for (const auto& pj : ps) out.residuals.push_back(pj.d3 + pj.e4d1.scaled(k1) + pj.e6f.scaled(k2));
  return out;
}

MldeResult mlde_residual(int k, int lambda, std::size_t order) {
  check_generator_input(k, lambda);
  if (k - lambda == 0) throw Unsupported("monic equations are checked in dimensions 2 and 3");
  return mlde_residual_of(cyclic_generator(k, lambda, order), order);
}

bool FixtureComponent::pass() const {
  if (!exponent_match) return false;
  for (bool b : match)
    if (!b) return false;
  return true;
}

std::size_t FixtureReport::entries() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.match.size();
  return n;
}

std::size_t FixtureReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& c : components) {
    if (!c.exponent_match) ++n;
    for (bool b : c.match) n += b ? 0 : 1;
  }
  return n;
}

std::string table_name(Table t) { return t == Table::table1 ? "table1" : "table2"; }

FixtureReport table_fixture_check_with(Table which, bool alternate_dim3) {
  auto doc = nlohmann::json::parse(detail::kGeneratorTablesJson);
  FixtureReport rep;
  rep.which = which;
  for (const auto& lv : doc.at(table_name(which))) {
    int k = lv.at("level").get<int>(), lambda = lv.at("lambda").get<int>();
    std::size_t order = lv.at("components")[0].at("coeffs").size();
    VvmfVector g = (alternate_dim3 && k - lambda == 2)
                       ? build_generator(k, lambda, dim3_generator_alternate_parameters(k), order)
                       : cyclic_generator(k, lambda, order);
    for (const auto& c : lv.at("components")) {
      FixtureComponent fc;
      fc.level = k;
      fc.mu = c.at("mu").get<int>();
      const QExpansion& s = g.component(fc.mu);
      fc.expected_exponent = Rational::parse(c.at("leading_exponent").get<std::string>());
      fc.actual_exponent = s.leading_exponent();
      fc.exponent_match = fc.expected_exponent == fc.actual_exponent;
      for (std::size_t n = 0; n < c.at("coeffs").size(); ++n) {
        fc.expected.push_back(Rational::parse(c.at("coeffs")[n].get<std::string>()));
        fc.actual.push_back(n < s.order() ? s[n] : Rational());
        fc.match.push_back(n < s.order() && fc.expected.back() == s[n]);
      }
      rep.components.push_back(std::move(fc));
    }
  }
  return rep;
}

FixtureReport table_fixture_check(Table which) { return table_fixture_check_with(which, false); }

}  // namespace sl2vvmf
