#include "sl2vvmf/serialize.hpp"

#include "sl2vvmf/errors.hpp"

namespace sl2vvmf {

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (j.is_number_integer()) {
    r = Rational(j.get<long>());
    return;
  }
  if (!j.is_string()) throw InvalidArgument("rational must be a string");
  r = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const QExpansion& q) {
  j = json{{"leading_exponent", q.leading_exponent()}, {"coeffs", q.coeffs()}, {"order", q.order()}};
}

void from_json(const json& j, QExpansion& q) {
  auto coeffs = j.at("coeffs").get<std::vector<Rational>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != coeffs.size())
    throw InvalidArgument("order does not match the coefficient count");
  q = QExpansion(j.at("leading_exponent").get<Rational>(), std::move(coeffs));
}

void to_json(json& j, const VvmfVector& v) {
  json comps = json::array();
  for (const auto& c : v.components) comps.push_back({{"mu", c.mu}, {"series", c.series}});
  j = json{{"level", v.level}, {"lambda", v.weight_label}, {"form_weight", v.form_weight}, {"components", comps}};
}

void to_json(json& j, const MldeResult& m) {
  j = json{{"weight", m.weight}, {"kappa", m.kappa}, {"residuals", m.residuals}, {"all_zero", m.all_zero()}};
}

void to_json(json& j, const FixtureReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"level", c.level},
                     {"mu", c.mu},
                     {"expected_exponent", c.expected_exponent},
                     {"actual_exponent", c.actual_exponent},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"match", c.match},
                     {"pass", c.pass()}});
  }
  j = json{{"table", table_name(r.which)}, {"entries", r.entries()}, {"mismatches", r.mismatches()}, {"components", comps}};
}

void to_json(json& j, const RepSignature& s) {
  j = json{{"level", s.level},
           {"lambda", s.lambda},
           {"dimension", s.dimension},
           {"mu", s.mu},
           {"t_exponents", s.t_exponents},
           {"t_exponents_reduced", s.reduced()},
           {"t_exponent_offsets", [&] {
              std::vector<std::string> o;
              for (const auto& x : s.offsets()) o.push_back(x.get_str());
              return o;
            }()},
           {"multiplier_weight", s.multiplier_weight}};
}

void to_json(json& j, const AdmissibleSet& a) { j = json{{"exponents", a.exponents}}; }

void to_json(json& j, const CongruenceVerdict& v) {
  j = json{{"status", congruence_status_name(v.status)}, {"basis", v.basis}};
  j["congruence_level"] = v.congruence_level ? json(*v.congruence_level) : json(nullptr);
}

void to_json(json& j, const ZQCharacter& c) {
  json rows = json::array();
  for (const auto& row : c.rows) {
    json r = json::array();
    for (auto it = row.rbegin(); it != row.rend(); ++it) r.push_back(json::array({it->first, it->second}));
    rows.push_back(r);
  }
  j = json{{"qorder", c.qorder}, {"rows", rows}};
}

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

void to_json(json& j, const GenModularPair& p) {
  j = json{{"level", p.level},
           {"p", p.p_label},
           {"basis", p.basis},
           {"s_matrix", matrix_json(p.s_matrix)},
           {"t_matrix", matrix_json(p.t_matrix)},
           {"residuals", {{"braid", p.braid_residual}, {"twist", p.twist_residual}}}};
}

void to_json(json& j, const AnalyticComparison& a) {
  j = json{{"level", a.level},
           {"lambda", a.lambda},
           {"basis", a.basis},
           {"t_residuals", a.t_residuals},
           {"t_match", a.t_match},
           {"s_over_multiplier", matrix_json(a.s_over_multiplier)}};
  if (a.s_phase) {
    j["s_phase"] = *a.s_phase;
    j["phase_minus_3k_over_16"] = *a.three_k_over_sixteen;
    j["phase_minus_3k_over_32"] = *a.three_k_over_thirty_two;
  }
}

}  // namespace sl2vvmf
