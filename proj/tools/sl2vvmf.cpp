#include <CLI11.hpp>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sl2vvmf/bgg.hpp"
#include "sl2vvmf/errors.hpp"
#include "sl2vvmf/generators.hpp"
#include "sl2vvmf/modular.hpp"
#include "sl2vvmf/mtc.hpp"
#include "sl2vvmf/rep_analysis.hpp"
#include "sl2vvmf/serialize.hpp"
#include "sl2vvmf/verify.hpp"

using namespace sl2vvmf;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kUnsupported = 3 };

struct Options {
  int level = -1;
  int lambda = -1;
  int p = 0;
  std::string format = "table";
  std::string suite = "all";
  std::string table = "table1";
  std::string eisenstein_weight, eta_exponent;
  bool jinv = false;
  RunConfig cfg;
};

std::string series_text(const QExpansion& s) {
  std::ostringstream o;
  o << "q^(" << s.leading_exponent() << ") * (";
  bool first = true;
  for (std::size_t n = 0; n < s.order(); ++n) {
    const Rational& c = s[n];
    if (c.is_zero()) continue;
    Rational a = abs(c);
    if (first)
      o << (c.sign() < 0 ? "-" : "");
    else
      o << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (n == 0 || a != 1) o << a;
    if (n > 0) o << (a != 1 ? " " : "") << "q" << (n > 1 ? "^" + std::to_string(n) : "");
  }
  if (first) o << "0";
  o << " + O(q^" << s.order() << "))";
  return o.str();
}

std::string cplx_text(const cplx& z) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return o.str();
}

void print_matrix(const Eigen::MatrixXcd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::cout << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) std::cout << std::setw(26) << cplx_text(m(i, j));
    std::cout << "\n";
  }
}

bool json_out(const Options& o) { return o.format == "json"; }

int cmd_expand(const Options& o) {
  VvmfVector v = cyclic_generator(o.level, o.lambda, o.cfg.order);
  if (json_out(o)) {
    std::cout << json(v).dump(2) << "\n";
    return kOk;
  }
  std::cout << "level " << v.level << ", lambda " << v.weight_label << ", weight " << v.form_weight << "\n";
  for (const auto& c : v.components) std::cout << "mu=" << c.mu << ": " << series_text(c.series) << "\n";
  return kOk;
}

int cmd_classify(const Options& o) {
  RepSignature sig = rho_t(o.level, o.lambda);
  json j;
  j["signature"] = sig;
  j["leading_exponents"] = leading_exponents(o.level, o.lambda);
  j["t_order"] = t_order(o.level, o.lambda);
  if (sig.dimension <= 20)
    j["irreducibility"] = irreducibility_name(irreducibility_subproduct_test(sig));
  else
    j["irreducibility"] = "not tested (dimension above 20)";
  CongruenceVerdict v = congruence_classify(o.level, o.lambda);
  j["congruence"] = v;
  if (v.status == CongruenceStatus::undetermined && v.basis == "rule-prime-power-needs-irreducibility")
    j["note"] = "irreducibility can be probed categorically: mtc --level " + std::to_string(o.level) + " --p " +
                std::to_string(o.lambda);
  j["holomorphic"] = is_holomorphic(o.level, o.lambda);
  if (sig.dimension <= 3) j["holomorphy"] = holomorphy_name(holomorphy_classify(o.level, o.lambda));
  j["saturation"] = saturation_check(o.level, o.lambda);
  if (json_out(o)) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "dimension        " << sig.dimension << "\n";
  std::cout << "exponents        ";
  for (const auto& e : j["leading_exponents"]) std::cout << e.get<std::string>() << " ";
  std::cout << "\nrho(T) exponents ";
  for (const auto& e : sig.t_exponents) std::cout << e << " ";
  std::cout << "\nmultiplier h     " << sig.multiplier_weight << "\n";
  std::cout << "t_order          " << j["t_order"] << "\n";
  std::cout << "irreducibility   " << j["irreducibility"].get<std::string>() << "\n";
  std::cout << "congruence       " << congruence_status_name(v.status);
  if (v.congruence_level) std::cout << " (level " << *v.congruence_level << ")";
  std::cout << " [" << v.basis << "]\n";
  if (j.contains("note")) std::cout << "note             " << j["note"].get<std::string>() << "\n";
  std::cout << "holomorphy       "
            << (j.contains("holomorphy") ? j["holomorphy"].get<std::string>()
                                         : std::string(j["holomorphic"].get<bool>() ? "holomorphic" : "weakly_only"))
            << "\n";
  std::cout << "saturation       " << (j["saturation"].get<bool>() ? "true" : "false") << "\n";
  return kOk;
}

int cmd_mtc(const Options& o) {
  MtcLevelData data = f_r_g_matrices(o.level, o.cfg.max_level);
  GenModularPair pair = gen_modular_pair(data, o.p, o.cfg.tolerance);
  Irreducibility probe = irreducibility_probe(pair, conformal_weight(o.level, o.p), o.cfg.tolerance);
  AnalyticComparison cmp = compare_with_analytic(data, o.p, o.cfg.tolerance);
  if (json_out(o)) {
    json j{{"pair", pair}, {"irreducibility", irreducibility_name(probe)}, {"analytic", cmp}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "level " << o.level << ", p " << o.p << ", basis";
  for (int i : pair.basis) std::cout << " " << i;
  std::cout << "\nS^(p):\n";
  print_matrix(pair.s_matrix);
  std::cout << "T^(p) diagonal:\n";
  print_matrix(pair.t_matrix.diagonal().transpose());
  std::cout << "relation residuals: braid " << pair.braid_residual << ", twist " << pair.twist_residual << "\n";
  std::cout << "irreducibility probe: " << irreducibility_name(probe) << "\n";
  std::cout << "T / nu(T) matches rho_t: " << (cmp.t_match ? "yes" : "no") << "\n";
  if (cmp.s_phase)
    std::cout << "S phase " << *cmp.s_phase << ", e(-3k/16) phase " << *cmp.three_k_over_sixteen << ", e(-3k/32) phase "
              << *cmp.three_k_over_thirty_two << "\n";
  return kOk;
}

int cmd_character(const Options& o) {
  ZQCharacter ch = simple_character(o.level, o.lambda, o.cfg.order);
  if (json_out(o)) {
    std::cout << json(ch).dump(2) << "\n";
    return kOk;
  }
  for (std::size_t n = 0; n < ch.rows.size(); ++n) {
    std::cout << "q^" << n << ":";
    for (auto it = ch.rows[n].rbegin(); it != ch.rows[n].rend(); ++it) std::cout << " " << it->second << "*z^" << it->first;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_fusion(const Options& o) {
  json rules = json::array();
  for (int a = 0; a <= o.level; ++a)
    for (int b = a; b <= o.level; ++b)
      for (int c = b; c <= o.level; ++c)
        if (fusion_coefficient(o.level, a, b, c)) rules.push_back({a, b, c});
  if (json_out(o)) {
    std::cout << json{{"level", o.level}, {"admissible_triples", rules}}.dump(2) << "\n";
    return kOk;
  }
  for (const auto& t : rules) std::cout << "N(" << t[0] << "," << t[1] << "," << t[2] << ") = 1\n";
  return kOk;
}

int cmd_series(const Options& o) {
  QExpansion s;
  if (!o.eisenstein_weight.empty())
    s = eisenstein(std::stoi(o.eisenstein_weight), o.cfg.order);
  else if (!o.eta_exponent.empty())
    s = eta_power(Rational::parse(o.eta_exponent), o.cfg.order);
  else if (o.jinv)
    s = j_inverse(o.cfg.order);
  else
    throw InvalidArgument("choose one of --eisenstein, --eta, --jinv");
  if (json_out(o))
    std::cout << json(s).dump(2) << "\n";
  else
    std::cout << series_text(s) << "\n";
  return kOk;
}

int cmd_mlde(const Options& o) {
  MldeResult m = mlde_residual(o.level, o.lambda, o.cfg.order);
  if (json_out(o)) {
    std::cout << json(m).dump(2) << "\n";
  } else {
    std::cout << "weight " << m.weight << ", kappa";
    for (const auto& k : m.kappa) std::cout << " " << k;
    std::cout << "\nresiduals vanish through order " << (m.residuals.empty() ? 0 : m.residuals[0].order()) << ": "
              << (m.all_zero() ? "yes" : "no") << "\n";
  }
  return m.all_zero() ? kOk : kVerifyFailed;
}

int cmd_tables(const Options& o) {
  if (o.table != "table1" && o.table != "table2") throw InvalidArgument("table must be table1 or table2");
  FixtureReport r = table_fixture_check(o.table == "table1" ? Table::table1 : Table::table2);
  if (json_out(o)) {
    std::cout << json(r).dump(2) << "\n";
  } else {
    for (const auto& c : r.components) {
      std::cout << "k=" << c.level << " mu=" << c.mu << ": " << (c.pass() ? "match" : "MISMATCH") << "\n";
      if (!c.pass())
        for (std::size_t n = 0; n < c.match.size(); ++n)
          if (!c.match[n]) std::cout << "    q^" << n << " expected " << c.expected[n] << " got " << c.actual[n] << "\n";
    }
    std::cout << r.mismatches() << " mismatches in " << r.entries() << " coefficients\n";
  }
  return r.all_pass() ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& o) {
  auto suite = parse_suite(o.suite);
  if (!suite) throw InvalidArgument("unknown suite " + o.suite);
  SuiteReport rep = run_suite(*suite, o.cfg);
  if (json_out(o)) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    std::cout << json{{"suite", o.suite}, {"pass", rep.pass()}, {"failures", rep.failures()}, {"checks", checks}}.dump(2)
              << "\n";
  } else {
    for (const auto& c : rep.checks)
      if (!c.pass) std::cout << "FAIL " << c.suite << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    std::cout << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed\n";
  }
  return rep.pass() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus 1-point function toolkit for affine sl(2)"};
  app.require_subcommand(1);
  Options o;

  auto level = [&](CLI::App* s) { s->add_option("-k,--level", o.level, "level k")->required()->check(CLI::NonNegativeNumber); };
  auto lambda = [&](CLI::App* s) { s->add_option("-l,--lambda", o.lambda, "highest weight label")->required(); };
  auto order = [&](CLI::App* s) { s->add_option("-n,--order", o.cfg.order, "truncation order")->check(CLI::PositiveNumber); };
  auto format = [&](CLI::App* s) { s->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"})); };
  auto tolerance = [&](CLI::App* s) { s->add_option("--tolerance", o.cfg.tolerance)->check(CLI::PositiveNumber); };
  auto max_level = [&](CLI::App* s) { s->add_option("--max-level", o.cfg.max_level)->check(CLI::NonNegativeNumber); };

  std::function<int(const Options&)> run;
  auto sub = [&](const char* name, const char* help, std::function<int(const Options&)> f) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&run, f] { run = f; });
    format(s);
    return s;
  };

  auto* expand = sub("expand", "cyclic generator q-expansions", cmd_expand);
  level(expand), lambda(expand), order(expand);
  auto* classify = sub("classify", "representation data and verdicts", cmd_classify);
  level(classify), lambda(classify);
  auto* mtc = sub("mtc", "categorical S^(p), T^(p) and checks", cmd_mtc);
  level(mtc), tolerance(mtc), max_level(mtc);
  mtc->add_option("--p", o.p, "even label p")->check(CLI::NonNegativeNumber);
  auto* character = sub("character", "character of L(k, lambda)", cmd_character);
  level(character), lambda(character), order(character);
  auto* fusion = sub("fusion", "admissible fusion triples", cmd_fusion);
  level(fusion);
  auto* series = sub("series", "Eisenstein series, eta powers, 1/J", cmd_series);
  order(series);
  series->add_option("--eisenstein", o.eisenstein_weight, "weight");
  series->add_option("--eta", o.eta_exponent, "rational exponent r of eta^r");
  series->add_flag("--jinv", o.jinv, "1728/j");
  auto* mlde = sub("mlde", "residuals of the monic differential equation", cmd_mlde);
  level(mlde), lambda(mlde), order(mlde);
  auto* tables = sub("tables", "compare generators with the stored tables", cmd_tables);
  tables->add_option("--table", o.table)->check(CLI::IsMember({"table1", "table2"}));
  auto* verify = sub("verify", "run a verification suite", cmd_verify);
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"tables", "mlde", "bgg", "mtc", "dims", "all"}));
  tolerance(verify), max_level(verify), order(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }
  try {
    return run(o);
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::logic_error& e) {
    // stoi and friends
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const RelationViolation& e) {
    std::cerr << "relation violation: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
