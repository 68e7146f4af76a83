#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SL2VVMF_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("expand") {
  auto r = run("expand --level 3 --lambda 2 --order 5 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["components"][0]["series"]["coeffs"] == nlohmann::json::parse(R"(["1","1/5","-117/25","-84/125","3659/625"])"));
  CHECK(j["components"][1]["series"]["leading_exponent"] == "13/40");

  auto eta = run("expand --level 2 --lambda 2 --order 4");
  CHECK(eta.code == 0);
  CHECK(eta.out.find("q^(1/8)") != std::string::npos);

  CHECK(run("expand --level 4 --lambda 0").code == 3);
  CHECK(run("expand --level 4 --lambda 3").code == 2);
  CHECK(run("expand --level 4").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("classify") {
  auto r = run("classify --level 5 --lambda 4 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["signature"]["dimension"] == 2);
  CHECK(j["congruence"]["congruence_level"] == 8);

  j = nlohmann::json::parse(run("classify --level 4 --lambda 2 --format json").out);
  CHECK(j["signature"]["dimension"] == 3);
  CHECK(j["t_order"] == 72);
  CHECK(j["irreducibility"] == "irreducible");

  j = nlohmann::json::parse(run("classify --level 5 --lambda 2 --format json").out);
  CHECK(j["signature"]["dimension"] == 4);
  CHECK(j["congruence"]["status"] == "undetermined");
  CHECK(j["note"].get<std::string>().find("mtc") != std::string::npos);

  CHECK(run("classify --level 5 --lambda 3").code == 2);
}

TEST_CASE("mtc") {
  auto r = run("mtc --level 5 --p 2 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["irreducibility"] == "irreducible");
  CHECK(j["pair"]["s_matrix"].size() == 4);
  CHECK(run("mtc --level 60 --p 0").code == 3);
  CHECK(run("mtc --level 4 --p 1").code == 2);
}

TEST_CASE("series and helpers") {
  auto r = run("series --eisenstein 4 --order 3 --format json");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["coeffs"] == nlohmann::json::parse(R"(["1/720","1/3","3"])"));
  CHECK(run("series --eta 1/2 --order 3").code == 0);
  CHECK(run("series --jinv --order 2").out.find("1728") != std::string::npos);
  CHECK(run("series --eisenstein x").code == 2);
  CHECK(run("series --eisenstein 3").code == 2);
  CHECK(run("series --order 3").code == 2);
  CHECK(run("fusion --level 2").code == 0);
  CHECK(run("character --level 2 --lambda 2 --order 2").code == 0);
  CHECK(run("mlde --level 4 --lambda 2 --order 8").code == 0);
}

TEST_CASE("verify and tables") {
  CHECK(run("verify --suite mtc --max-level 10").code == 0);
  CHECK(run("verify --suite dims").code == 0);
  CHECK(run("tables --table table1").code == 0);
  // the printed dimension-3 rows are not reproduced by the annihilated generator
  auto t2 = run("tables --table table2 --format json");
  CHECK(t2.code == 1);
  CHECK(nlohmann::json::parse(t2.out)["mismatches"] == 32);
  CHECK(run("verify --suite bogus").code == 2);
}
