#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "catff/json_io.hpp"

using namespace catff;

namespace {

struct CliResult {
  std::string output;
  int exit_code;
};

// Runs a command line, capturing stdout; stderr is folded in so error
// paths produce inspectable text.
CliResult run_cli(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {out, code};
}

const std::string kFf = CATFF_FF_BIN;
const std::string kCatalan = CATFF_CATALAN_BIN;

}  // namespace

TEST_CASE("report JSON keeps the contractual field names") {
  Fp f3(3);
  RatFn z = RatFn::variable(f3);
  RatFn b = RatFn::constant(f3, 1) - z;
  auto inst = ProblemInstance::make(f3, z, b, 1, 8, 8);
  auto result = search(inst);
  auto report = certify(inst, result);
  Json j = solve_output(result, report);

  REQUIRE(j.contains("records"));
  REQUIRE(j.contains("tset"));
  REQUIRE(j.contains("report"));
  REQUIRE(j["records"].is_array());
  REQUIRE(!j["records"].empty());

  bool saw_partition = false;
  for (const auto& rec : j["records"]) {
    CHECK(rec.contains("x"));
    CHECK(rec.contains("y"));
    CHECK(rec.contains("m"));
    CHECK(rec.contains("n"));
    CHECK(rec.contains("gamma"));
    CHECK(rec.contains("delta"));
    CHECK(rec.contains("t"));
    CHECK(rec.contains("certified"));
    if (rec.contains("partition")) {
      saw_partition = true;
      const auto& part = rec["partition"];
      REQUIRE(part.contains("set_degree_sums"));
      CHECK(part["set_degree_sums"].is_array());
      CHECK(part["set_degree_sums"].size() == 4);
      const auto& hc = rec["height_check"];
      for (const char* key : {"gamma_zero_bound", "delta_zero_bound",
                              "pole_bound"}) {
        REQUIRE(hc.contains(key));
        CHECK(hc[key].contains("holds"));
        CHECK(hc[key].contains("lhs"));
        CHECK(hc[key].contains("rhs"));
      }
    }
  }
  CHECK(saw_partition);

  const auto& rep = j["report"];
  REQUIRE(rep.contains("pairs"));
  REQUIRE(!rep["pairs"].empty());
  for (const auto& pair : rep["pairs"]) {
    CHECK(pair.contains("coefficient_num"));
    CHECK(pair.contains("coefficient_den"));
    CHECK(pair.contains("bound"));
  }
  CHECK(rep.contains("all_certified"));
  CHECK(rep.contains("stats"));

  for (const auto& entry : j["tset"]) {
    CHECK(entry.contains("gamma"));
    CHECK(entry.contains("delta"));
    CHECK(entry.contains("contributors"));
  }
}

TEST_CASE("mason report JSON uses holds lhs rhs") {
  Fp f5(5);
  Poly z = Poly::variable(f5);
  Poly one = Poly::constant(f5, 1);
  Json j = mason_check(z, one - z, one);
  CHECK(j.contains("holds"));
  CHECK(j.contains("lhs"));
  CHECK(j.contains("rhs"));
  CHECK(j["holds"] == true);
  CHECK(j["lhs"] == 1);
  CHECK(j["rhs"] == 1);
}

TEST_CASE("height report lists the support") {
  Fp f5(5);
  Json j = height_report(RatFn::parse(f5, "(z^2 + 1) / (z^3)"));
  CHECK(j["height"] == 3);
  CHECK(j["sum_formula"] == true);
  REQUIRE(j["support"].is_array());
  CHECK(j["support"].size() == 4);
  CHECK(j["support"][0]["place"] == "z");
  CHECK(j["support"][0]["valuation"] == -3);
  CHECK(j["support"][3]["place"] == "inf");
}

TEST_CASE("ff factor") {
  auto r = run_cli(kFf + " factor --p 5 'z^2+1'");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["input"] == "z^2 + 1");
  CHECK(j["unit"] == 1);
  REQUIRE(j["factors"].size() == 2);
  CHECK(j["factors"][0]["poly"] == "z + 2");
  CHECK(j["factors"][0]["multiplicity"] == 1);
  CHECK(j["factors"][1]["poly"] == "z + 3");
}

TEST_CASE("ff height") {
  auto r = run_cli(kFf + " height --p 5 '(z^2+1)/(z^3)'");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["height"] == 3);
}

TEST_CASE("ff descend") {
  auto r = run_cli(kFf + " descend --p 3 'z^9+1'");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["gamma"] == "z + 1");
  CHECK(j["t"] == 2);
}

TEST_CASE("ff mason") {
  auto ok = run_cli(kFf + " mason --p 5 'z' '1-z'");
  CHECK(ok.exit_code == 0);
  Json j = Json::parse(ok.output);
  CHECK(j["holds"] == true);
  CHECK(j["c"] == "1");

  // Frobenius pair: the Wronskian hypothesis fails, exit 1.
  auto bad = run_cli(kFf + " mason --p 3 'z^9' '1-z^9'");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("ff error paths") {
  CHECK(run_cli(kFf + " factor --p 6 'z'").exit_code == 1);    // not prime
  CHECK(run_cli(kFf + " factor --p 5 'q+1'").exit_code == 1);  // parse error
  CHECK(run_cli(kFf + " factor --p 5 '0'").exit_code == 1);    // zero input
  CHECK(run_cli(kFf + " bogus").exit_code != 0);
  CHECK(run_cli(kFf + " --help").exit_code == 0);
  CHECK(run_cli(kFf + " factor --help").exit_code == 0);
}

TEST_CASE("catalan silverman") {
  auto r = run_cli(kCatalan + " silverman --p 3 --t 2");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["x"] == "z");
  CHECK(j["m"] == 8);
  CHECK(j["t"] == 2);
  CHECK(j["certified"] == true);

  CHECK(run_cli(kCatalan + " silverman --p 3 --t 1").exit_code == 1);
  CHECK(run_cli(kCatalan + " silverman --p 4 --t 2").exit_code == 1);
}

TEST_CASE("catalan solve with oracle") {
  auto r = run_cli(kCatalan +
                   " solve --p 3 --a 'z' --b '1-z' --hmax 1 --mmax 8 --nmax 8"
                   " --oracle");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["report"]["all_certified"] == true);
  CHECK(j["report"]["oracle_match"] == true);
  bool found = false;
  for (const auto& rec : j["records"]) {
    if (rec["x"] == "z" && rec["m"] == 8 && rec["n"] == 8 &&
        rec["y"] == "2*z + 1") {
      found = true;
      CHECK(rec["gamma"] == "z");
      CHECK(rec["t"] == 2);
    }
  }
  CHECK(found);
}

TEST_CASE("catalan solve error paths") {
  CHECK(run_cli(kCatalan + " solve --p 3 --a '0' --b '1' --hmax 1 --mmax 2"
                           " --nmax 2").exit_code == 1);
  // Budget refusal is a capacity error: exit 1.
  auto r = run_cli("CATALAN_FF_BUDGET=10 " + kCatalan +
                   " solve --p 3 --a 'z' --b '1-z' --hmax 1 --mmax 8"
                   " --nmax 8");
  CHECK(r.exit_code == 1);
  auto bad = run_cli("CATALAN_FF_BUDGET=nope " + kCatalan +
                     " solve --p 3 --a 'z' --b '1-z' --hmax 1 --mmax 8"
                     " --nmax 8");
  CHECK(bad.exit_code == 1);
}
