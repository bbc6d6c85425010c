// catalan: bounded-height solving and certification of a x^m + b y^n = 1
// over F_p(z).
//
// Subcommands: solve, silverman. All output is JSON on stdout. Exit
// codes: 0 everything certified, 1 invalid input or capacity limit,
// 2 certification failure (a defect in the toolkit, not in the input).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "catff/json_io.hpp"

namespace {

void emit(const catff::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"the generalized Catalan equation a x^m + b y^n = 1 over F_p(z)"};
  app.require_subcommand(1);

  std::uint64_t p = 0;
  std::string a_text, b_text;
  int hmax = 0;
  std::uint64_t mmax = 0, nmax = 0, seed = 0, budget = 0;
  bool oracle = false;
  std::uint32_t t = 0;

  CLI::App* cmd_solve = app.add_subcommand(
      "solve", "exhaustive bounded-height search plus full certification");
  cmd_solve->add_option("--p", p, "prime modulus")->required();
  cmd_solve->add_option("--a", a_text, "coefficient a, NUM / DEN")->required();
  cmd_solve->add_option("--b", b_text, "coefficient b, NUM / DEN")->required();
  cmd_solve->add_option("--hmax", hmax, "height cap for x and y")->required();
  cmd_solve->add_option("--mmax", mmax, "exponent cap for m")->required();
  cmd_solve->add_option("--nmax", nmax, "exponent cap for n")->required();
  cmd_solve->add_option("--seed", seed, "seed for randomized factor steps");
  cmd_solve->add_option("--budget", budget,
                        "enumeration budget (overrides CATALAN_FF_BUDGET)");
  cmd_solve->add_flag("--oracle", oracle,
                      "cross-validate against the blind quadratic oracle");

  CLI::App* cmd_silverman = app.add_subcommand(
      "silverman", "the counterexample family z^(p^t) + (1-z)^(p^t) = 1");
  cmd_silverman->add_option("--p", p, "prime modulus")->required();
  cmd_silverman->add_option("--t", t, "Frobenius power")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    catff::Fp fp(p);
    if (*cmd_silverman) {
      catff::SolutionRecord rec = catff::silverman_family(fp, t);
      emit(catff::Json(rec));
      return rec.certified ? 0 : 2;
    }

    catff::SearchOptions opts;
    opts.seed = seed;
    if (budget != 0) opts.budget.max_candidate_pairs = budget;

    catff::ProblemInstance inst = catff::ProblemInstance::make(
        fp, catff::RatFn::parse(fp, a_text), catff::RatFn::parse(fp, b_text),
        hmax, mmax, nmax);
    catff::SearchResult result = catff::search(inst, opts);
    catff::CertificationReport report = catff::certify(inst, result);

    bool ok = report.all_certified;
    catff::Json j = catff::solve_output(result, report);
    if (oracle) {
      catff::SearchResult blind = catff::blind_search(inst, opts);
      bool match = catff::oracle_agrees(inst, result, blind);
      j["report"]["oracle_match"] = match;
      ok = ok && match;
    }
    emit(j);
    return ok ? 0 : 2;
  } catch (const catff::InternalError& e) {
    emit({{"error", e.what()}, {"defect", true}});
    return 2;
  } catch (const std::exception& e) {
    emit({{"error", e.what()}});
    return 1;
  }
}
