// ff: exact arithmetic in F_p(z) from the command line.
//
// Subcommands: factor, height, descend, mason. All output is JSON on
// stdout. Exit codes: 0 success, 1 invalid input or capacity limit,
// 2 internal defect.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "catff/json_io.hpp"

namespace {

void emit(const catff::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the rational function field F_p(z)"};
  app.require_subcommand(1);

  std::uint64_t p = 0;
  std::string poly_text, ratfn_text, a_text, b_text;

  CLI::App* cmd_factor =
      app.add_subcommand("factor", "factor a polynomial into monic irreducibles");
  cmd_factor->add_option("--p", p, "prime modulus")->required();
  cmd_factor->add_option("poly", poly_text, "polynomial, e.g. 'z^2+1'")
      ->required();

  CLI::App* cmd_height =
      app.add_subcommand("height", "height and support of a rational function");
  cmd_height->add_option("--p", p, "prime modulus")->required();
  cmd_height->add_option("ratfn", ratfn_text, "rational function, NUM / DEN")
      ->required();

  CLI::App* cmd_descend =
      app.add_subcommand("descend", "maximal Frobenius descent f = gamma^(p^t)");
  cmd_descend->add_option("--p", p, "prime modulus")->required();
  cmd_descend->add_option("ratfn", ratfn_text, "rational function, NUM / DEN")
      ->required();

  CLI::App* cmd_mason = app.add_subcommand(
      "mason", "Mason-Stothers check on A + B = C with C = A + B");
  cmd_mason->add_option("--p", p, "prime modulus")->required();
  cmd_mason->add_option("a", a_text, "polynomial A")->required();
  cmd_mason->add_option("b", b_text, "polynomial B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    catff::Fp fp(p);
    if (*cmd_factor) {
      catff::Poly f = catff::Poly::parse(fp, poly_text);
      catff::Json j = catff::factor(f);
      j["input"] = f;
      emit(j);
    } else if (*cmd_height) {
      emit(catff::height_report(catff::RatFn::parse(fp, ratfn_text)));
    } else if (*cmd_descend) {
      catff::RatFn f = catff::RatFn::parse(fp, ratfn_text);
      catff::Json j = catff::frobenius_descend(f);
      j["input"] = f;
      emit(j);
    } else if (*cmd_mason) {
      catff::Poly a = catff::Poly::parse(fp, a_text);
      catff::Poly b = catff::Poly::parse(fp, b_text);
      catff::Json j = catff::mason_check(a, b, a + b);
      j["a"] = a;
      j["b"] = b;
      j["c"] = a + b;
      emit(j);
    }
  } catch (const catff::InternalError& e) {
    emit({{"error", e.what()}, {"defect", true}});
    return 2;
  } catch (const std::exception& e) {
    emit({{"error", e.what()}});
    return 1;
  }
  return 0;
}
