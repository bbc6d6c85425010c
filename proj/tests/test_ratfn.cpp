#include <doctest.h>

#include <random>

#include "catff/errors.hpp"
#include "catff/ratfn.hpp"
#include "testutil.hpp"

using namespace catff;
using testutil::random_nonzero_ratfn;
using testutil::random_ratfn;

TEST_CASE("construction reduces to lowest terms with a monic denominator") {
  Fp f3(3);
  RatFn a(Poly::parse(f3, "2*z + 2"), Poly::constant(f3, 2));
  CHECK(a.num().to_string() == "z + 1");
  CHECK(a.den().is_one());

  RatFn zero(Poly(f3), Poly::variable(f3));
  CHECK(zero.is_zero());
  CHECK(zero.den().is_one());

  Fp f5(5);
  RatFn b(Poly::parse(f5, "z^2 - 1"), Poly::parse(f5, "z - 1"));
  CHECK(b.num().to_string() == "z + 1");
  CHECK(b.den().is_one());

  RatFn c(Poly::parse(f5, "2*z"), Poly::parse(f5, "4*z^2"));
  CHECK(c.num().to_string() == "3");
  CHECK(c.den().to_string() == "z");

  CHECK_THROWS_AS(RatFn(Poly::variable(f5), Poly(f5)), DomainError);
}

TEST_CASE("field axioms hold on random values") {
  std::mt19937_64 rng(4401);
  for (u64 p : {2ull, 3ull, 5ull}) {
    Fp fp(p);
    RatFn one = RatFn::constant(fp, 1);
    for (int i = 0; i < 100; ++i) {
      RatFn f = random_ratfn(rng, fp, 4);
      RatFn g = random_ratfn(rng, fp, 4);
      RatFn h = random_ratfn(rng, fp, 4);
      CHECK(f + g == g + f);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f + g) * h == f * h + g * h);
      CHECK(f - f == RatFn(fp));
      CHECK(f + (-f) == RatFn(fp));
      if (!f.is_zero()) {
        CHECK(f / f == one);
        CHECK(f * f.inverse() == one);
        CHECK(f.inverse().inverse() == f);
      }
      if (!g.is_zero()) CHECK((f / g) * g == f);
    }
    CHECK_THROWS_AS(RatFn(fp).inverse(), DomainError);
  }
}

TEST_CASE("pow handles negative exponents") {
  Fp fp(5);
  RatFn f = RatFn::parse(fp, "(z^2 + 1) / z");
  CHECK(f.pow(0) == RatFn::constant(fp, 1));
  CHECK(f.pow(3) == f * f * f);
  CHECK(f.pow(-2) == (f * f).inverse());
  CHECK_THROWS_AS(RatFn(fp).pow(-1), DomainError);
  CHECK(RatFn(fp).pow(4).is_zero());
}

TEST_CASE("derivative satisfies quotient and Leibniz rules") {
  std::mt19937_64 rng(4402);
  for (u64 p : {2ull, 3ull, 5ull}) {
    Fp fp(p);
    for (int i = 0; i < 100; ++i) {
      RatFn f = random_ratfn(rng, fp, 4);
      RatFn g = random_ratfn(rng, fp, 4);
      CHECK((f * g).derivative() ==
            f.derivative() * g + f * g.derivative());
      CHECK((f + g).derivative() == f.derivative() + g.derivative());
      if (!g.is_zero()) {
        RatFn q = f / g;
        CHECK(q.derivative() ==
              (f.derivative() * g - f * g.derivative()) / (g * g));
      }
    }
  }
}

TEST_CASE("height fixtures and properties") {
  Fp fp(5);
  CHECK(RatFn(fp).height() == 0);
  CHECK(RatFn::constant(fp, 3).height() == 0);
  CHECK(RatFn::variable(fp).height() == 1);
  CHECK(RatFn::parse(fp, "(z^2 + 1) / z").height() == 2);
  CHECK(RatFn::parse(fp, "z / (z^3 + z + 1)").height() == 3);

  std::mt19937_64 rng(4403);
  for (int i = 0; i < 200; ++i) {
    RatFn f = random_nonzero_ratfn(rng, fp, 5);
    CHECK(f.height() == f.inverse().height());
    CHECK((f.height() == 0) == f.is_constant());
  }
}

TEST_CASE("projective height") {
  Fp fp(5);
  RatFn f = RatFn::parse(fp, "(z^2 + 1) / z");
  CHECK(projective_height(RatFn::constant(fp, 1), f) == 2);
  CHECK(projective_height(f, RatFn::constant(fp, 1)) == 2);
  CHECK(projective_height(RatFn(fp), f) == 0);
  CHECK(projective_height(f, RatFn(fp)) == 0);
  CHECK_THROWS_AS(projective_height(RatFn(fp), RatFn(fp)), DomainError);

  std::mt19937_64 rng(4404);
  for (int i = 0; i < 100; ++i) {
    RatFn a = random_nonzero_ratfn(rng, fp, 4);
    RatFn b = random_nonzero_ratfn(rng, fp, 4);
    RatFn c = random_nonzero_ratfn(rng, fp, 2);
    // Scaling both coordinates leaves the projective height unchanged.
    CHECK(projective_height(a, b) == projective_height(c * a, c * b));
    CHECK(projective_height(a, b) == (b / a).height());
  }
}

TEST_CASE("parse and print round-trip") {
  Fp fp(5);
  CHECK(RatFn::parse(fp, "z").to_string() == "z");
  CHECK(RatFn::parse(fp, "(z + 1)").to_string() == "z + 1");
  CHECK(RatFn::parse(fp, "3 / 2").to_string() == "4");
  CHECK(RatFn::parse(fp, "z^2+1 / z").num().to_string() == "z^2 + 1");
  CHECK(RatFn::parse(fp, "(z^2 + 2) / (z + 2)").to_string() ==
        "(z^2 + 2) / (z + 2)");
  CHECK(RatFn::parse(fp, "(z^2-1)/(z-1)").to_string() == "z + 1");
  CHECK(RatFn::parse(fp, "((z))").to_string() == "z");
  CHECK_THROWS_AS(RatFn::parse(fp, "(z"), DomainError);
  CHECK_THROWS_AS(RatFn::parse(fp, "z)"), DomainError);
  CHECK_THROWS_AS(RatFn::parse(fp, "1 / 0"), DomainError);
  CHECK_THROWS_AS(RatFn::parse(fp, "1 / z / z"), DomainError);

  std::mt19937_64 rng(4405);
  for (u64 p : {2ull, 3ull, 11ull}) {
    Fp f(p);
    for (int i = 0; i < 200; ++i) {
      RatFn r = random_ratfn(rng, f, 5);
      CHECK(RatFn::parse(f, r.to_string()) == r);
    }
  }
}

TEST_CASE("comparison orders by height then numerator then denominator") {
  Fp fp(3);
  RatFn c0 = RatFn(fp);
  RatFn c1 = RatFn::constant(fp, 1);
  RatFn z = RatFn::variable(fp);
  RatFn inv_z = z.inverse();
  CHECK(RatFn::compare(c0, c1) < 0);
  CHECK(RatFn::compare(c1, z) < 0);      // height 0 before height 1
  CHECK(RatFn::compare(c1, inv_z) < 0);
  CHECK(RatFn::compare(z, z) == 0);
  // Same height: numerator order decides first.
  RatFn a = RatFn::parse(fp, "1 / z");
  RatFn b = RatFn::parse(fp, "z / (z + 1)");
  CHECK(RatFn::compare(a, b) < 0);
  // Same numerator: denominator order decides.
  RatFn d1 = RatFn::parse(fp, "z / (z + 1)");
  RatFn d2 = RatFn::parse(fp, "z / (z + 2)");
  CHECK(RatFn::compare(d1, d2) < 0);
}
