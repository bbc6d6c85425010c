/*
 * Frobenius descent and radical-power structure of K*.
 *
 * Over K = F_p(z) with constants F_p, a reduced fraction is a p-th power
 * exactly when numerator and denominator both are (the reduced monic-
 * denominator form is unique), and p-th roots are coefficientwise since
 * Frobenius fixes F_p. frobenius_descend strips p-th roots maximally,
 * returning the (gamma, t) with input = gamma^(p^t) and gamma outside
 * K^p; nonzero constants are Frobenius fixed points and return t = 0.
 *
 * m-th roots with gcd(m, p) = 1 are read off a factorization: every
 * multiplicity must be divisible by m and the residual unit must be an
 * m-th power in F_p*. All m-th roots of unity of K are constants, so the
 * full root set is the unit's root set times one fixed radical part.
 */
#ifndef CATFF_DESCENT_HPP
#define CATFF_DESCENT_HPP

#include <optional>
#include <vector>

#include "catff/factor.hpp"
#include "catff/ratfn.hpp"

namespace catff {

struct DescentResult {
  RatFn gamma;
  u32 t;
};

// True iff numerator and denominator both admit p-th roots.
// DomainError on zero.
bool is_pth_power(const RatFn& f);

// The unique (gamma, t) with f = gamma^(p^t) and gamma not a p-th power;
// (f, 0) for nonzero constants. DomainError on zero.
DescentResult frobenius_descend(const RatFn& f);

// Factorization of a nonzero f with signed multiplicities: positive for
// numerator factors, negative for denominator factors. unit is the
// leading coefficient of the numerator.
struct FactoredRatFn {
  Fp field;
  u32 unit;
  std::vector<std::pair<Poly, int>> factors;
};

// DomainError on zero.
FactoredRatFn factor_ratfn(const RatFn& f, const FactorOptions& opts = {});

// g with g^m = f, normalized by the smallest m-th root of the unit, or
// nullopt. DomainError when f = 0 or gcd(m, p) != 1 or m = 0.
std::optional<RatFn> mth_power_root(const RatFn& f, u64 m);
std::optional<RatFn> mth_power_root(const FactoredRatFn& f, u64 m);

// Every g with g^m = f, in canonical order; empty when none exists.
std::vector<RatFn> all_mth_power_roots(const RatFn& f, u64 m);
std::vector<RatFn> all_mth_power_roots(const FactoredRatFn& f, u64 m);

}  // namespace catff

#endif
