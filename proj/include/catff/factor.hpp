/*
 * Factorization into monic irreducibles over F_p.
 *
 * Pipeline: characteristic-p squarefree split (recursing through p-th
 * roots when the derivative vanishes), distinct-degree split by Frobenius
 * powering, then equal-degree split. Equal-degree splitting is randomized
 * (Cantor-Zassenhaus, explicit seed) with a deterministic fallback that
 * trial-divides by enumerated monic polynomials whenever p^d is below a
 * configurable threshold. Factors come out in canonical order (degree,
 * then coefficient order), so the result is seed-independent.
 */
#ifndef CATFF_FACTOR_HPP
#define CATFF_FACTOR_HPP

#include <utility>
#include <vector>

#include "catff/poly.hpp"

namespace catff {

struct FactorOptions {
  u64 seed = 0;
  // equal-degree split enumerates candidates instead of randomizing
  // when p^d does not exceed this
  u64 small_field_threshold = 4096;
};

struct Factorization {
  Fp field;
  u32 unit;  // nonzero
  // (monic irreducible, multiplicity >= 1), pairwise distinct, canonical order
  std::vector<std::pair<Poly, u32>> factors;

  Poly reconstruct() const;
};

// Complete factorization; DomainError on zero.
Factorization factor(const Poly& f, const FactorOptions& opts = {});

// Rabin's test. DomainError on constant input.
bool is_irreducible(const Poly& f);

}  // namespace catff

#endif
