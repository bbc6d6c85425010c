/*
 * Places of K = F_p(z) and their valuations.
 *
 * A place is a normalized discrete valuation: a finite place, identified
 * with a monic irreducible polynomial pi, or the place at infinity. Its
 * degree (deg pi, resp. 1) is the weight in the sum formula
 * sum_v v(f) deg v = 0, which holds for every nonzero f.
 */
#ifndef CATFF_PLACE_HPP
#define CATFF_PLACE_HPP

#include <vector>

#include "catff/ratfn.hpp"

namespace catff {

class Place {
 public:
  // DomainError unless pi is monic irreducible.
  static Place finite(Poly pi);
  static Place infinity(const Fp& field);

  bool is_infinity() const noexcept { return !pi_.has_value(); }
  // DomainError on the infinite place.
  const Poly& poly() const;
  int degree() const noexcept { return pi_ ? pi_->degree() : 1; }
  const Fp& field() const noexcept { return field_; }

  // Canonical order: finite places in polynomial order, infinity last.
  static int compare(const Place& a, const Place& b);
  friend bool operator<(const Place& a, const Place& b) {
    return compare(a, b) < 0;
  }
  friend bool operator==(const Place& a, const Place& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

  std::string to_string() const;  // "inf" for the infinite place

 private:
  Place(const Fp& field, std::optional<Poly> pi)
      : field_(field), pi_(std::move(pi)) {}

  Fp field_;
  std::optional<Poly> pi_;
};

// Order of vanishing of f at v; negative at poles. At a finite place the
// multiplicity in the numerator minus the one in the denominator, at
// infinity deg(den) - deg(num). DomainError on f = 0.
int valuation(const RatFn& f, const Place& v);

// All places with nonzero valuation, canonically ordered, derived from
// the full factorization of numerator and denominator. DomainError on 0.
std::vector<std::pair<Place, int>> support(const RatFn& f);

// Sigma v(f) deg v over the support; must always be 0. Exposed as a
// self-check of the factorization bookkeeping. DomainError on f = 0.
bool sum_formula_check(const RatFn& f);

}  // namespace catff

#endif
