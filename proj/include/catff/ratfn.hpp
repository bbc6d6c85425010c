/*
 * The rational function field K = F_p(z).
 *
 * A RatFn is always held in canonical reduced form: gcd(num, den) = 1,
 * den monic and nonzero, zero represented as 0/1. Equality is structural
 * equality of that form. The canonical order used for every deterministic
 * output is (height, numerator, denominator) with the polynomial order
 * breaking ties.
 *
 * Text format: `NUM / DEN` with each side in the polynomial grammar,
 * parentheses allowed, `/DEN` optional. Canonical printing emits the
 * reduced form, as `NUM` when the denominator is 1 and `(NUM) / (DEN)`
 * otherwise.
 */
#ifndef CATFF_RATFN_HPP
#define CATFF_RATFN_HPP

#include <algorithm>
#include <string>
#include <string_view>

#include "catff/poly.hpp"

namespace catff {

class RatFn {
 public:
  // zero
  explicit RatFn(const Fp& field) : num_(field), den_(Poly::constant(field, 1)) {}
  explicit RatFn(Poly num) : RatFn(num, Poly::constant(num.field(), 1)) {}
  // Reduced on construction; DomainError on a zero denominator.
  RatFn(Poly num, Poly den);

  static RatFn constant(const Fp& field, u32 c) {
    return RatFn(Poly::constant(field, c));
  }
  static RatFn variable(const Fp& field) {
    return RatFn(Poly::variable(field));
  }

  const Fp& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  // lies in F_p (zero included)
  bool is_constant() const noexcept {
    return num_.is_constant() && den_.is_one();
  }

  // max(deg num, deg den); 0 on constants by convention
  int height() const noexcept {
    return std::max(num_.degree(), den_.degree());
  }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  // DomainError on a zero divisor.
  friend RatFn operator/(const RatFn& a, const RatFn& b);

  // DomainError on zero.
  RatFn inverse() const;

  // Negative exponents invert; DomainError on 0^e with e < 0.
  RatFn pow(i64 e) const;

  // quotient rule
  RatFn derivative() const;

  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  // Canonical order; negative/zero/positive like strcmp.
  static int compare(const RatFn& a, const RatFn& b);
  friend bool operator<(const RatFn& a, const RatFn& b) {
    return compare(a, b) < 0;
  }

  std::string to_string() const;
  static RatFn parse(const Fp& field, std::string_view text);

 private:
  struct reduced_tag {};
  RatFn(Poly num, Poly den, reduced_tag)
      : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

// Height of the projective point (f : g); projective_height(1, f) equals
// height(f). DomainError when both coordinates are zero.
int projective_height(const RatFn& f, const RatFn& g);

}  // namespace catff

#endif
