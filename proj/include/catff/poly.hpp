/*
 * Dense univariate polynomials over F_p.
 *
 * Coefficients are stored ascending by exponent; the top coefficient is
 * nonzero unless the polynomial is zero (empty vector). Values are
 * immutable after construction and carry their Fp context. The dense
 * coefficient loops run through the kernels module.
 *
 * Canonical order (used for factor sorting, enumeration and every
 * deterministic output): by degree, then coefficients compared from the
 * leading one down; equivalently the numeric order of the base-p digit
 * string. The zero polynomial sorts first.
 */
#ifndef CATFF_POLY_HPP
#define CATFF_POLY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catff/fp.hpp"

namespace catff {

class Poly {
 public:
  // zero polynomial
  explicit Poly(const Fp& field) : field_(field) {}

  // Coefficients ascending by exponent; reduced mod p and normalized.
  static Poly from_coeffs(const Fp& field, std::vector<u32> coeffs);
  static Poly constant(const Fp& field, u32 c);
  static Poly variable(const Fp& field);  // z
  static Poly monomial(const Fp& field, u32 coeff, std::size_t exp);

  const Fp& field() const noexcept { return field_; }

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
  }
  bool is_monic() const noexcept {
    return !coeffs_.empty() && coeffs_.back() == 1;
  }

  u32 coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  u32 lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const u32> coeffs() const noexcept { return coeffs_; }

  Poly monic() const;  // divide by the leading coefficient; zero stays zero

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);

  // (quotient, remainder); DomainError on zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) {
    return divmod(a, b).first;
  }
  friend Poly operator%(const Poly& a, const Poly& b) {
    return divmod(a, b).second;
  }

  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  Poly pow(u64 e) const;

  Poly derivative() const;

  // Evaluation at a field element (Horner).
  u32 eval(u32 x) const;

  // g with g^p = *this, or nullopt. Exists iff every exponent with a
  // nonzero coefficient is divisible by p (coefficients are Frobenius
  // fixed points).
  std::optional<Poly> pth_root() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical order; negative/zero/positive like strcmp.
  static int compare(const Poly& a, const Poly& b);
  friend bool operator<(const Poly& a, const Poly& b) {
    return compare(a, b) < 0;
  }

  // Text grammar shared with the CLI: terms `c*z^e`, `z^e`, `c`, `z`
  // joined by +/-, whitespace ignored, coefficients reduced mod p.
  // Printing is canonical: descending exponents, no zero terms, no `1*`.
  std::string to_string() const;
  static Poly parse(const Fp& field, std::string_view text);

 private:
  Fp field_;
  std::vector<u32> coeffs_;

  void normalize();
};

// base^e mod m, binary exponentiation. DomainError if m is constant.
Poly powmod(const Poly& base, u64 e, const Poly& m);

// Monic product of the distinct monic irreducible factors (the radical).
// When the derivative vanishes the input is a p-th power and the
// computation recurses through pth_root. DomainError on zero.
Poly squarefree_part(const Poly& f);

}  // namespace catff

#endif
