/*
 * The prime field F_p.
 *
 * Fp is a tiny validated context (just the modulus) that every value in
 * the toolkit carries along; all arithmetic is exact on u32 residues with
 * u64 intermediates, hence the p <= 2^31 bound checked at construction.
 * The constants field is fixed to the prime field itself, so Frobenius is
 * the identity on coefficients (c^p = c); the polynomial layer relies on
 * that for coefficientwise p-th roots.
 */
#ifndef CATFF_FP_HPP
#define CATFF_FP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "catff/errors.hpp"

namespace catff {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

class Fp {
 public:
  // Verifies primality by trial division and the 2^31 bound.
  explicit Fp(u64 p);

  u32 p() const noexcept { return p_; }

  u32 reduce(u64 v) const { return static_cast<u32>(v % p_); }
  u32 reduce_signed(i64 v) const;

  u32 add(u32 a, u32 b) const {
    u32 t = a + b;
    return t >= p_ ? t - p_ : t;
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
  u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
  u32 mul(u32 a, u32 b) const {
    return static_cast<u32>(static_cast<u64>(a) * b % p_);
  }

  // DomainError on zero.
  u32 inv(u32 a) const;

  u32 pow(u32 base, u64 e) const;
  // Negative exponents invert; DomainError on 0^e with e < 0.
  u32 pow_signed(u32 base, i64 e) const;

  // True iff some d in F_p* has d^m = c. Computed as c^((p-1)/g) == 1
  // with g = gcd(m, p-1). DomainError on c == 0.
  bool is_mth_power(u32 c, u64 m) const;

  // Smallest residue d with d^m = c, or nullopt. DomainError on c == 0.
  std::optional<u32> mth_root(u32 c, u64 m) const;

  // All d with d^m = c, ascending. Empty when c is not an m-th power.
  std::vector<u32> all_mth_roots(u32 c, u64 m) const;

  // All d with d^m = 1, ascending.
  std::vector<u32> roots_of_unity(u64 m) const { return all_mth_roots(1, m); }

  // Smallest generator of the cyclic group F_p*.
  u32 generator() const;

  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.p_ != b.p_; }

  // Throws DomainError unless both contexts share the same modulus.
  void require_same(const Fp& other) const;

 private:
  u32 p_;

  // Discrete log base generator(); nullopt never happens for c != 0.
  u64 discrete_log(u32 c) const;
};

}  // namespace catff

#endif
