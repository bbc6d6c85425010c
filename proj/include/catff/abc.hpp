/*
 * The characteristic-p ABC machinery.
 *
 * Everything a certified solution of a x^m + b y^n = 1 is checked
 * against lives here: the Wronskian test for independence over the
 * subfield K^p of p-th powers, the Mason-Stothers inequality for
 * polynomials (which needs that independence as a hypothesis -- it fails
 * on Frobenius powers), the partition of places into coefficient support
 * / gamma zeros / delta zeros / common poles with its height
 * inequalities, exponent admissibility, and the explicit height bound
 * on descended solution pairs.
 *
 * All arithmetic is exact; rationals are normalized i64 fractions.
 */
#ifndef CATFF_ABC_HPP
#define CATFF_ABC_HPP

#include <array>
#include <vector>

#include "catff/place.hpp"
#include "catff/ratfn.hpp"

namespace catff {

// Exact fraction, gcd-normalized, positive denominator.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  static Rational make(i64 num, i64 den);  // DomainError on den = 0

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
};

// Exponent pairs (m, n) the certification machinery accepts: both > 1,
// both coprime to p, and outside the genus <= 1 exclusion list below.
inline constexpr std::array<std::pair<u64, u64>, 6> kExcludedExponentPairs{{
    {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}}};

// The field-free part of the admissibility test (used by exhaustive
// exponent scans): m, n > 1 and not excluded.
bool exponent_pair_allowed(u64 m, u64 n);

struct ExponentPair {
  u64 m;
  u64 n;

  // Validates admissibility; DomainError naming the violated condition.
  static ExponentPair make(u64 m, u64 n, const Fp& field);

  u64 lcm() const;
};

// gamma * delta' - gamma' * delta. Nonzero certifies that gamma and
// delta are linearly independent over K^p.
RatFn wronskian(const RatFn& gamma, const RatFn& delta);

bool independent_over_kp(const RatFn& gamma, const RatFn& delta);

struct MasonReport {
  bool holds;
  int max_deg;  // max(deg A, deg B, deg C)
  int rad_deg;  // deg of the radical of A*B*C
};

// Checks max(deg A, deg B, deg C) <= deg rad(A*B*C) - 1 for coprime
// A + B = C with nonvanishing Wronskian. DomainError (naming the failed
// hypothesis) when the sum, nonvanishing, pairwise coprimality or
// Wronskian condition does not hold.
MasonReport mason_check(const Poly& a, const Poly& b, const Poly& c);

// Partition of every place in the union of the supports of a, b, gamma,
// delta (gamma + delta = 1):
//   coeff_support  v(a) != 0 or v(b) != 0
//   gamma_zeros    off the coefficient support, v(gamma) > 0
//   delta_zeros    off the coefficient support, v(delta) > 0
//   common_poles   off the coefficient support, v(gamma) = v(delta) < 0
// Any other place has v(gamma) = v(delta) = 0. The defining sign facts
// (a zero of gamma forces v(delta) = 0, a pole is shared with equal
// valuation) are verified during construction; violations are defects
// and raise InternalError.
struct PlacePartition {
  std::vector<Place> coeff_support;
  std::vector<Place> gamma_zeros;
  std::vector<Place> delta_zeros;
  std::vector<Place> common_poles;

  i64 coeff_deg_sum = 0;
  i64 gamma_zero_deg_sum = 0;
  i64 delta_zero_deg_sum = 0;
  i64 pole_deg_sum = 0;
};

// DomainError when an input is zero or gamma + delta != 1.
PlacePartition place_partition(const RatFn& a, const RatFn& b,
                               const RatFn& gamma, const RatFn& delta);

struct InequalityReport {
  bool holds;
  i64 lhs;
  i64 rhs;
};

// The three height inequalities a descended solution must satisfy:
// h(gamma) >= m * (gamma-zero degree sum), >= n * (delta-zero degree
// sum), >= lcm(m, n) * (pole degree sum).
struct PartitionHeightReport {
  InequalityReport gamma_zero_bound;
  InequalityReport delta_zero_bound;
  InequalityReport pole_bound;
  bool holds;
};

// DomainError when height(gamma) != height(delta) (corrupted input; the
// two components of a descended solution always have equal height).
PartitionHeightReport partition_height_check(const PlacePartition& partition,
                                             const RatFn& gamma,
                                             const RatFn& delta,
                                             const ExponentPair& pair);

// True iff m divides v(gamma) at every place outside the coefficient
// support.
bool exponent_divides_valuations(const RatFn& gamma, u64 m,
                                 const PlacePartition& partition);

// 1/m + 1/n + 1/lcm(m, n), exact. Below 9/10 for every admissible pair;
// the maximum over all of them is 5/6, attained at (2,6) and (6,2).
Rational reciprocal_sum(const ExponentPair& pair);
Rational reciprocal_sum_raw(u64 m, u64 n);

// The explicit bound B with h(gamma) <= B for every nonconstant
// descended solution pair: B = ceil(S0 / (1 - reciprocal_sum)) where S0
// is the degree sum of the coefficient support of (a, b), infinity
// included. DomainError when a or b is zero.
i64 height_bound(const RatFn& a, const RatFn& b, const ExponentPair& pair);

}  // namespace catff

#endif
