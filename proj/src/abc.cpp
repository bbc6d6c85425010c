#include "catff/abc.hpp"

#include <map>
#include <numeric>

namespace catff {

namespace {

constexpr u64 kMaxExponent = 1'000'000;

}  // namespace

Rational Rational::make(i64 num, i64 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

bool exponent_pair_allowed(u64 m, u64 n) {
  if (m <= 1 || n <= 1) return false;
  for (const auto& [em, en] : kExcludedExponentPairs) {
    if (m == em && n == en) return false;
  }
  return true;
}

ExponentPair ExponentPair::make(u64 m, u64 n, const Fp& field) {
  if (m > kMaxExponent || n > kMaxExponent) {
    throw CapacityError("exponent exceeds the supported size");
  }
  if (m <= 1 || n <= 1) {
    throw DomainError("exponents must exceed 1, got (" + std::to_string(m) +
                      ", " + std::to_string(n) + ")");
  }
  if (m % field.p() == 0 || n % field.p() == 0) {
    throw DomainError("exponents must be coprime to the characteristic " +
                      std::to_string(field.p()));
  }
  if (!exponent_pair_allowed(m, n)) {
    throw DomainError("exponent pair (" + std::to_string(m) + ", " +
                      std::to_string(n) +
                      ") is on the genus <= 1 exclusion list");
  }
  return {m, n};
}

u64 ExponentPair::lcm() const { return m / std::gcd(m, n) * n; }

RatFn wronskian(const RatFn& gamma, const RatFn& delta) {
  return gamma * delta.derivative() - gamma.derivative() * delta;
}

bool independent_over_kp(const RatFn& gamma, const RatFn& delta) {
  return !wronskian(gamma, delta).is_zero();
}

MasonReport mason_check(const Poly& a, const Poly& b, const Poly& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) {
    throw DomainError("hypothesis fails: inputs must be nonzero");
  }
  if (a + b != c) {
    throw DomainError("hypothesis fails: A + B must equal C");
  }
  if (!Poly::gcd(a, b).is_one() || !Poly::gcd(a, c).is_one() ||
      !Poly::gcd(b, c).is_one()) {
    throw DomainError("hypothesis fails: A, B, C must be pairwise coprime");
  }
  if ((a.derivative() * b - a * b.derivative()).is_zero()) {
    throw DomainError(
        "hypothesis fails: the Wronskian vanishes (inputs are dependent "
        "over the subfield of p-th powers)");
  }
  MasonReport report;
  report.max_deg = std::max({a.degree(), b.degree(), c.degree()});
  report.rad_deg = squarefree_part(a * b * c).degree();
  report.holds = report.max_deg <= report.rad_deg - 1;
  return report;
}

PlacePartition place_partition(const RatFn& a, const RatFn& b,
                               const RatFn& gamma, const RatFn& delta) {
  if (a.is_zero() || b.is_zero() || gamma.is_zero() || delta.is_zero()) {
    throw DomainError("partition inputs must be nonzero");
  }
  a.field().require_same(b.field());
  a.field().require_same(gamma.field());
  if (gamma + delta != RatFn::constant(a.field(), 1)) {
    throw DomainError("gamma + delta must equal 1");
  }

  // valuations of (a, b, gamma, delta) over the union of their supports
  std::map<Place, std::array<int, 4>> vals;
  const RatFn* fns[4] = {&a, &b, &gamma, &delta};
  for (int i = 0; i < 4; ++i) {
    for (const auto& [place, v] : support(*fns[i])) {
      vals.try_emplace(place, std::array<int, 4>{})
          .first->second[static_cast<std::size_t>(i)] = v;
    }
  }

  PlacePartition out;
  for (const auto& [place, v] : vals) {
    const auto [va, vb, vg, vd] = v;
    if (va != 0 || vb != 0) {
      out.coeff_support.push_back(place);
      out.coeff_deg_sum += place.degree();
    } else if (vg > 0) {
      if (vd != 0) {
        throw InternalError("a zero of gamma must be neutral for delta");
      }
      out.gamma_zeros.push_back(place);
      out.gamma_zero_deg_sum += place.degree();
    } else if (vd > 0) {
      if (vg != 0) {
        throw InternalError("a zero of delta must be neutral for gamma");
      }
      out.delta_zeros.push_back(place);
      out.delta_zero_deg_sum += place.degree();
    } else if (vg < 0 || vd < 0) {
      if (vg != vd) {
        throw InternalError(
            "poles of gamma and delta must coincide with equal valuation");
      }
      out.common_poles.push_back(place);
      out.pole_deg_sum += place.degree();
    }
    // remaining case: v(gamma) = v(delta) = 0, outside all four sets
  }
  return out;
}

PartitionHeightReport partition_height_check(const PlacePartition& partition,
                                             const RatFn& gamma,
                                             const RatFn& delta,
                                             const ExponentPair& pair) {
  if (gamma.height() != delta.height()) {
    throw DomainError(
        "corrupted input: descended components must have equal height");
  }
  i64 h = gamma.height();
  auto row = [h](u64 factor, i64 deg_sum) {
    i64 rhs = static_cast<i64>(factor) * deg_sum;
    return InequalityReport{h >= rhs, h, rhs};
  };
  PartitionHeightReport report{
      row(pair.m, partition.gamma_zero_deg_sum),
      row(pair.n, partition.delta_zero_deg_sum),
      row(pair.lcm(), partition.pole_deg_sum),
      false,
  };
  report.holds = report.gamma_zero_bound.holds &&
                 report.delta_zero_bound.holds && report.pole_bound.holds;
  return report;
}

bool exponent_divides_valuations(const RatFn& gamma, u64 m,
                                 const PlacePartition& partition) {
  auto divides_on = [&](const std::vector<Place>& places) {
    for (const Place& v : places) {
      if (valuation(gamma, v) % static_cast<i64>(m) != 0) return false;
    }
    return true;
  };
  return divides_on(partition.gamma_zeros) &&
         divides_on(partition.delta_zeros) &&
         divides_on(partition.common_poles);
}

Rational reciprocal_sum_raw(u64 m, u64 n) {
  if (m == 0 || n == 0) throw DomainError("exponents must be positive");
  if (m > kMaxExponent || n > kMaxExponent) {
    throw CapacityError("exponent exceeds the supported size");
  }
  // 1/m + 1/n + 1/lcm = (m + n + gcd(m, n)) / (m n)
  i64 mi = static_cast<i64>(m), ni = static_cast<i64>(n);
  return Rational::make(mi + ni + std::gcd(mi, ni), mi * ni);
}

Rational reciprocal_sum(const ExponentPair& pair) {
  return reciprocal_sum_raw(pair.m, pair.n);
}

i64 height_bound(const RatFn& a, const RatFn& b, const ExponentPair& pair) {
  if (a.is_zero() || b.is_zero()) {
    throw DomainError("coefficients must be nonzero");
  }
  a.field().require_same(b.field());
  std::map<Place, int> coeff_places;
  for (const auto& [place, v] : support(a)) coeff_places.emplace(place, v);
  for (const auto& [place, v] : support(b)) coeff_places.emplace(place, v);
  i64 s0 = 0;
  for (const auto& [place, v] : coeff_places) s0 += place.degree();
  Rational c = reciprocal_sum(pair);
  // B = ceil(s0 / (1 - c)); c < 1 for every admissible pair
  i64 gap = c.den - c.num;
  return (s0 * c.den + gap - 1) / gap;
}

}  // namespace catff
