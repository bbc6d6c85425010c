#include "catff/descent.hpp"

#include <algorithm>

namespace catff {

bool is_pth_power(const RatFn& f) {
  if (f.is_zero()) throw DomainError("p-th power test on zero");
  return f.num().pth_root().has_value() && f.den().pth_root().has_value();
}

DescentResult frobenius_descend(const RatFn& f) {
  if (f.is_zero()) throw DomainError("descent of zero");
  RatFn g = f;
  u32 t = 0;
  while (!g.is_constant()) {
    auto rnum = g.num().pth_root();
    auto rden = g.den().pth_root();
    if (!rnum || !rden) break;
    g = RatFn(std::move(*rnum), std::move(*rden));
    ++t;
  }
  return {std::move(g), t};
}

FactoredRatFn factor_ratfn(const RatFn& f, const FactorOptions& opts) {
  if (f.is_zero()) throw DomainError("factorization of zero");
  Factorization num = factor(f.num(), opts);
  Factorization den = factor(f.den(), opts);
  FactoredRatFn out{f.field(), num.unit, {}};
  for (auto& [q, e] : num.factors) {
    out.factors.emplace_back(std::move(q), static_cast<int>(e));
  }
  auto num_end = static_cast<std::ptrdiff_t>(out.factors.size());
  for (auto& [q, e] : den.factors) {
    out.factors.emplace_back(std::move(q), -static_cast<int>(e));
  }
  // the two runs are sorted and disjoint (numerator and denominator are
  // coprime); merge keeps the canonical factor order
  std::inplace_merge(out.factors.begin(), out.factors.begin() + num_end,
                     out.factors.end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
  return out;
}

namespace {

void require_unit_exponent(const Fp& fp, u64 m) {
  if (m == 0) throw DomainError("root exponent must be positive");
  if (m % fp.p() == 0) {
    throw DomainError("root exponent must be coprime to the characteristic");
  }
  if (m > (u64{1} << 30)) {
    throw CapacityError("root exponent exceeds the supported size");
  }
}

// the radical part: product of q^(e/m), split into numerator and
// denominator; nullopt when some multiplicity is not divisible by m
std::optional<std::pair<Poly, Poly>> radical_root(const FactoredRatFn& f,
                                                  u64 m) {
  Poly num = Poly::constant(f.field, 1);
  Poly den = Poly::constant(f.field, 1);
  for (const auto& [q, e] : f.factors) {
    if (e % static_cast<int>(m) != 0) return std::nullopt;
    int r = e / static_cast<int>(m);
    if (r > 0) {
      num = num * q.pow(static_cast<u64>(r));
    } else {
      den = den * q.pow(static_cast<u64>(-r));
    }
  }
  return std::make_pair(std::move(num), std::move(den));
}

}  // namespace

std::optional<RatFn> mth_power_root(const FactoredRatFn& f, u64 m) {
  Fp fp = f.field;
  require_unit_exponent(fp, m);
  auto parts = radical_root(f, m);
  if (!parts) return std::nullopt;
  auto unit_root = fp.mth_root(f.unit, m);
  if (!unit_root) return std::nullopt;
  return RatFn(parts->first * Poly::constant(fp, *unit_root), parts->second);
}

std::vector<RatFn> all_mth_power_roots(const FactoredRatFn& f, u64 m) {
  Fp fp = f.field;
  require_unit_exponent(fp, m);
  auto parts = radical_root(f, m);
  if (!parts) return {};
  std::vector<RatFn> out;
  // all m-th roots of unity of K are constants, so scaling one root by
  // the unit's full root set exhausts the solutions
  for (u32 s : fp.all_mth_roots(f.unit, m)) {
    out.emplace_back(parts->first * Poly::constant(fp, s), parts->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RatFn> mth_power_root(const RatFn& f, u64 m) {
  if (f.is_zero()) throw DomainError("root of zero");
  return mth_power_root(factor_ratfn(f), m);
}

std::vector<RatFn> all_mth_power_roots(const RatFn& f, u64 m) {
  if (f.is_zero()) throw DomainError("root of zero");
  return all_mth_power_roots(factor_ratfn(f), m);
}

}  // namespace catff
