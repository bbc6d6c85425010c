#include "catff/place.hpp"

#include <algorithm>

#include "catff/factor.hpp"

namespace catff {

Place Place::finite(Poly pi) {
  if (!pi.is_monic() || pi.is_constant()) {
    throw DomainError("finite place must be a monic irreducible polynomial");
  }
  if (!is_irreducible(pi)) {
    throw DomainError("finite place must be irreducible: " + pi.to_string());
  }
  return Place(pi.field(), std::move(pi));
}

Place Place::infinity(const Fp& field) { return Place(field, std::nullopt); }

const Poly& Place::poly() const {
  if (!pi_) throw DomainError("the infinite place has no polynomial");
  return *pi_;
}

int Place::compare(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return static_cast<int>(a.is_infinity()) - static_cast<int>(b.is_infinity());
  }
  return Poly::compare(*a.pi_, *b.pi_);
}

std::string Place::to_string() const {
  return pi_ ? pi_->to_string() : "inf";
}

namespace {

int multiplicity(Poly f, const Poly& pi) {
  int e = 0;
  for (;;) {
    auto [q, r] = Poly::divmod(f, pi);
    if (!r.is_zero()) return e;
    f = std::move(q);
    ++e;
  }
}

}  // namespace

int valuation(const RatFn& f, const Place& v) {
  if (f.is_zero()) throw DomainError("valuation of zero");
  f.field().require_same(v.field());
  if (v.is_infinity()) return f.den().degree() - f.num().degree();
  // num and den are coprime, so at most one side contributes
  return multiplicity(f.num(), v.poly()) - multiplicity(f.den(), v.poly());
}

std::vector<std::pair<Place, int>> support(const RatFn& f) {
  if (f.is_zero()) throw DomainError("support of zero");
  std::vector<std::pair<Place, int>> out;
  auto push_factors = [&](const Poly& part, int sign) {
    for (auto& [pi, e] : factor(part).factors) {
      out.emplace_back(Place::finite(pi), sign * static_cast<int>(e));
    }
  };
  push_factors(f.num(), 1);
  auto num_end = static_cast<std::ptrdiff_t>(out.size());
  push_factors(f.den(), -1);
  // numerator and denominator are coprime: the two factor lists are
  // disjoint and each is sorted, so one merge restores canonical order
  std::inplace_merge(out.begin(), out.begin() + num_end, out.end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
  int at_infinity = f.den().degree() - f.num().degree();
  if (at_infinity != 0) {
    out.emplace_back(Place::infinity(f.field()), at_infinity);
  }
  return out;
}

bool sum_formula_check(const RatFn& f) {
  i64 total = 0;
  for (const auto& [place, val] : support(f)) {
    total += static_cast<i64>(val) * place.degree();
  }
  return total == 0;
}

}  // namespace catff
