#include "catff/enumerate.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace catff {

namespace {

u64 ipow(u64 base, int e) {
  u64 r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// p^e, clamped so it never wraps
u64 ipow_clamped(u64 base, int e, u64 clamp) {
  u64 r = 1;
  while (e-- > 0) {
    if (r > clamp / base) return clamp + 1;
    r *= base;
  }
  return r;
}

int degree_of_index(u64 idx, u32 p) {
  int d = 0;
  while (idx >= p) {
    idx /= p;
    ++d;
  }
  return d;
}

std::vector<u32> digits_of(u64 idx, u32 p, std::size_t count) {
  std::vector<u32> cs(count, 0);
  for (std::size_t i = 0; i < count && idx > 0; ++i) {
    cs[i] = static_cast<u32>(idx % p);
    idx /= p;
  }
  return cs;
}

}  // namespace

EnumerationBudget EnumerationBudget::from_env() {
  EnumerationBudget budget;
  const char* env = std::getenv("CATALAN_FF_BUDGET");
  if (env == nullptr || *env == '\0') return budget;
  u64 value = 0;
  const char* end = env + std::string_view(env).size();
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw DomainError("CATALAN_FF_BUDGET must be a positive integer, got '" +
                      std::string(env) + "'");
  }
  budget.max_candidate_pairs = value;
  return budget;
}

BoundedHeightEnumerator::BoundedHeightEnumerator(const Fp& field, int d,
                                                 EnumerationBudget budget)
    : field_(field), d_(d) {
  if (d < 0) throw DomainError("height bound must be nonnegative");
  u64 limit = budget.max_candidate_pairs;
  u64 pairs = ipow_clamped(field.p(), 2 * d + 2, limit);
  if (pairs > limit) {
    throw CapacityError(
        "enumeration budget exceeded: height bound " + std::to_string(d) +
        " over F_" + std::to_string(field.p()) + " has p^(2d+2) > " +
        std::to_string(limit) +
        " candidate pairs; raise CATALAN_FF_BUDGET to allow this");
  }
  reset();
}

void BoundedHeightEnumerator::reset() {
  h_ = 0;
  num_idx_ = 1;
  den_deg_ = 0;
  den_idx_ = 0;
  done_ = false;
  fresh_ = true;
}

Poly BoundedHeightEnumerator::current_num() const {
  return Poly::from_coeffs(
      field_, digits_of(num_idx_, field_.p(), static_cast<std::size_t>(h_) + 1));
}

Poly BoundedHeightEnumerator::current_den() const {
  auto cs = digits_of(den_idx_, field_.p(), static_cast<std::size_t>(den_deg_) + 1);
  cs[static_cast<std::size_t>(den_deg_)] = 1;
  return Poly::from_coeffs(field_, std::move(cs));
}

bool BoundedHeightEnumerator::advance_position() {
  const u32 p = field_.p();
  if (++den_idx_ < ipow(p, den_deg_)) return true;
  den_idx_ = 0;
  // a layer-h pair needs deg num = h or deg den = h
  if (degree_of_index(num_idx_, p) == h_ && den_deg_ < h_) {
    ++den_deg_;
    return true;
  }
  if (++num_idx_ < ipow(p, h_ + 1)) {
    den_deg_ = degree_of_index(num_idx_, p) == h_ ? 0 : h_;
    return true;
  }
  if (++h_ > d_) return false;
  num_idx_ = 1;
  den_deg_ = h_;  // deg num = 0 < h forces deg den = h
  return true;
}

std::optional<RatFn> BoundedHeightEnumerator::next() {
  for (;;) {
    if (done_) return std::nullopt;
    if (fresh_) {
      fresh_ = false;
    } else if (!advance_position()) {
      done_ = true;
      return std::nullopt;
    }
    Poly num = current_num();
    Poly den = current_den();
    if (Poly::gcd(num, den).is_one()) {
      return RatFn(std::move(num), std::move(den));
    }
  }
}

std::vector<RatFn> enumerate_bounded_height(const Fp& field, int d,
                                            EnumerationBudget budget) {
  BoundedHeightEnumerator en(field, d, budget);
  std::vector<RatFn> out;
  while (auto f = en.next()) out.push_back(std::move(*f));
  return out;
}

}  // namespace catff
