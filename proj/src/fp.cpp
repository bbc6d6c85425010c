#include "catff/fp.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace catff {

namespace {

constexpr u64 kMaxModulus = u64{1} << 31;

bool is_prime_trial_division(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Distinct prime factors of n (n <= 2^31, trial division).
std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Fp::Fp(u64 p) {
  if (p > kMaxModulus) {
    throw DomainError("modulus " + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime_trial_division(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<u32>(p);
}

u32 Fp::reduce_signed(i64 v) const {
  i64 r = v % static_cast<i64>(p_);
  if (r < 0) r += p_;
  return static_cast<u32>(r);
}

u32 Fp::inv(u32 a) const {
  if (a == 0) throw DomainError("inverse of zero in F_p");
  return pow(a, p_ - 2);  // Fermat; p prime
}

u32 Fp::pow(u32 base, u64 e) const {
  u64 result = 1 % p_;
  u64 b = base % p_;
  while (e > 0) {
    if (e & 1) result = result * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<u32>(result);
}

u32 Fp::pow_signed(u32 base, i64 e) const {
  if (e >= 0) return pow(base, static_cast<u64>(e));
  if (base == 0) throw DomainError("negative power of zero in F_p");
  return pow(inv(base), static_cast<u64>(-e));
}

bool Fp::is_mth_power(u32 c, u64 m) const {
  if (c == 0) throw DomainError("power-residue test on zero");
  if (m == 0) throw DomainError("power-residue test with exponent zero");
  u64 order = p_ - 1;
  if (order == 0) return true;  // p == 2, trivial group
  u64 g = std::gcd(m, order);
  return pow(c, order / g) == 1;
}

u32 Fp::generator() const {
  if (p_ == 2) return 1;
  u64 order = p_ - 1;
  auto factors = prime_factors(order);
  for (u32 cand = 2; cand < p_; ++cand) {
    bool ok = true;
    for (u64 q : factors) {
      if (pow(cand, order / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw InternalError("no generator found for F_p*");
}

u64 Fp::discrete_log(u32 c) const {
  if (p_ == 2) return 0;
  u32 g = generator();
  u64 order = p_ - 1;
  if (p_ <= (1u << 20)) {
    // small fields: walk the cyclic group
    u64 acc = 1;
    for (u64 k = 0; k < order; ++k) {
      if (acc == c) return k;
      acc = acc * g % p_;
    }
    throw InternalError("discrete log walk failed");
  }
  // baby-step giant-step
  u64 step = 1;
  while (step * step < order) ++step;
  std::unordered_map<u32, u64> baby;
  baby.reserve(step);
  u64 acc = 1;
  for (u64 j = 0; j < step; ++j) {
    baby.emplace(static_cast<u32>(acc), j);
    acc = acc * g % p_;
  }
  u32 giant = pow(inv(g), step);  // g^(-step)
  u64 cur = c;
  for (u64 i = 0; i <= step; ++i) {
    auto it = baby.find(static_cast<u32>(cur));
    if (it != baby.end()) return (i * step + it->second) % order;
    cur = cur * giant % p_;
  }
  throw InternalError("baby-step giant-step found no logarithm");
}

std::vector<u32> Fp::all_mth_roots(u32 c, u64 m) const {
  if (c == 0) throw DomainError("m-th roots of zero");
  if (m == 0) throw DomainError("m-th roots with exponent zero");
  if (p_ == 2) return c == 1 ? std::vector<u32>{1} : std::vector<u32>{};

  // Solve m*x = log(c) (mod p-1) in the exponent group.
  u64 order = p_ - 1;
  u64 g = std::gcd(m, order);
  u64 target = discrete_log(c);
  if (target % g != 0) return {};
  if (g == order) {
    // only c == 1 passes the divisibility test; every nonzero residue solves
    std::vector<u32> all(p_ - 1);
    for (u32 d = 1; d < p_; ++d) all[d - 1] = d;
    return all;
  }
  u64 reduced_order = order / g;
  u64 m_red = (m / g) % reduced_order;
  // inverse of m/g modulo order/g via extended Euclid
  i64 t0 = 0, t1 = 1;
  i64 r0 = static_cast<i64>(reduced_order), r1 = static_cast<i64>(m_red);
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    i64 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  u64 m_inv = static_cast<u64>(t0 < 0 ? t0 + static_cast<i64>(reduced_order)
                                      : t0);
  u64 x0 = (target / g) % reduced_order * m_inv % reduced_order;

  u32 gen = generator();
  std::vector<u32> roots;
  roots.reserve(g);
  u32 base = pow(gen, x0);
  u32 stride = pow(gen, reduced_order);
  u32 cur = base;
  for (u64 k = 0; k < g; ++k) {
    roots.push_back(cur);
    cur = mul(cur, stride);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<u32> Fp::mth_root(u32 c, u64 m) const {
  auto roots = all_mth_roots(c, m);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

void Fp::require_same(const Fp& other) const {
  if (p_ != other.p_) {
    throw DomainError("mixed moduli: " + std::to_string(p_) + " vs " +
                      std::to_string(other.p_));
  }
}

}  // namespace catff
