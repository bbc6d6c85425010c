#include "catff/factor.hpp"

#include <map>
#include <random>

namespace catff {

namespace {

// p^d clamped so comparisons against thresholds stay safe
u64 pow_clamped(u64 base, u64 exp, u64 clamp) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (r > clamp / base) return clamp + 1;
    r *= base;
  }
  return r;
}

// monic polynomial z^d + (base-p digits of idx)
Poly monic_from_index(const Fp& fp, u32 d, u64 idx) {
  std::vector<u32> cs(d + 1, 0);
  cs[d] = 1;
  for (u32 i = 0; i < d; ++i) {
    cs[i] = static_cast<u32>(idx % fp.p());
    idx /= fp.p();
  }
  return Poly::from_coeffs(fp, std::move(cs));
}

struct Factorizer {
  const Fp& fp;
  const FactorOptions& opts;
  std::mt19937_64 rng;
  std::map<Poly, u32> found;

  Factorizer(const Fp& field, const FactorOptions& options)
      : fp(field), opts(options), rng(options.seed) {}

  Poly random_poly_below(int deg_bound) {
    std::vector<u32> cs(static_cast<std::size_t>(deg_bound));
    std::uniform_int_distribution<u32> dist(0, fp.p() - 1);
    for (auto& c : cs) c = dist(rng);
    return Poly::from_coeffs(fp, std::move(cs));
  }

  // g: monic product of distinct irreducibles, all of degree d
  void equal_degree_split(Poly g, u32 d) {
    if (g.is_constant()) return;
    if (g.degree() == static_cast<int>(d)) {
      found.try_emplace(std::move(g), 0);
      return;
    }
    if (pow_clamped(fp.p(), d, opts.small_field_threshold) <=
        opts.small_field_threshold) {
      // tiny candidate space: trial-divide in canonical order. Any monic
      // degree-d divisor is automatically one of the irreducible factors.
      u64 total = pow_clamped(fp.p(), d, u64(-1) / 2);
      for (u64 idx = 0; idx < total && g.degree() > 0; ++idx) {
        Poly cand = monic_from_index(fp, d, idx);
        auto [q, r] = Poly::divmod(g, cand);
        if (r.is_zero()) {
          found.try_emplace(std::move(cand), 0);
          g = std::move(q);
        }
      }
      return;
    }
    // Cantor-Zassenhaus
    for (;;) {
      Poly r = random_poly_below(g.degree());
      if (r.is_constant()) continue;
      Poly split(fp);
      if (fp.p() == 2) {
        // trace map r + r^2 + ... + r^(2^(d-1)) mod g
        Poly acc = r % g, t = acc;
        for (u32 i = 1; i < d; ++i) {
          t = t * t % g;
          acc = acc + t;
        }
        split = Poly::gcd(acc, g);
      } else {
        // r^((p^d-1)/2) = (r^(1+p+...+p^(d-1)))^((p-1)/2), Frobenius chain
        Poly t = r % g, norm = t;
        for (u32 i = 1; i < d; ++i) {
          t = powmod(t, fp.p(), g);
          norm = norm * t % g;
        }
        split = Poly::gcd(powmod(norm, (fp.p() - 1) / 2, g) -
                              Poly::constant(fp, 1),
                          g);
      }
      if (split.degree() > 0 && split.degree() < g.degree()) {
        equal_degree_split(g / split, d);
        equal_degree_split(std::move(split), d);
        return;
      }
    }
  }

  // w: monic squarefree
  void distinct_degree_split(Poly w) {
    Poly h = Poly::variable(fp) % w;
    Poly z = Poly::variable(fp);
    for (u32 d = 1; 2 * d <= static_cast<u32>(w.degree()); ++d) {
      h = powmod(h, fp.p(), w);
      Poly g = Poly::gcd(h - z, w);
      if (g.degree() > 0) {
        equal_degree_split(g, d);
        w = w / g;
        h = h % w;
      }
    }
    if (w.degree() > 0) found.try_emplace(std::move(w), 0);
  }

  // records multiplicities of all irreducible factors of monic g,
  // each scaled by mult
  void run(Poly g, u32 mult) {
    while (g.degree() > 0) {
      Poly d = g.derivative();
      if (d.is_zero()) {
        g = *g.pth_root();
        mult *= fp.p();
        continue;
      }
      Poly w = g / Poly::gcd(g, d);  // squarefree, exponents prime to p
      std::map<Poly, u32> before = found;
      distinct_degree_split(w);
      for (auto& [q, m] : found) {
        if (before.contains(q)) continue;
        u32 e = 0;
        for (;;) {
          auto [quot, rem] = Poly::divmod(g, q);
          if (!rem.is_zero()) break;
          g = std::move(quot);
          ++e;
        }
        m += mult * e;
      }
      // what is left has every exponent divisible by p
    }
  }
};

}  // namespace

Factorization factor(const Poly& f, const FactorOptions& opts) {
  if (f.is_zero()) throw DomainError("factorization of zero");
  Factorization out{f.field(), f.lead(), {}};
  if (f.is_constant()) return out;

  Factorizer machine(f.field(), opts);
  machine.run(f.monic(), 1);
  out.factors.assign(machine.found.begin(), machine.found.end());
  return out;
}

Poly Factorization::reconstruct() const {
  Poly r = Poly::constant(field, unit);
  for (const auto& [q, e] : factors) r = r * q.pow(e);
  return r;
}

bool is_irreducible(const Poly& f) {
  if (f.is_constant()) {
    throw DomainError("irreducibility test on a constant");
  }
  const Fp& fp = f.field();
  Poly g = f.monic();
  u32 d = static_cast<u32>(g.degree());
  if (d == 1) return true;

  // Rabin: z^(p^d) = z mod g, and z^(p^(d/l)) - z coprime to g for
  // every prime l dividing d
  Poly z = Poly::variable(fp);
  std::vector<Poly> frob;  // frob[i] = z^(p^(i+1)) mod g
  frob.reserve(d);
  Poly h = z % g;
  for (u32 i = 0; i < d; ++i) {
    h = powmod(h, fp.p(), g);
    frob.push_back(h);
  }
  if (frob[d - 1] != z % g) return false;
  for (u32 l = 2; l <= d; ++l) {
    if (d % l != 0) continue;
    bool prime = true;
    for (u32 q = 2; q * q <= l; ++q) {
      if (l % q == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    if (Poly::gcd(frob[d / l - 1] - z, g).degree() != 0) return false;
  }
  return true;
}

}  // namespace catff
