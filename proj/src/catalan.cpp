#include "catff/catalan.hpp"

#include <algorithm>
#include <map>

namespace catff {

namespace {

constexpr u64 kMaxExponentCap = 1'000'000;

u64 ipow_clamped(u64 base, u32 exp, u64 clamp) {
  u64 r = 1;
  while (exp-- > 0) {
    if (r > clamp / base) return clamp + 1;
    r *= base;
  }
  return r;
}

std::vector<u64> admissible_exponents(const Fp& fp, u64 cap) {
  std::vector<u64> out;
  for (u64 m = 2; m <= cap; ++m) {
    if (m % fp.p() != 0) out.push_back(m);
  }
  return out;
}

// records sort by (x, m, n, y); keys are unique across both branches
bool record_before(const SolutionRecord& a, const SolutionRecord& b) {
  if (int c = RatFn::compare(a.x, b.x); c != 0) return c < 0;
  if (a.m != b.m) return a.m < b.m;
  if (a.n != b.n) return a.n < b.n;
  return RatFn::compare(a.y, b.y) < 0;
}

TSet build_tset(const std::vector<SolutionRecord>& records) {
  std::map<std::pair<RatFn, RatFn>, std::vector<TSetContributor>> entries;
  for (const auto& rec : records) {
    if (rec.degenerate) continue;
    entries[{rec.gamma, rec.delta}].push_back(
        {rec.x, rec.y, rec.m, rec.n, rec.t});
  }
  TSet out;
  for (auto& [key, contributors] : entries) {
    out.entries.push_back(
        {key.first, key.second, std::move(contributors)});
  }
  return out;
}

SearchStats make_pair_stats(const Fp& fp, u64 mmax, u64 nmax,
                            std::size_t m_count, std::size_t n_count) {
  SearchStats stats;
  u64 in_range = (mmax >= 2 ? mmax - 1 : 0) * (nmax >= 2 ? nmax - 1 : 0);
  u64 excluded_present = 0;
  for (const auto& [em, en] : kExcludedExponentPairs) {
    if (em <= mmax && en <= nmax && em % fp.p() != 0 && en % fp.p() != 0) {
      ++excluded_present;
    }
  }
  stats.exponent_pairs =
      static_cast<u64>(m_count) * static_cast<u64>(n_count) - excluded_present;
  stats.skipped_pairs = in_range - stats.exponent_pairs;
  return stats;
}

// constant gamma = a x^m, delta = 1 - gamma, t = 0
SolutionRecord make_constant_record(const ProblemInstance& inst,
                                    const RatFn& x, const RatFn& y, u64 m,
                                    u64 n, u32 value) {
  const Fp& fp = inst.field;
  SolutionRecord rec{x,
                     y,
                     m,
                     n,
                     RatFn::constant(fp, value),
                     RatFn::constant(fp, fp.sub(1, value)),
                     0};
  rec.constant_branch = true;
  rec.degenerate = x.is_zero() || y.is_zero();

  if (!check_solution(inst, x, y, m, n)) {
    rec.failures.push_back("equation does not hold");
  }
  if (!rec.degenerate) {
    ExponentPair pair = ExponentPair::make(m, n, fp);
    rec.partition = place_partition(inst.a, inst.b, rec.gamma, rec.delta);
    rec.height_report =
        partition_height_check(*rec.partition, rec.gamma, rec.delta, pair);
    if (!rec.height_report->holds) {
      rec.failures.push_back("partition height inequalities fail");
    }
    if (!exponent_divides_valuations(rec.gamma, m, *rec.partition)) {
      rec.failures.push_back("m does not divide the gamma valuations");
    }
    if (!exponent_divides_valuations(rec.delta, n, *rec.partition)) {
      rec.failures.push_back("n does not divide the delta valuations");
    }
    if (rec.gamma.height() > height_bound(inst.a, inst.b, pair)) {
      rec.failures.push_back("height exceeds the bound");
    }
  }
  rec.certified = rec.failures.empty();
  return rec;
}

struct ConstantBranch {
  std::vector<ConstantCandidate> candidates;
  std::vector<SolutionRecord> records;
};

ConstantBranch run_constant_branch(const ProblemInstance& inst,
                                   const std::vector<u64>& ms,
                                   const std::vector<u64>& ns,
                                   const SearchOptions& opts) {
  const Fp& fp = inst.field;
  ConstantBranch out;

  auto solve_for_y = [&](const RatFn& x, u64 m, u32 value) {
    for (u64 n : ns) {
      if (!exponent_pair_allowed(m, n)) continue;
      if (value == 1) {  // b y^n = 0 forces y = 0
        out.records.push_back(
            make_constant_record(inst, x, RatFn(fp), m, n, value));
        continue;
      }
      RatFn target = RatFn::constant(fp, fp.sub(1, value)) / inst.b;
      for (const RatFn& y : all_mth_power_roots(target, n)) {
        out.records.push_back(make_constant_record(inst, x, y, m, n, value));
      }
    }
  };

  int xcap = inst.a.height() / 2;
  std::vector<RatFn> xs = enumerate_bounded_height(fp, xcap, opts.budget);
  for (u64 m : ms) {
    solve_for_y(RatFn(fp), m, 0);  // x = 0, degenerate by construction
    for (const RatFn& x : xs) {
      RatFn axm = inst.a * x.pow(static_cast<i64>(m));
      if (!axm.is_constant()) continue;
      u32 value = axm.num().coeff(0);
      out.candidates.push_back({x, m, value});
      solve_for_y(x, m, value);
    }
  }
  return out;
}

}  // namespace

ProblemInstance ProblemInstance::make(const Fp& field, RatFn a, RatFn b,
                                      int hmax, u64 mmax, u64 nmax) {
  if (a.is_zero() || b.is_zero()) {
    throw DomainError("coefficients must be nonzero");
  }
  a.field().require_same(field);
  b.field().require_same(field);
  if (hmax < 0) throw DomainError("height cap must be nonnegative");
  if (mmax == 0 || nmax == 0) {
    throw DomainError("exponent caps must be positive");
  }
  if (mmax > kMaxExponentCap || nmax > kMaxExponentCap) {
    throw CapacityError("exponent cap exceeds the supported size");
  }
  return {field, std::move(a), std::move(b), hmax, mmax, nmax};
}

std::size_t TSet::nonconstant_size() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const TSetEntry& e) {
        return !e.gamma.is_constant();
      }));
}

bool check_solution(const ProblemInstance& inst, const RatFn& x,
                    const RatFn& y, u64 m, u64 n) {
  RatFn lhs = inst.a * x.pow(static_cast<i64>(m)) +
              inst.b * y.pow(static_cast<i64>(n));
  return lhs == RatFn::constant(inst.field, 1);
}

std::vector<ConstantCandidate> constant_case(const ProblemInstance& inst,
                                             const SearchOptions& opts) {
  auto ms = admissible_exponents(inst.field, inst.mmax);
  auto ns = admissible_exponents(inst.field, inst.nmax);
  return run_constant_branch(inst, ms, ns, opts).candidates;
}

SolutionRecord descend_solution(const ProblemInstance& inst, const RatFn& x,
                                const RatFn& y, u64 m, u64 n) {
  const Fp& fp = inst.field;
  if (!check_solution(inst, x, y, m, n)) {
    throw DomainError("(x, y, m, n) is not a solution of the equation");
  }
  RatFn left = inst.a * x.pow(static_cast<i64>(m));
  if (left.is_constant()) {
    throw DomainError("a x^m is constant; use the constant branch");
  }
  RatFn right = inst.b * y.pow(static_cast<i64>(n));
  ExponentPair pair = ExponentPair::make(m, n, fp);

  DescentResult dg = frobenius_descend(left);
  DescentResult dd = frobenius_descend(right);
  if (dg.t != dd.t) {
    throw InternalError("descent exponents of the two components differ");
  }

  SolutionRecord rec{x, y, m, n, dg.gamma, dd.gamma, dg.t};

  u64 q = ipow_clamped(fp.p(), rec.t, u64{1} << 62);
  if (rec.gamma.pow(static_cast<i64>(q)) != left ||
      rec.delta.pow(static_cast<i64>(q)) != right) {
    throw InternalError("descent does not reconstruct the components");
  }
  if (rec.gamma + rec.delta != RatFn::constant(fp, 1)) {
    throw InternalError("descended components do not sum to 1");
  }

  rec.partition = place_partition(inst.a, inst.b, rec.gamma, rec.delta);
  rec.height_report =
      partition_height_check(*rec.partition, rec.gamma, rec.delta, pair);
  if (!rec.height_report->holds) {
    rec.failures.push_back("partition height inequalities fail");
  }
  if (!exponent_divides_valuations(rec.gamma, m, *rec.partition)) {
    rec.failures.push_back("m does not divide the gamma valuations");
  }
  if (!exponent_divides_valuations(rec.delta, n, *rec.partition)) {
    rec.failures.push_back("n does not divide the delta valuations");
  }
  if (!independent_over_kp(rec.gamma, rec.delta)) {
    rec.failures.push_back(
        "descended components are dependent over the p-th powers");
  }
  if (rec.gamma.height() > height_bound(inst.a, inst.b, pair)) {
    rec.failures.push_back("height exceeds the bound");
  }
  rec.certified = rec.failures.empty();
  return rec;
}

SearchResult search(const ProblemInstance& inst, const SearchOptions& opts) {
  const Fp& fp = inst.field;
  auto ms = admissible_exponents(fp, inst.mmax);
  auto ns = admissible_exponents(fp, inst.nmax);

  SearchResult result;
  result.stats = make_pair_stats(fp, inst.mmax, inst.nmax, ms.size(), ns.size());

  ConstantBranch constant = run_constant_branch(inst, ms, ns, opts);
  result.records = std::move(constant.records);

  FactorOptions factor_opts;
  factor_opts.seed = opts.seed;
  for (const RatFn& x : enumerate_bounded_height(fp, inst.hmax, opts.budget)) {
    ++result.stats.x_candidates;
    for (u64 m : ms) {
      RatFn left = inst.a * x.pow(static_cast<i64>(m));
      if (left.is_constant()) continue;  // covered by the constant branch
      RatFn target = (RatFn::constant(fp, 1) - left) / inst.b;
      FactoredRatFn factored = factor_ratfn(target, factor_opts);
      ++result.stats.factorizations;
      for (u64 n : ns) {
        if (!exponent_pair_allowed(m, n)) continue;
        for (const RatFn& y : all_mth_power_roots(factored, n)) {
          if (y.height() > inst.hmax) continue;
          result.records.push_back(descend_solution(inst, x, y, m, n));
        }
      }
    }
  }

  std::sort(result.records.begin(), result.records.end(), record_before);
  result.tset = build_tset(result.records);
  return result;
}

SearchResult blind_search(const ProblemInstance& inst,
                          const SearchOptions& opts) {
  const Fp& fp = inst.field;
  auto ms = admissible_exponents(fp, inst.mmax);
  auto ns = admissible_exponents(fp, inst.nmax);

  SearchResult result;
  result.stats = make_pair_stats(fp, inst.mmax, inst.nmax, ms.size(), ns.size());

  std::vector<RatFn> candidates{RatFn(fp)};  // zero first
  for (auto& f : enumerate_bounded_height(fp, inst.hmax, opts.budget)) {
    candidates.push_back(std::move(f));
  }

  // join on the residual: index every b y^n, then match 1 - a x^m
  std::map<RatFn, std::vector<std::pair<RatFn, u64>>> by_value;
  for (u64 n : ns) {
    for (const RatFn& y : candidates) {
      by_value[inst.b * y.pow(static_cast<i64>(n))].emplace_back(y, n);
    }
  }

  const RatFn one = RatFn::constant(fp, 1);
  for (const RatFn& x : candidates) {
    ++result.stats.x_candidates;
    for (u64 m : ms) {
      RatFn left = inst.a * x.pow(static_cast<i64>(m));
      auto it = by_value.find(one - left);
      if (it == by_value.end()) continue;
      for (const auto& [y, n] : it->second) {
        if (!exponent_pair_allowed(m, n)) continue;
        if (left.is_constant()) {
          result.records.push_back(make_constant_record(
              inst, x, y, m, n, left.num().coeff(0)));
        } else {
          result.records.push_back(descend_solution(inst, x, y, m, n));
        }
      }
    }
  }

  std::sort(result.records.begin(), result.records.end(), record_before);
  result.tset = build_tset(result.records);
  return result;
}

bool oracle_agrees(const ProblemInstance& inst, const SearchResult& fast,
                   const SearchResult& blind) {
  std::vector<const SolutionRecord*> boxed;
  for (const auto& rec : fast.records) {
    if (rec.x.height() <= inst.hmax && rec.y.height() <= inst.hmax) {
      boxed.push_back(&rec);
    }
  }
  if (boxed.size() != blind.records.size()) return false;
  for (std::size_t i = 0; i < boxed.size(); ++i) {
    const SolutionRecord& a = *boxed[i];
    const SolutionRecord& b = blind.records[i];
    if (a.x != b.x || a.y != b.y || a.m != b.m || a.n != b.n ||
        a.gamma != b.gamma || a.delta != b.delta || a.t != b.t) {
      return false;
    }
  }
  return true;
}

SolutionRecord silverman_family(const Fp& field, u32 t) {
  if (t == 0) throw DomainError("t must be positive");
  u64 q = ipow_clamped(field.p(), t, u64{1} << 20);
  if (q > (u64{1} << 20)) {
    throw CapacityError("p^t exceeds the supported size");
  }
  u64 m = q - 1;
  // validates m > 1, coprimality, and the exclusion list
  ExponentPair::make(m, m, field);

  RatFn a = RatFn::variable(field);
  RatFn b = RatFn::constant(field, 1) - a;
  ProblemInstance inst = ProblemInstance::make(field, a, b, 1, m, m);
  if (!check_solution(inst, a, b, m, m)) {
    throw InternalError("the family identity does not hold");
  }
  SolutionRecord rec = descend_solution(inst, a, b, m, m);
  if (rec.t != t) {
    throw InternalError("family descent exponent does not match t");
  }
  return rec;
}

CertificationReport certify(const ProblemInstance& inst,
                            const SearchResult& result) {
  CertificationReport report;
  report.record_count = result.records.size();
  report.tset_size = result.tset.size();
  report.tset_nonconstant = result.tset.nonconstant_size();

  std::map<std::pair<u64, u64>, PairSummary> pairs;
  auto fail = [&](std::size_t index, const std::string& what) {
    report.all_certified = false;
    report.failures.push_back("record " + std::to_string(index) + ": " + what);
  };

  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const SolutionRecord& rec = result.records[i];
    if (rec.certified) ++report.certified_count;
    if (rec.constant_branch) ++report.constant_count;
    if (rec.degenerate) ++report.degenerate_count;

    if (!check_solution(inst, rec.x, rec.y, rec.m, rec.n)) {
      fail(i, "equation recheck fails");
      continue;
    }
    if (!rec.certified) {
      for (const auto& f : rec.failures) fail(i, f);
      continue;
    }
    if (rec.degenerate || rec.gamma.is_constant()) continue;

    i64 h = rec.gamma.height();
    if (h != rec.delta.height() ||
        h != projective_height(rec.gamma, rec.delta)) {
      fail(i, "height of gamma, height of delta and the projective height "
              "disagree");
      continue;
    }
    ExponentPair pair = ExponentPair::make(rec.m, rec.n, inst.field);
    i64 bound = height_bound(inst.a, inst.b, pair);
    if (h > bound) {
      fail(i, "height exceeds the bound");
      continue;
    }
    report.max_gamma_height = std::max(report.max_gamma_height, h);

    auto [it, fresh] = pairs.try_emplace(
        std::pair<u64, u64>{rec.m, rec.n},
        PairSummary{rec.m, rec.n, reciprocal_sum(pair), bound, h});
    if (!fresh) it->second.max_height = std::max(it->second.max_height, h);
    if (bound > 0) {
      Rational ratio = Rational::make(h, bound);
      if (!report.max_ratio || *report.max_ratio < ratio) {
        report.max_ratio = ratio;
      }
    }
  }

  // target-set side of the bound: every nonconstant entry must satisfy
  // it for each contributing exponent pair
  for (const auto& entry : result.tset.entries) {
    if (entry.gamma.is_constant()) continue;
    for (const auto& c : entry.contributors) {
      ExponentPair pair = ExponentPair::make(c.m, c.n, inst.field);
      if (entry.gamma.height() > height_bound(inst.a, inst.b, pair)) {
        report.all_certified = false;
        report.failures.push_back("target set entry (" +
                                  entry.gamma.to_string() +
                                  ") violates the height bound");
      }
    }
  }

  for (const auto& kv : pairs) report.pairs.push_back(kv.second);
  return report;
}

}  // namespace catff
