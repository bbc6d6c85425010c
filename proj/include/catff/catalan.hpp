/*
 * End-to-end solver and certifier for a x^m + b y^n = 1 over K = F_p(z).
 *
 * The search walks every x below the height cap and every admissible
 * exponent pair, solves b y^n = 1 - a x^m by n-th root extraction from
 * one cached factorization of the residual, and certifies each solution:
 * exact equation recheck, Frobenius descent to (gamma, delta, t) with
 * gamma + delta = 1, the place partition with its height inequalities,
 * exponent divisibility off the coefficient support, independence over
 * the p-th powers, and the explicit height bound. Certified pairs
 * (gamma, delta) are collected into the deduplicated target set.
 *
 * Candidates x with a x^m constant are covered by a separate complete
 * branch (their height never exceeds floor(h(a)/2)), so the two passes
 * are disjoint. Solutions with x = 0 or y = 0 are recorded but flagged
 * degenerate and kept out of the target set.
 *
 * A blind quadratic search (implemented as a hash join on the residual,
 * so it stays tractable) is retained as an oracle: it never extracts
 * roots and must find exactly the solutions of the directed search
 * inside the height box.
 */
#ifndef CATFF_CATALAN_HPP
#define CATFF_CATALAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "catff/abc.hpp"
#include "catff/descent.hpp"
#include "catff/enumerate.hpp"

namespace catff {

struct ProblemInstance {
  Fp field;
  RatFn a;
  RatFn b;
  int hmax;
  u64 mmax;
  u64 nmax;

  // Validates: a, b nonzero, hmax >= 0, exponent caps positive and
  // within the supported size.
  static ProblemInstance make(const Fp& field, RatFn a, RatFn b, int hmax,
                              u64 mmax, u64 nmax);
};

struct SolutionRecord {
  RatFn x;
  RatFn y;
  u64 m = 0;
  u64 n = 0;
  RatFn gamma;
  RatFn delta;
  u32 t = 0;
  bool constant_branch = false;
  bool degenerate = false;  // x = 0 or y = 0
  bool certified = false;
  std::optional<PlacePartition> partition;        // absent when degenerate
  std::optional<PartitionHeightReport> height_report;
  std::vector<std::string> failures;  // human-readable failed checks
};

struct TSetContributor {
  RatFn x;
  RatFn y;
  u64 m;
  u64 n;
  u32 t;
};

struct TSetEntry {
  RatFn gamma;
  RatFn delta;
  std::vector<TSetContributor> contributors;
};

// Deduplicated (gamma, delta) pairs of the nondegenerate records,
// ordered by (height(gamma), gamma, delta).
struct TSet {
  std::vector<TSetEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  std::size_t nonconstant_size() const;
};

struct SearchStats {
  u64 x_candidates = 0;     // main-loop x values examined
  u64 exponent_pairs = 0;   // admissible (m, n) pairs in range
  u64 skipped_pairs = 0;    // in-range (m, n) combinations skipped
  u64 factorizations = 0;   // residual factorizations performed
};

struct SearchResult {
  // canonical order: (x, m, n, y)
  std::vector<SolutionRecord> records;
  TSet tset;
  SearchStats stats;
};

struct SearchOptions {
  u64 seed = 0;
  EnumerationBudget budget = EnumerationBudget::from_env();
};

// Exact test of a x^m + b y^n = 1.
bool check_solution(const ProblemInstance& inst, const RatFn& x,
                    const RatFn& y, u64 m, u64 n);

struct ConstantCandidate {
  RatFn x;
  u64 m;
  u32 value;  // the constant a x^m
};

// All x with a x^m constant, for each admissible m <= mmax: complete,
// since a x^m constant with m >= 2 forces h(x) <= floor(h(a)/2).
std::vector<ConstantCandidate> constant_case(
    const ProblemInstance& inst, const SearchOptions& opts = {});

// Full certification of one nonconstant solution. DomainError when
// (x, y, m, n) is not a solution, a x^m is constant, or the exponent
// pair is inadmissible; InternalError on broken descent invariants.
SolutionRecord descend_solution(const ProblemInstance& inst, const RatFn& x,
                                const RatFn& y, u64 m, u64 n);

SearchResult search(const ProblemInstance& inst,
                    const SearchOptions& opts = {});

// The blind oracle: same record set as search() restricted to the
// height box, produced without root extraction.
SearchResult blind_search(const ProblemInstance& inst,
                          const SearchOptions& opts = {});

// True iff the blind oracle found exactly the directed search's records
// restricted to the height box (constant-branch records may legally lie
// outside it).
bool oracle_agrees(const ProblemInstance& inst, const SearchResult& fast,
                   const SearchResult& blind);

// The counterexample family a = x = z, b = y = 1 - z, m = n = p^t - 1:
// z^(p^t) + (1 - z)^(p^t) = 1 by Frobenius. Returns the certified record
// with descent exponent t. DomainError when (m, n) is inadmissible.
SolutionRecord silverman_family(const Fp& field, u32 t);

struct PairSummary {
  u64 m;
  u64 n;
  Rational coefficient;
  i64 bound;
  i64 max_height;  // max h(gamma) over nonconstant records for this pair
};

struct CertificationReport {
  bool all_certified = true;
  u64 record_count = 0;
  u64 certified_count = 0;
  u64 constant_count = 0;
  u64 degenerate_count = 0;
  u64 tset_size = 0;
  u64 tset_nonconstant = 0;
  i64 max_gamma_height = 0;  // over nonconstant records
  std::vector<PairSummary> pairs;
  // max h(gamma)/bound over nonconstant records (absent when there are
  // none)
  std::optional<Rational> max_ratio;
  std::vector<std::string> failures;
};

// Re-verifies every record independently of the search path: exact
// equation, descent reconstruction, equal heights and projective height,
// partition inequalities, divisibility, and the height bound; summarizes
// the target set.
CertificationReport certify(const ProblemInstance& inst,
                            const SearchResult& result);

}  // namespace catff

#endif
