/*
 * Exhaustive enumeration of K* below a height bound.
 *
 * Streams every nonzero rational function of height <= d exactly once,
 * in canonical order: by height layer, then numerator, then denominator
 * (polynomial order on each). Candidates are generated directly in
 * reduced form, so no dedup pass is needed.
 *
 * The raw candidate space has p^(2d+2) (numerator, denominator) pairs;
 * construction refuses when that exceeds the configured budget.
 */
#ifndef CATFF_ENUMERATE_HPP
#define CATFF_ENUMERATE_HPP

#include <optional>
#include <vector>

#include "catff/ratfn.hpp"

namespace catff {

struct EnumerationBudget {
  u64 max_candidate_pairs = 10'000'000;

  // Reads CATALAN_FF_BUDGET when set; the default above otherwise.
  static EnumerationBudget from_env();
};

class BoundedHeightEnumerator {
 public:
  // CapacityError when p^(2d+2) exceeds the budget, naming both numbers.
  BoundedHeightEnumerator(const Fp& field, int d,
                          EnumerationBudget budget = EnumerationBudget::from_env());

  // Next value in canonical order, or nullopt when exhausted.
  std::optional<RatFn> next();

  void reset();

 private:
  bool advance_position();
  Poly current_num() const;
  Poly current_den() const;

  Fp field_;
  int d_;
  int h_ = 0;        // current height layer
  u64 num_idx_ = 0;  // base-p encoding of the numerator, 0 = exhausted layer
  int den_deg_ = 0;
  u64 den_idx_ = 0;  // base-p encoding of the denominator below z^den_deg
  bool done_ = false;
  bool fresh_ = true;
};

// The whole stream, materialized.
std::vector<RatFn> enumerate_bounded_height(
    const Fp& field, int d,
    EnumerationBudget budget = EnumerationBudget::from_env());

}  // namespace catff

#endif
