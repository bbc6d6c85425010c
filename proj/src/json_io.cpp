#include "catff/json_io.hpp"

#include "catff/place.hpp"

namespace catff {

void to_json(Json& j, const Poly& f) { j = f.to_string(); }

void to_json(Json& j, const RatFn& f) { j = f.to_string(); }

void to_json(Json& j, const Place& v) { j = v.to_string(); }

void to_json(Json& j, const Rational& r) {
  j = Json{{"num", r.num}, {"den", r.den}};
}

void to_json(Json& j, const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [q, e] : f.factors) {
    factors.push_back(Json{{"poly", q}, {"multiplicity", e}});
  }
  j = Json{{"unit", f.unit}, {"factors", std::move(factors)}};
}

void to_json(Json& j, const DescentResult& d) {
  j = Json{{"gamma", d.gamma}, {"t", d.t}};
}

void to_json(Json& j, const MasonReport& r) {
  j = Json{{"holds", r.holds},
           {"lhs", r.max_deg},
           {"rhs", r.rad_deg - 1},
           {"max_deg", r.max_deg},
           {"rad_deg", r.rad_deg}};
}

void to_json(Json& j, const InequalityReport& r) {
  j = Json{{"holds", r.holds}, {"lhs", r.lhs}, {"rhs", r.rhs}};
}

void to_json(Json& j, const PartitionHeightReport& r) {
  j = Json{{"holds", r.holds},
           {"gamma_zero_bound", r.gamma_zero_bound},
           {"delta_zero_bound", r.delta_zero_bound},
           {"pole_bound", r.pole_bound}};
}

void to_json(Json& j, const PlacePartition& p) {
  j = Json{{"coeff_support", p.coeff_support},
           {"gamma_zeros", p.gamma_zeros},
           {"delta_zeros", p.delta_zeros},
           {"common_poles", p.common_poles},
           {"set_degree_sums",
            Json::array({p.coeff_deg_sum, p.gamma_zero_deg_sum,
                         p.delta_zero_deg_sum, p.pole_deg_sum})}};
}

void to_json(Json& j, const SolutionRecord& r) {
  j = Json{{"x", r.x},
           {"y", r.y},
           {"m", r.m},
           {"n", r.n},
           {"gamma", r.gamma},
           {"delta", r.delta},
           {"t", r.t},
           {"constant_branch", r.constant_branch},
           {"degenerate", r.degenerate},
           {"certified", r.certified},
           {"failures", r.failures}};
  if (r.partition) j["partition"] = *r.partition;
  if (r.height_report) j["height_check"] = *r.height_report;
}

void to_json(Json& j, const TSetEntry& e) {
  Json contributors = Json::array();
  for (const auto& c : e.contributors) {
    contributors.push_back(Json{
        {"x", c.x}, {"y", c.y}, {"m", c.m}, {"n", c.n}, {"t", c.t}});
  }
  j = Json{{"gamma", e.gamma},
           {"delta", e.delta},
           {"height", e.gamma.height()},
           {"contributors", std::move(contributors)}};
}

void to_json(Json& j, const SearchStats& s) {
  j = Json{{"x_candidates", s.x_candidates},
           {"exponent_pairs", s.exponent_pairs},
           {"skipped_pairs", s.skipped_pairs},
           {"factorizations", s.factorizations}};
}

void to_json(Json& j, const PairSummary& s) {
  j = Json{{"m", s.m},
           {"n", s.n},
           {"coefficient_num", s.coefficient.num},
           {"coefficient_den", s.coefficient.den},
           {"bound", s.bound},
           {"max_height", s.max_height}};
}

void to_json(Json& j, const CertificationReport& r) {
  j = Json{{"all_certified", r.all_certified},
           {"record_count", r.record_count},
           {"certified_count", r.certified_count},
           {"constant_count", r.constant_count},
           {"degenerate_count", r.degenerate_count},
           {"tset_size", r.tset_size},
           {"tset_nonconstant", r.tset_nonconstant},
           {"max_gamma_height", r.max_gamma_height},
           {"pairs", r.pairs},
           {"failures", r.failures}};
  if (r.max_ratio) {
    j["max_ratio_num"] = r.max_ratio->num;
    j["max_ratio_den"] = r.max_ratio->den;
  }
}

Json height_report(const RatFn& f) {
  Json j{{"value", f}, {"height", f.height()}};
  if (f.is_zero()) {
    j["support"] = Json::array();
    return j;
  }
  Json table = Json::array();
  for (const auto& [place, v] : support(f)) {
    table.push_back(Json{
        {"place", place}, {"degree", place.degree()}, {"valuation", v}});
  }
  j["support"] = std::move(table);
  j["sum_formula"] = sum_formula_check(f);
  return j;
}

Json solve_output(const SearchResult& result,
                  const CertificationReport& report) {
  Json rep = report;
  rep["stats"] = result.stats;
  return Json{{"records", result.records},
              {"tset", result.tset.entries},
              {"report", std::move(rep)}};
}

}  // namespace catff
