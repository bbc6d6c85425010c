/*
 * JSON views of every report the CLI emits. Algebraic values serialize
 * as their canonical text form; reports keep the contractual field
 * names (holds / lhs / rhs, set_degree_sums, coefficient_num,
 * coefficient_den, bound).
 */
#ifndef CATFF_JSON_IO_HPP
#define CATFF_JSON_IO_HPP

#include <json.hpp>

#include "catff/catalan.hpp"

namespace catff {

using Json = nlohmann::json;

void to_json(Json& j, const Poly& f);
void to_json(Json& j, const RatFn& f);
void to_json(Json& j, const Place& v);
void to_json(Json& j, const Rational& r);
void to_json(Json& j, const Factorization& f);
void to_json(Json& j, const DescentResult& d);
void to_json(Json& j, const MasonReport& r);
void to_json(Json& j, const InequalityReport& r);
void to_json(Json& j, const PartitionHeightReport& r);
void to_json(Json& j, const PlacePartition& p);
void to_json(Json& j, const SolutionRecord& r);
void to_json(Json& j, const TSetEntry& e);
void to_json(Json& j, const SearchStats& s);
void to_json(Json& j, const PairSummary& s);
void to_json(Json& j, const CertificationReport& r);

// Height and support table for one rational function.
Json height_report(const RatFn& f);

// The `catalan solve` output: {"records": [...], "tset": [...],
// "report": {...}}.
Json solve_output(const SearchResult& result,
                  const CertificationReport& report);

}  // namespace catff

#endif
