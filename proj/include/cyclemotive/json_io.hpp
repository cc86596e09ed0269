#pragma once

// JSON readers and writers for fans, expressions, gradings and computed
// values. Writers are canonical: keys sorted, monomials in graded order, and
// integers emitted as numbers when they fit in 64 bits, as strings otherwise.

#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "cyclemotive/chow.hpp"
#include "cyclemotive/ffcount.hpp"
#include "cyclemotive/motive.hpp"
#include "cyclemotive/multi_series.hpp"
#include "cyclemotive/poly.hpp"
#include "cyclemotive/toric.hpp"

namespace cyclemotive::io {

using nlohmann::json;

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);

Integer integer_from_json(const json& j);
json integer_to_json(const Integer& x);

/// {"dim": n, "rays": [[...], ...], "cones": [[...], ...]}. Structural
/// problems raise ParseError; geometric ones are left to fan_validate.
Fan fan_from_json(const json& j);
json fan_to_json(const Fan& fan);

/// {"arity": r, "exponents": [[...], ...]} in invariant-subvariety order.
Grading grading_from_json(const json& j);

/// Expression tree. Compound nodes are {"op": name, "args": [...]} with op
/// one of disjoint_union, difference, product, cone. Leaves are
/// {"leaf": name, ...}. Relative "fan_file" paths resolve against base_dir.
/// Unknown op or leaf names raise Unsupported.
MotiveExpr expr_from_json(const json& j, const std::filesystem::path& base_dir = {});
json expr_to_json(const MotiveExpr& e);

Poly2 poly2_from_json(const json& j);
json poly2_to_json(const Poly2& p);

json value_to_json(const MeasureValue& value);
MeasureValue value_from_json(const json& j);

json series_to_json(const MultiSeries& s);
MultiSeries series_from_json(const json& j);

json congruence_to_json(const CongruenceReport& r);

json hodge_report_to_json(const HodgeReport& r);

}  // namespace cyclemotive::io
