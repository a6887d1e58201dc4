#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qmhs/cyclotomic.hpp"
#include "qmhs/identities.hpp"
#include "qmhs/rational.hpp"

namespace qmhs {

// All JSON uses ordered_json so emitted key order is the insertion order
// fixed here, independent of library hashing details.
using json = nlohmann::ordered_json;

// Rationals serialize as canonical "p/q" strings ("p" when q = 1), matching
// Rational::str / Rational::from_string.
json value_to_json(const Rational& v);
Rational rational_from_json(const json& j);

// {"n": ..., "coeffs": ["p/q", ...]} with exactly phi(n) entries.
json value_to_json(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const json& j);

// Power basis coefficients as "[c0|c1|...]"; bars instead of commas so the
// string drops into a CSV field unquoted.
std::string value_to_text(const Cyclotomic& v);

// {"id", "params", "lhs", "rhs", "status", "ms"} plus "note" when nonempty.
// params is an object with integer values and alphabetically ordered keys.
json report_to_json(const CheckReport& r);
CheckReport report_from_json(const json& j);

// CSV with header id,params,lhs,rhs,status,ms,note; params packs the tuple
// as "m=2;n=5".  Fields never need quoting given the charset in play.
std::string csv_header();
std::string report_to_csv_row(const CheckReport& r);

// One-line human form used by the CLI's table output.
std::string report_to_text(const CheckReport& r);

std::string params_to_string(const ParamTuple& p);

}  // namespace qmhs
