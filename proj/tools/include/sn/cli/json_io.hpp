#pragma once

#include "json.hpp"
#include <string>

#include "sn/decomposition.hpp"
#include "sn/homology.hpp"
#include "sn/ideals.hpp"
#include "sn/primes.hpp"
#include "sn/representations.hpp"

namespace sn::cli {

using nlohmann::json;

/// Schema version stamped on JSON envelopes.
inline constexpr int kSchemaVersion = 1;

json rational_json(const Rational& r);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from(const json& j);

json point_json(const Point& p);
Point point_from(const json& j);

json prime_json(const PrimeDescriptor& p);
/// n comes from the object when present, otherwise from `n`.
PrimeDescriptor prime_from(const json& j, int n);

json ideal_json(const IdealForm& I);
IdealForm ideal_from(const json& j, int n);

json module_spec_json(const SimpleModuleSpec& s);
SimpleModuleSpec module_spec_from(const json& j, int n);

json mod_vector_json(const ModVector& v);
ModVector mod_vector_from(const json& j, const SimpleModuleSpec& s);
std::string to_string(const ModVector& v);

json exactness_json(const ExactnessReport& r, const std::string& space);

/// Decomposed elements as [[coeff, [sector, ...]], ...]; sectors are "1",
/// "x^i", "y^j", "E(i,j)".
json decomposed_json(const DecomposedElement& d);
DecomposedElement decomposed_from(const json& j, int n);
Sector parse_sector(const std::string& s);

/// Parses text that must be JSON, reporting DomainError("bad-json").
json parse_json_arg(const std::string& text, const std::string& what);

}  // namespace sn::cli
