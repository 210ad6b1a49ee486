#ifndef CURV_JSON_IO_HPP
#define CURV_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "curv/config.hpp"
#include "curv/matroid.hpp"

namespace curv {

using Json = nlohmann::json;

/// Rationals serialize as plain integers when the denominator is 1 and as
/// "p/q" strings otherwise, so exactness survives the round trip.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

/// ConfigDocument: {"ambient_dim": n, "vectors": [[..], ..]}.
Json config_to_json(const VectorConfiguration& cfg);
VectorConfiguration config_from_json(const Json& j);

Json graded_to_json(const GradedCount& g);

/// 1-based sorted index list for a subset mask.
Json mask_to_json(Mask m);

/// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string input_hash(const Json& j);

}  // namespace curv

#endif
