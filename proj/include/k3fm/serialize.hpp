#pragma once

#include <json.hpp>

#include "k3fm/catalog.hpp"
#include "k3fm/stability.hpp"
#include "k3fm/transform.hpp"
#include "k3fm/verify.hpp"

namespace k3fm {

using Json = nlohmann::ordered_json;

/// Version stamped into matrix, enumeration and report documents.
inline constexpr int kSchemaVersion = 1;

/// {"r":..,"c1":"<divisor literal>","s":..}
Json vector_json(const MukaiVector& v);
/// {"ch0":..,"c1":"<divisor literal>","ch2":..}
Json chern_json(const ChernCharacter& ch);
/// {"schema_version","matrix":[16 ints, row-major],"convention","source","target"}
Json matrix_json(const TransformMatrix& t);
Json isometry_json(const IsometryReport& report);
Json candidate_json(const DestabCandidate& c);
/// {"schema_version","claims":[{id,anchor,computed,expected,status}],"overall":"pass"|"fail"}
Json report_json(const VerificationReport& report);

/// Inverse of matrix_json. Throws ParseError on schema violations.
TransformMatrix matrix_from_json(const Json& j);

}  // namespace k3fm
