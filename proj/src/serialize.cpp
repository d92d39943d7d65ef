#include "k3fm/serialize.hpp"

#include "k3fm/errors.hpp"
#include "k3fm/literals.hpp"

namespace k3fm {

namespace {

Json numbers_json(const StabilityNumbers& n) {
  return {{"slope", format_rational(n.slope)}, {"reduced_chi", format_rational(n.reduced_chi)}, {"delta", n.delta}};
}

Convention convention_from_string(std::string_view text) {
  for (Convention c : {Convention::PaperLiteralReuse, Convention::PaperLiteralBasisChange,
                       Convention::DerivedConsistent}) {
    if (to_string(c) == text) return c;
  }
  throw ParseError("unknown convention '" + std::string(text) + "'");
}

Surface surface_field(const Json& j, const char* key) {
  const auto s = surface_from_string(j.at(key).get<std::string>());
  if (!s) throw ParseError(std::string("bad surface tag in '") + key + "'");
  return *s;
}

}  // namespace

Json vector_json(const MukaiVector& v) {
  return {{"r", v.r}, {"c1", format_divisor(v.c)}, {"s", v.s}};
}

Json chern_json(const ChernCharacter& ch) {
  return {{"ch0", ch.ch0}, {"c1", format_divisor(ch.c1)}, {"ch2", ch.ch2}};
}

Json matrix_json(const TransformMatrix& t) {
  Json entries = Json::array();
  for (const auto& row : t.m)
    for (auto x : row) entries.push_back(x);
  return {{"schema_version", kSchemaVersion},
          {"matrix", entries},
          {"convention", to_string(t.convention)},
          {"source", to_string(t.source)},
          {"target", to_string(t.target)}};
}

TransformMatrix matrix_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw ParseError("unsupported schema_version");
    const auto& entries = j.at("matrix");
    if (!entries.is_array() || entries.size() != 16) throw ParseError("matrix needs 16 entries");
    TransformMatrix t;
    for (int k = 0; k < 16; ++k) t.m[k / 4][k % 4] = entries[k].get<std::int64_t>();
    t.convention = convention_from_string(j.at("convention").get<std::string>());
    t.source = surface_field(j, "source");
    t.target = surface_field(j, "target");
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed matrix document: ") + e.what());
  }
}

Json isometry_json(const IsometryReport& report) {
  Json defects = Json::array();
  for (const auto& d : report.defects) {
    defects.push_back({{"pair", {basis_label(d.i), basis_label(d.j)}}, {"expected", d.expected}, {"actual", d.actual}});
  }
  return {{"passed", report.passed}, {"defects", defects}};
}

Json candidate_json(const DestabCandidate& c) {
  return {{"sub", vector_json(c.sub)},
          {"quotient", vector_json(c.quotient)},
          {"sub_numbers", numbers_json(c.sub_numbers)},
          {"quotient_numbers", numbers_json(c.quotient_numbers)}};
}

Json report_json(const VerificationReport& report) {
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"computed", c.computed},
                      {"expected", c.expected},
                      {"status", to_string(c.status)}});
  }
  return {{"schema_version", kSchemaVersion}, {"claims", claims}, {"overall", report.overall() ? "pass" : "fail"}};
}

}  // namespace k3fm
