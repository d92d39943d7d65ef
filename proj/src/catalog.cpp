#include "k3fm/catalog.hpp"

#include <array>

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {

struct NameEntry {
  ObjectName name;
  std::string_view spelling;
};

constexpr std::array<NameEntry, 8> kNames{{
    {ObjectName::O_X, "O_X"},
    {ObjectName::O_p, "O_p"},
    {ObjectName::I_W, "I_W"},
    {ObjectName::O_W, "O_W"},
    {ObjectName::Q_xi, "Q_xi"},
    {ObjectName::Q_p, "Q_p"},
    {ObjectName::OW_hat, "OW_hat"},
    {ObjectName::IW_hat, "IW_hat"},
}};

}  // namespace

std::string_view to_string(ObjectName name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.spelling;
  }
  return "unknown";
}

std::optional<ObjectName> object_name_from_string(std::string_view text) {
  for (const auto& entry : kNames) {
    if (entry.spelling == text) return entry.name;
  }
  return std::nullopt;
}

bool is_indexed(ObjectName name) {
  return name == ObjectName::I_W || name == ObjectName::O_W || name == ObjectName::OW_hat ||
         name == ObjectName::IW_hat;
}

CatalogObject object(ObjectName name, std::optional<std::int64_t> n) {
  if (is_indexed(name)) {
    if (!n) throw DomainError(std::string(to_string(name)) + " needs the length n");
    if (*n < 1) throw DomainError("the length n must be at least 1");
    // Keeps every closed form below within int64.
    if (*n > 1'000'000'000'000) throw DomainError("the length n is out of range");
  } else {
    n.reset();
  }

  const DivisorClass lh = ell_class(Surface::Xhat);
  CatalogObject obj{name, n, {}, std::nullopt, {}};
  switch (name) {
    case ObjectName::O_X:
      obj.vector = trivial_vector(Surface::X);
      obj.wit = WitIndex(1);
      obj.notes = "structure sheaf; WIT_1 from the kernel normalization R pi_*(Q) = O_Xhat[-1]";
      break;
    case ObjectName::O_p:
      obj.vector = point_vector(Surface::X);
      obj.wit = WitIndex(0);
      obj.notes = "skyscraper at a point; IT_0";
      break;
    case ObjectName::I_W:
      obj.vector = {1, zero_divisor(Surface::X), 1 - *n};
      obj.wit = WitIndex(1);
      obj.notes = "ideal sheaf of a length-n subscheme; IT_1";
      break;
    case ObjectName::O_W:
      obj.vector = {0, zero_divisor(Surface::X), *n};
      obj.wit = WitIndex(0);
      obj.notes = "structure sheaf of a length-n subscheme; IT_0";
      break;
    case ObjectName::Q_xi:
      obj.vector = {2, ell_class(Surface::X), -3};
      obj.notes = "kernel fiber; points of Xhat = M(2,l,-3)";
      break;
    case ObjectName::Q_p:
      obj.vector = {2, -lh, -3};
      obj.wit = WitIndex(2);
      obj.notes = "transform of O_p; c1 sign fixed by the family M(1+2n,-n lh,1-3n)";
      break;
    case ObjectName::OW_hat:
      obj.vector = {2 * *n, -*n * lh, -3 * *n};
      obj.wit = WitIndex(2);
      obj.notes = "quasi-homogeneous transform of O_W; numerically n copies of Q_p";
      break;
    case ObjectName::IW_hat:
      obj.vector = {1 + 2 * *n, -*n * lh, 1 - 3 * *n};
      obj.wit = WitIndex(1);
      obj.notes = "transform of I_W; a point of M_n = M(1+2n,-n lh,1-3n); WIT_1";
      break;
  }
  return obj;
}

}  // namespace k3fm
