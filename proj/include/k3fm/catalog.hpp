#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "k3fm/transform.hpp"

namespace k3fm {

/// Named sheaves of the correspondence. The *_hat objects live on Xhat.
enum class ObjectName { O_X, O_p, I_W, O_W, Q_xi, Q_p, OW_hat, IW_hat };

std::string_view to_string(ObjectName name);
std::optional<ObjectName> object_name_from_string(std::string_view text);
/// I_W, O_W, OW_hat and IW_hat depend on the length n of the subscheme W.
bool is_indexed(ObjectName name);

struct CatalogObject {
  ObjectName name;
  std::optional<std::int64_t> n;
  MukaiVector vector;
  /// Stored WIT index. These are cohomological facts, not computed here.
  std::optional<WitIndex> wit;
  std::string notes;
};

/// Stored closed-form invariants. Throws DomainError for a missing or
/// non-positive n on indexed families.
CatalogObject object(ObjectName name, std::optional<std::int64_t> n = {});

}  // namespace k3fm
