#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "k3fm/mukai.hpp"

namespace k3fm {

// Divisor literals are signed integer combinations of H, l (surface X) or
// Hh, lh (surface Xhat): "2l+5H", "-3lh", "0". Whitespace is ignored. The
// surface is inferred from the tokens; a bare "0" needs `surface_hint`.
// Vector literals are "(r, <divisor>, s)" with integer r and s.

DivisorClass parse_divisor(std::string_view text, std::optional<Surface> surface_hint = {});
MukaiVector parse_vector(std::string_view text, std::optional<Surface> surface_hint = {});

/// Canonical divisor literal: H-term first, unit coefficients elided, "0" for zero.
std::string format_divisor(const DivisorClass& d);
/// "(r,c,s)" using format_divisor.
std::string format_vector(const MukaiVector& v);
std::string format_chern(const ChernCharacter& ch);

}  // namespace k3fm
