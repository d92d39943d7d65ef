#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace k3fm {

/// Which copy of the surface a class lives on. Both share the Gram matrix
/// diag(2, -12); the tag only guards against cross-surface arithmetic.
enum class Surface { X, Xhat };

constexpr Surface other(Surface s) { return s == Surface::X ? Surface::Xhat : Surface::X; }
std::string_view to_string(Surface s);
std::optional<Surface> surface_from_string(std::string_view text);

/// a * (polarization) + b * (ell class) on the given surface: aH + bl on X,
/// aHh + blh on Xhat.
struct DivisorClass {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Surface surface = Surface::X;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

inline constexpr std::int64_t kPolarizationSquare = 2;
inline constexpr std::int64_t kEllSquare = -12;

/// Coefficient matrix of the identification between the two bases:
/// Hh = 5H + 2l and lh = -12H - 5l. It squares to the identity, so the same
/// matrix converts in both directions.
inline constexpr std::array<std::array<std::int64_t, 2>, 2> kIdentifyMatrix{{{5, -12}, {2, -5}}};

constexpr DivisorClass polarization(Surface s) { return {1, 0, s}; }
constexpr DivisorClass ell_class(Surface s) { return {0, 1, s}; }
constexpr DivisorClass zero_divisor(Surface s) { return {0, 0, s}; }

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x);
DivisorClass operator*(std::int64_t k, const DivisorClass& x);

/// Intersection number 2 a1 a2 - 12 b1 b2. Throws DomainError on mismatched surfaces.
std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2);

/// Degree against the polarization of d's own surface, i.e. 2a.
std::int64_t degree(const DivisorClass& d);

/// The same class written in the basis of the other surface.
DivisorClass identify(const DivisorClass& d);

/// Riemann-Roch Euler characteristic of the line bundle O(d): 2 + d^2/2.
std::int64_t rr_chi_line(const DivisorClass& d);

}  // namespace k3fm
