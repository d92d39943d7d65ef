#pragma once

#include <array>
#include <cstdint>

#include "k3fm/ns_lattice.hpp"

namespace k3fm {

/// Mukai vector (rank, c1, s) with s = rank + ch2. Negative ranks are allowed:
/// they show up as alternating-sum images of complexes.
struct MukaiVector {
  std::int64_t r = 0;
  DivisorClass c;
  std::int64_t s = 0;

  Surface surface() const { return c.surface; }

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  friend auto operator<=>(const MukaiVector&, const MukaiVector&) = default;
};

struct ChernCharacter {
  std::int64_t ch0 = 0;
  DivisorClass c1;
  std::int64_t ch2 = 0;

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

/// Coordinates (r, a, b, s) where c = a*H + b*l.
using MukaiCoords = std::array<std::int64_t, 4>;

MukaiCoords coordinates(const MukaiVector& v);
MukaiVector from_coordinates(const MukaiCoords& x, Surface surface);

MukaiVector operator+(const MukaiVector& v, const MukaiVector& w);
MukaiVector operator-(const MukaiVector& v, const MukaiVector& w);
MukaiVector operator-(const MukaiVector& v);
MukaiVector operator*(std::int64_t k, const MukaiVector& v);

/// v(O) on the given surface: (1, 0, 1).
constexpr MukaiVector trivial_vector(Surface s) { return {1, zero_divisor(s), 1}; }
/// v(O_p) on the given surface: (0, 0, 1).
constexpr MukaiVector point_vector(Surface s) { return {0, zero_divisor(s), 1}; }

MukaiVector from_chern(const ChernCharacter& ch);
ChernCharacter to_chern(const MukaiVector& v);

/// <v, w> = c_v.c_w - r_v s_w - r_w s_v. Throws DomainError on mismatched surfaces.
std::int64_t pairing(const MukaiVector& v, const MukaiVector& w);

/// chi = r + s (Riemann-Roch on a K3).
std::int64_t euler_chi(const MukaiVector& v);

/// Expected dimension v^2 + 2 of the moduli space with Mukai vector v.
std::int64_t moduli_dim(const MukaiVector& v);

}  // namespace k3fm
