#include "k3fm/mukai.hpp"

#include "k3fm/errors.hpp"

namespace k3fm {

MukaiCoords coordinates(const MukaiVector& v) { return {v.r, v.c.a, v.c.b, v.s}; }

MukaiVector from_coordinates(const MukaiCoords& x, Surface surface) {
  return {x[0], {x[1], x[2], surface}, x[3]};
}

MukaiVector operator+(const MukaiVector& v, const MukaiVector& w) {
  return {checked::add(v.r, w.r), v.c + w.c, checked::add(v.s, w.s)};
}

MukaiVector operator-(const MukaiVector& v, const MukaiVector& w) {
  return {checked::sub(v.r, w.r), v.c - w.c, checked::sub(v.s, w.s)};
}

MukaiVector operator-(const MukaiVector& v) { return {checked::neg(v.r), -v.c, checked::neg(v.s)}; }

MukaiVector operator*(std::int64_t k, const MukaiVector& v) {
  return {checked::mul(k, v.r), k * v.c, checked::mul(k, v.s)};
}

MukaiVector from_chern(const ChernCharacter& ch) {
  return {ch.ch0, ch.c1, checked::add(ch.ch0, ch.ch2)};
}

ChernCharacter to_chern(const MukaiVector& v) { return {v.r, v.c, checked::sub(v.s, v.r)}; }

std::int64_t pairing(const MukaiVector& v, const MukaiVector& w) {
  if (v.surface() != w.surface()) {
    throw DomainError("Mukai vectors live on different surfaces");
  }
  return checked::sub(intersect(v.c, w.c),
                      checked::add(checked::mul(v.r, w.s), checked::mul(w.r, v.s)));
}

std::int64_t euler_chi(const MukaiVector& v) { return checked::add(v.r, v.s); }

std::int64_t moduli_dim(const MukaiVector& v) { return checked::add(pairing(v, v), 2); }

}  // namespace k3fm
