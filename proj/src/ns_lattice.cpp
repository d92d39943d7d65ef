#include "k3fm/ns_lattice.hpp"

#include "k3fm/errors.hpp"

namespace k3fm {

namespace {

void require_same_surface(const DivisorClass& x, const DivisorClass& y) {
  if (x.surface != y.surface) {
    throw DomainError("divisor classes live on different surfaces");
  }
}

}  // namespace

std::string_view to_string(Surface s) { return s == Surface::X ? "X" : "Xhat"; }

std::optional<Surface> surface_from_string(std::string_view text) {
  if (text == "X") return Surface::X;
  if (text == "Xhat" || text == "Xh") return Surface::Xhat;
  return std::nullopt;
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  require_same_surface(x, y);
  return {checked::add(x.a, y.a), checked::add(x.b, y.b), x.surface};
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  require_same_surface(x, y);
  return {checked::sub(x.a, y.a), checked::sub(x.b, y.b), x.surface};
}

DivisorClass operator-(const DivisorClass& x) {
  return {checked::neg(x.a), checked::neg(x.b), x.surface};
}

DivisorClass operator*(std::int64_t k, const DivisorClass& x) {
  return {checked::mul(k, x.a), checked::mul(k, x.b), x.surface};
}

std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2) {
  require_same_surface(d1, d2);
  return checked::add(checked::mul(kPolarizationSquare, checked::mul(d1.a, d2.a)),
                      checked::mul(kEllSquare, checked::mul(d1.b, d2.b)));
}

std::int64_t degree(const DivisorClass& d) { return intersect(d, polarization(d.surface)); }

DivisorClass identify(const DivisorClass& d) {
  const auto& m = kIdentifyMatrix;
  return {checked::add(checked::mul(m[0][0], d.a), checked::mul(m[0][1], d.b)),
          checked::add(checked::mul(m[1][0], d.a), checked::mul(m[1][1], d.b)), other(d.surface)};
}

std::int64_t rr_chi_line(const DivisorClass& d) {
  // The lattice is even, so the division is exact.
  return checked::add(2, intersect(d, d) / 2);
}

}  // namespace k3fm
