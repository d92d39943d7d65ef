#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "k3fm/mukai.hpp"

namespace k3fm {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when q == 1.
std::string format_rational(const Rational& q);

struct StabilityNumbers {
  Rational slope;
  Rational reduced_chi;
  std::int64_t delta = 0;
};

/// degree(c) / r. Throws DomainError for r == 0.
Rational slope(const MukaiVector& v);
/// chi / r = (r + s) / r. Throws DomainError for r == 0.
Rational reduced_chi(const MukaiVector& v);
/// Bogomolov discriminant c^2 - 2 r ch2; equals v^2 + 2 r^2.
std::int64_t bogomolov_delta(const MukaiVector& v);
StabilityNumbers stability_numbers(const MukaiVector& v);

/// Gieseker order on a K3: lexicographic on (slope, chi / r). Both ranks must be
/// positive and on the same surface.
std::weak_ordering gieseker_compare(const MukaiVector& v, const MukaiVector& w);

struct FilterSet {
  bool slope = false;           // slope(sub) >= slope(v)
  bool gieseker = false;        // (slope, chi/r)(sub) >= (slope, chi/r)(v)
  bool bogomolov_sub = false;   // delta(sub) >= 0
  bool bogomolov_quot = false;  // delta(quotient) >= 0
  bool quot_slope = false;      // slope(quotient) <= slope(v)

  static FilterSet all();
  /// Comma-separated flag names: slope, gieseker, bogomolov-sub, bogomolov-quot,
  /// quot-slope, or "all". Throws ParseError on unknown names.
  static FilterSet parse(std::string_view list);
};

struct DestabCandidate {
  MukaiVector sub;
  MukaiVector quotient;
  StabilityNumbers sub_numbers;
  StabilityNumbers quotient_numbers;
};

/// Every integer sub-vector (r', a', b', s') with 0 < r' < r, |a'|, |b'| <= box and
/// |s'| <= box * max(|s|, r, 8) passing the selected filters, sorted by the
/// coordinates of the sub-vector. Rank 1 yields an empty list; box < 1 or
/// r <= 0 is a DomainError. The rank range is split across `workers` threads.
std::vector<DestabCandidate> enumerate_destabilizers(const MukaiVector& v, std::int64_t box,
                                                     const FilterSet& filters, unsigned workers = 1);

}  // namespace k3fm
