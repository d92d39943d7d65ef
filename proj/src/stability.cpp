#include "k3fm/stability.hpp"

#include <algorithm>
#include <thread>

#include "k3fm/errors.hpp"

namespace k3fm {

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational slope(const MukaiVector& v) {
  if (v.r == 0) throw DomainError("slope is undefined for rank 0");
  return Rational(degree(v.c), v.r);
}

Rational reduced_chi(const MukaiVector& v) {
  if (v.r == 0) throw DomainError("reduced chi is undefined for rank 0");
  return Rational(euler_chi(v), v.r);
}

std::int64_t bogomolov_delta(const MukaiVector& v) {
  const ChernCharacter ch = to_chern(v);
  return checked::sub(intersect(ch.c1, ch.c1), checked::mul(2, checked::mul(ch.ch0, ch.ch2)));
}

StabilityNumbers stability_numbers(const MukaiVector& v) {
  return {slope(v), reduced_chi(v), bogomolov_delta(v)};
}

namespace {

std::weak_ordering compare(const Rational& x, const Rational& y) {
  if (x < y) return std::weak_ordering::less;
  if (y < x) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace

std::weak_ordering gieseker_compare(const MukaiVector& v, const MukaiVector& w) {
  if (v.r <= 0 || w.r <= 0) throw DomainError("Gieseker comparison needs positive ranks");
  if (v.surface() != w.surface()) throw DomainError("Gieseker comparison across surfaces");
  if (auto by_slope = compare(slope(v), slope(w)); by_slope != 0) return by_slope;
  return compare(reduced_chi(v), reduced_chi(w));
}

FilterSet FilterSet::all() { return {true, true, true, true, true}; }

FilterSet FilterSet::parse(std::string_view list) {
  FilterSet f;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view name = list.substr(0, comma);
    if (name == "all") {
      f = all();
    } else if (name == "slope") {
      f.slope = true;
    } else if (name == "gieseker") {
      f.gieseker = true;
    } else if (name == "bogomolov-sub") {
      f.bogomolov_sub = true;
    } else if (name == "bogomolov-quot") {
      f.bogomolov_quot = true;
    } else if (name == "quot-slope") {
      f.quot_slope = true;
    } else if (!name.empty()) {
      throw ParseError("unknown filter '" + std::string(name) + "'");
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return f;
}

namespace {

void scan_rank(const MukaiVector& v, std::int64_t sub_rank, std::int64_t box, std::int64_t s_box,
               const FilterSet& filters, std::vector<DestabCandidate>& out) {
  const Rational whole_slope = slope(v);
  const Rational whole_chi = reduced_chi(v);
  const Surface surface = v.surface();
  for (std::int64_t a = -box; a <= box; ++a) {
    const Rational sub_slope(kPolarizationSquare * a, sub_rank);
    if (filters.slope && sub_slope < whole_slope) continue;
    for (std::int64_t b = -box; b <= box; ++b) {
      for (std::int64_t s = -s_box; s <= s_box; ++s) {
        const MukaiVector sub{sub_rank, {a, b, surface}, s};
        if (filters.gieseker) {
          const Rational sub_chi(sub_rank + s, sub_rank);
          if (sub_slope < whole_slope || (sub_slope == whole_slope && sub_chi < whole_chi)) continue;
        }
        if (filters.bogomolov_sub && bogomolov_delta(sub) < 0) continue;
        const MukaiVector quotient = v - sub;
        if (filters.bogomolov_quot && bogomolov_delta(quotient) < 0) continue;
        if (filters.quot_slope && slope(quotient) > whole_slope) continue;
        out.push_back({sub, quotient, stability_numbers(sub), stability_numbers(quotient)});
      }
    }
  }
}

}  // namespace

std::vector<DestabCandidate> enumerate_destabilizers(const MukaiVector& v, std::int64_t box,
                                                     const FilterSet& filters, unsigned workers) {
  if (box < 1) throw DomainError("destabilizer enumeration needs box >= 1");
  if (v.r <= 0) throw DomainError("destabilizer enumeration needs positive rank");
  if (v.r == 1) return {};

  const std::int64_t abs_s = v.s < 0 ? checked::neg(v.s) : v.s;
  const std::int64_t s_box = checked::mul(box, std::max({abs_s, v.r, std::int64_t{8}}));
  // Keep a, b, s small enough that every product in the filters stays in range.
  if (box > 1'000'000 || s_box > 1'000'000'000) throw DomainError("enumeration box too large");

  const std::int64_t ranks = v.r - 1;
  workers = static_cast<unsigned>(std::clamp<std::int64_t>(workers, 1, std::min<std::int64_t>(ranks, 64)));
  std::vector<std::vector<DestabCandidate>> partial(workers);
  if (workers == 1) {
    for (std::int64_t r = 1; r < v.r; ++r) scan_rank(v, r, box, s_box, filters, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::int64_t r = 1 + w; r < v.r; r += workers) scan_rank(v, r, box, s_box, filters, partial[w]);
      });
    }
  }

  std::vector<DestabCandidate> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(),
            [](const DestabCandidate& x, const DestabCandidate& y) { return x.sub < y.sub; });
  return out;
}

}  // namespace k3fm
