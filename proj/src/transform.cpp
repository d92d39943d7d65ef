#include "k3fm/transform.hpp"

#include <stdexcept>

#include "k3fm/errors.hpp"
#include "k3fm/solver.hpp"

namespace k3fm {

std::string_view to_string(Convention c) {
  switch (c) {
    case Convention::PaperLiteralReuse:
      return "paper-literal-reuse";
    case Convention::PaperLiteralBasisChange:
      return "paper-literal-basischange";
    case Convention::DerivedConsistent:
      return "derived-consistent";
  }
  return "unknown";
}

std::string_view to_string(CrossingRule rule) {
  return rule == CrossingRule::Reuse ? "reuse" : "basischange";
}

std::optional<CrossingRule> crossing_rule_from_string(std::string_view text) {
  if (text == "reuse") return CrossingRule::Reuse;
  if (text == "basischange") return CrossingRule::BasisChange;
  return std::nullopt;
}

Convention literal_convention(CrossingRule rule) {
  return rule == CrossingRule::Reuse ? Convention::PaperLiteralReuse
                                     : Convention::PaperLiteralBasisChange;
}

WitIndex::WitIndex(int k) : k_(k) {
  if (k < 0 || k > 2) throw DomainError("WIT index must be 0, 1 or 2");
}

MukaiVector TransformMatrix::apply(const MukaiVector& v) const {
  if (v.surface() != source) {
    throw DomainError("vector lives on " + std::string(to_string(v.surface())) +
                      " but the transform starts on " + std::string(to_string(source)));
  }
  const MukaiCoords x = coordinates(v);
  MukaiCoords y{};
  for (int i = 0; i < 4; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < 4; ++j) acc = checked::add(acc, checked::mul(m[i][j], x[j]));
    y[i] = acc;
  }
  return from_coordinates(y, target);
}

TransformMatrix TransformMatrix::reversed() const { return {m, target, source, convention}; }

Matrix4 mukai_gram() {
  Matrix4 g{};
  g[0][3] = g[3][0] = -1;
  g[1][1] = kPolarizationSquare;
  g[2][2] = kEllSquare;
  return g;
}

std::string_view basis_label(int index) {
  static constexpr std::string_view labels[] = {"e_r", "e_H", "e_l", "e_s"};
  return labels[index];
}

ChernCharacter phi_paper_literal(const ChernCharacter& ch, CrossingRule rule) {
  if (ch.c1.surface != Surface::X) {
    throw DomainError("the published formulas take a Chern character on X");
  }
  using namespace checked;
  const std::int64_t c1_dot_h = intersect(ch.c1, polarization(Surface::X));
  const std::int64_t c1_dot_l = intersect(ch.c1, ell_class(Surface::X));

  const DivisorClass minus_c1 = rule == CrossingRule::Reuse
                                    ? DivisorClass{neg(ch.c1.a), neg(ch.c1.b), Surface::Xhat}
                                    : -identify(ch.c1);
  const std::int64_t lhat_coeff = neg(add(c1_dot_h, mul(5, ch.ch2)));
  const std::int64_t hhat_coeff = sub(c1_dot_l, mul(2, c1_dot_h));

  ChernCharacter out;
  out.ch0 = add(add(neg(ch.ch0), c1_dot_l), mul(2, ch.ch2));
  out.c1 = minus_c1 + lhat_coeff * ell_class(Surface::Xhat) + hhat_coeff * polarization(Surface::Xhat);
  out.ch2 = sub(mul(-5, ch.ch2), mul(2, c1_dot_l));
  return out;
}

TransformMatrix paper_literal_matrix(CrossingRule rule) {
  TransformMatrix t;
  t.source = Surface::X;
  t.target = Surface::Xhat;
  t.convention = literal_convention(rule);
  for (int j = 0; j < 4; ++j) {
    MukaiCoords unit{};
    unit[j] = 1;
    const MukaiVector image =
        from_chern(phi_paper_literal(to_chern(from_coordinates(unit, Surface::X)), rule));
    const MukaiCoords y = coordinates(image);
    for (int i = 0; i < 4; ++i) t.m[i][j] = y[i];
  }
  return t;
}

const TransformMatrix& derived_matrix() {
  static const TransformMatrix matrix = [] {
    const auto solutions = solve_transform(ConstraintSet::standard(), 12);
    if (solutions.size() != 1) {
      throw std::logic_error("standard constraint set no longer determines a unique transform");
    }
    return solutions.front();
  }();
  return matrix;
}

MukaiVector phi_derived(const MukaiVector& v) {
  const TransformMatrix& t = derived_matrix();
  return v.surface() == t.source ? t.apply(v) : t.reversed().apply(v);
}

SheafTransform transform_sheaf(const MukaiVector& v, WitIndex wit) {
  const MukaiVector image = phi_derived(v);
  return {wit.value() % 2 == 0 ? image : -image, wit.dual()};
}

namespace {

MukaiVector psi_formula(const MukaiVector& v) {
  return phi_derived(v) + euler_chi(v) * trivial_vector(other(v.surface()));
}

}  // namespace

MukaiVector psi(const MukaiVector& v) {
  if (v.surface() != Surface::X) throw DomainError("psi takes a vector on X");
  return psi_formula(v);
}

MukaiVector psi_hat(const MukaiVector& v) {
  if (v.surface() != Surface::Xhat) throw DomainError("psi_hat takes a vector on Xhat");
  return psi_formula(v);
}

bool IsometryReport::has_defect(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& d : defects) {
    if (d.i == i && d.j == j) return true;
  }
  return false;
}

IsometryReport check_isometry(const TransformMatrix& t) {
  const Matrix4 gram = mukai_gram();
  MukaiVector images[4];
  for (int j = 0; j < 4; ++j) {
    images[j] = from_coordinates({t.m[0][j], t.m[1][j], t.m[2][j], t.m[3][j]}, t.target);
  }
  IsometryReport report;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const std::int64_t actual = pairing(images[i], images[j]);
      if (actual != gram[i][j]) report.defects.push_back({i, j, gram[i][j], actual});
    }
  }
  report.passed = report.defects.empty();
  return report;
}

}  // namespace k3fm
