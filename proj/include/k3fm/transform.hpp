#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <optional>
#include <vector>

#include "k3fm/mukai.hpp"

namespace k3fm {

/// Provenance of a transform matrix. Every matrix carries one.
enum class Convention { PaperLiteralReuse, PaperLiteralBasisChange, DerivedConsistent };

/// How the "-c1" term of the published ch1 formula crosses from X to Xhat:
/// Reuse keeps coefficients (aH + bl -> aHh + blh), BasisChange rewrites the
/// class through identify().
enum class CrossingRule { Reuse, BasisChange };

std::string_view to_string(Convention c);
std::string_view to_string(CrossingRule rule);
std::optional<CrossingRule> crossing_rule_from_string(std::string_view text);
Convention literal_convention(CrossingRule rule);

/// Index k of a WIT_k sheaf, k in {0, 1, 2}.
class WitIndex {
 public:
  explicit WitIndex(int k);
  int value() const { return k_; }
  /// The index on the other side of the transform, 2 - k.
  WitIndex dual() const { return WitIndex(2 - k_); }
  friend bool operator==(WitIndex, WitIndex) = default;

 private:
  int k_;
};

using Matrix4 = std::array<std::array<std::int64_t, 4>, 4>;

/// Integer matrix acting on Mukai coordinates (r, a, b, s); rows are output
/// coordinates, columns are images of the basis vectors e_r, e_H, e_l, e_s.
struct TransformMatrix {
  Matrix4 m{};
  Surface source = Surface::X;
  Surface target = Surface::Xhat;
  Convention convention = Convention::DerivedConsistent;

  /// Throws DomainError unless v lives on `source`.
  MukaiVector apply(const MukaiVector& v) const;
  /// Same entries, source and target swapped.
  TransformMatrix reversed() const;

  friend bool operator==(const TransformMatrix&, const TransformMatrix&) = default;
};

/// Source-lattice Gram matrix of the Mukai pairing in the basis e_r, e_H, e_l, e_s.
Matrix4 mukai_gram();
std::string_view basis_label(int index);

/// Verbatim transcription of the published Chern-character formulas
///   ch0 = -ch0 + c1.l + 2 ch2
///   ch1 = -c1 - (c1.H + 5 ch2) lh + (c1.l - 2 c1.H) Hh
///   ch2 = -5 ch2 - 2 c1.l
/// Input must live on X; output lives on Xhat.
ChernCharacter phi_paper_literal(const ChernCharacter& ch, CrossingRule rule);

/// Matrix of phi_paper_literal (linear, so built from basis images).
TransformMatrix paper_literal_matrix(CrossingRule rule);

/// The consistent transform matrix, reconstructed once by solve_transform under
/// the full constraint set and cached.
const TransformMatrix& derived_matrix();

/// Alternating-sum image ch(R Phi v) in Mukai coordinates. The matrix is an
/// involution, so the Xhat -> X direction uses it too.
MukaiVector phi_derived(const MukaiVector& v);

struct SheafTransform {
  MukaiVector vector;
  WitIndex wit;
};

/// Mukai vector of the transform sheaf of a WIT_k sheaf: (-1)^k phi_derived(v),
/// which is WIT_{2-k} on the other surface.
SheafTransform transform_sheaf(const MukaiVector& v, WitIndex wit);

/// ch(R Psi F) = chi(F) ch(O) + ch(R Phi F). Input must live on X.
MukaiVector psi(const MukaiVector& v);

/// Lattice action of the inverse direction Xhat -> X. Psi is an involution on
/// the lattice, so this is the same formula with the surfaces swapped.
MukaiVector psi_hat(const MukaiVector& v);

struct PairingDefect {
  int i = 0;
  int j = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct IsometryReport {
  bool passed = true;
  std::vector<PairingDefect> defects;

  bool has_defect(int i, int j) const;
};

/// Compares the Mukai pairing on all 10 unordered basis pairs before and after t.
IsometryReport check_isometry(const TransformMatrix& t);

}  // namespace k3fm
