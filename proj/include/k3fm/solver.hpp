#pragma once

#include <optional>
#include <vector>

#include "k3fm/transform.hpp"

namespace k3fm {

/// Conditions a candidate transform matrix T must satisfy.
///
///  C1 isometry             T preserves the Mukai pairing
///  C2 trivial_anchor       T v(O_X) = -v(O_Xhat)
///  C3 point_anchor         T v(O_p) = point_anchor_target()
///  C4 degree_flip          deg T v = -deg v for all v
///  C5 chi_flip             chi T v = -chi v for all v
///  C6 paper_rank_ch2_rows  the published ch0 and ch2 rows, verbatim
///  paper_ch1_row           the published lh-coefficient row (the one carrying
///                          "5 ch2"), verbatim under the given crossing rule
struct ConstraintSet {
  bool isometry = false;
  bool trivial_anchor = false;
  bool point_anchor = false;
  bool degree_flip = false;
  bool chi_flip = false;
  bool paper_rank_ch2_rows = false;
  std::optional<CrossingRule> paper_ch1_row;

  bool empty() const;
  /// C1 through C6.
  static ConstraintSet standard();
};

/// Image of v(O_p) forced by linearity: the family v(I_W(n)) = v(O_X) - n v(O_p)
/// must be sent to -(1+2n, -n lh, 1-3n), and T v(O_X) = -v(O_Xhat). Yields
/// (2, -lh, -3).
MukaiVector point_anchor_target();

/// Exhaustive search over integer matrices whose unconstrained entries lie in
/// [-bound, bound]; rows pinned by a constraint are exempt from the box.
/// Returns every solution, sorted lexicographically by row-major entries.
/// The search over the first column is split across `workers` threads; the
/// result does not depend on the worker count.
std::vector<TransformMatrix> solve_transform(const ConstraintSet& constraints, int bound,
                                             unsigned workers = 1);

}  // namespace k3fm
