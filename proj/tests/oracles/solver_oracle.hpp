#pragma once
// Row-wise exhaustive reference for the transform search. Shares nothing with
// the library beyond plain integer arrays: every constraint is rewritten here
// from scratch as a condition on individual rows, candidate rows are taken
// from the full box, and the Cartesian product is checked against the
// row-coupling conditions and the isometry condition on the whole matrix.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using Row = std::array<std::int64_t, 4>;
using Mat = std::array<Row, 4>;

enum class Ch1Rule { reuse, basis_change };

struct Constraints {
  bool c1 = false, c2 = false, c3 = false, c4 = false, c5 = false, c6 = false;
  std::optional<Ch1Rule> ch1;
};

// Coordinates (r, a, b, s), c = aH + bl, ch2 = s - r, c.H = 2a, c.l = -12b.
//   ch0' = -ch0 + c.l + 2 ch2          = -3r        - 12b + 2s
//   s'   = ch0' + (-5 ch2 - 2 c.l)     =  2r        + 12b - 3s
// lh-coefficient of -c1 - (c.H + 5 ch2) lh:
//   reuse:        -b              - 2a - 5(s - r) = 5r - 2a -  b - 5s
//   basis change: -c1 = -a(5Hh + 2lh) - b(-12Hh - 5lh), lh part -2a + 5b
//                 -2a + 5b - 2a - 5(s - r)        = 5r - 4a + 5b - 5s
inline constexpr Row kRankRow{-3, 0, -12, 2};
inline constexpr Row kSRow{2, 0, 12, -3};
inline constexpr Row kReuseRow{5, -2, -1, -5};
inline constexpr Row kBasisChangeRow{5, -4, 5, -5};

// Pairing matrix on (r, a, b, s): <x, y> = 2 a a' - 12 b b' - r s' - r' s.
inline std::int64_t form(const Row& x, const Row& y) {
  return 2 * x[1] * y[1] - 12 * x[2] * y[2] - x[0] * y[3] - y[0] * x[3];
}

inline Row column(const Mat& m, int j) { return {m[0][j], m[1][j], m[2][j], m[3][j]}; }

inline bool isometric(const Mat& m) {
  for (int i = 0; i < 4; ++i) {
    Row ei{}, ci = column(m, i);
    ei[i] = 1;
    for (int j = i; j < 4; ++j) {
      Row ej{}, cj = column(m, j);
      ej[j] = 1;
      if (form(ci, cj) != form(ei, ej)) return false;
    }
  }
  return true;
}

// Conditions that only look at row i.
inline bool row_admissible(const Constraints& c, int i, const Row& row) {
  // C2: T(1,0,0,1) = (-1,0,0,-1), i.e. row[0] + row[3] = target_i.
  static constexpr Row trivial_target{-1, 0, 0, -1};
  // C3: T(0,0,0,1) = (2,0,-1,-3), i.e. row[3] = target_i.
  static constexpr Row point_target{2, 0, -1, -3};
  if (c.c2 && row[0] + row[3] != trivial_target[i]) return false;
  if (c.c3 && row[3] != point_target[i]) return false;
  // C4: 2 a' = -2 a for all inputs.
  if (c.c4 && i == 1 && row != Row{0, -1, 0, 0}) return false;
  if (c.c6 && i == 0 && row != kRankRow) return false;
  if (c.c6 && i == 3 && row != kSRow) return false;
  if (c.ch1 && i == 2 && row != (*c.ch1 == Ch1Rule::reuse ? kReuseRow : kBasisChangeRow)) return false;
  return true;
}

inline bool row_pinned(const Constraints& c, int i) {
  return (c.c6 && (i == 0 || i == 3)) || (c.c4 && i == 1) || (c.ch1 && i == 2);
}

inline std::vector<Row> candidate_rows(const Constraints& c, int i, std::int64_t bound) {
  std::vector<Row> out;
  if (row_pinned(c, i)) {
    // Pinned rows are exempt from the box; enumerate the pinned value only.
    Row pinned = i == 0 ? kRankRow : i == 3 ? kSRow : i == 1 ? Row{0, -1, 0, 0}
               : (*c.ch1 == Ch1Rule::reuse ? kReuseRow : kBasisChangeRow);
    if (row_admissible(c, i, pinned)) out.push_back(pinned);
    return out;
  }
  Row row{};
  for (row[0] = -bound; row[0] <= bound; ++row[0])
    for (row[1] = -bound; row[1] <= bound; ++row[1])
      for (row[2] = -bound; row[2] <= bound; ++row[2])
        for (row[3] = -bound; row[3] <= bound; ++row[3])
          if (row_admissible(c, i, row)) out.push_back(row);
  return out;
}

// Every admissible matrix, in lexicographic row-major order.
inline std::vector<Mat> solve(const Constraints& c, std::int64_t bound) {
  std::array<std::vector<Row>, 4> rows;
  for (int i = 0; i < 4; ++i) rows[i] = candidate_rows(c, i, bound);
  std::vector<Mat> out;
  for (const Row& r0 : rows[0])
    for (const Row& r3 : rows[3]) {
      // C5: chi' = r' + s' = -(r + s), i.e. row0 + row3 = (-1, 0, 0, -1).
      if (c.c5 && (r0[0] + r3[0] != -1 || r0[1] + r3[1] != 0 || r0[2] + r3[2] != 0 || r0[3] + r3[3] != -1))
        continue;
      for (const Row& r1 : rows[1])
        for (const Row& r2 : rows[2]) {
          const Mat m{r0, r1, r2, r3};
          if (c.c1 && !isometric(m)) continue;
          out.push_back(m);
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
