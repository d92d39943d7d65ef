#include "k3fm/solver.hpp"

#include <algorithm>
#include <thread>

#include "k3fm/errors.hpp"

namespace k3fm {

bool ConstraintSet::empty() const {
  return !isometry && !trivial_anchor && !point_anchor && !degree_flip && !chi_flip &&
         !paper_rank_ch2_rows && !paper_ch1_row;
}

ConstraintSet ConstraintSet::standard() {
  ConstraintSet c;
  c.isometry = c.trivial_anchor = c.point_anchor = c.degree_flip = c.chi_flip =
      c.paper_rank_ch2_rows = true;
  return c;
}

MukaiVector point_anchor_target() {
  // -T(v(O_X) - v(O_p)) = v(IW_hat(1)) = (3, -lh, -2) together with
  // T v(O_X) = -v(O_Xhat) gives T v(O_p) = v(IW_hat(1)) - v(O_Xhat).
  const MukaiVector iw_hat_1{3, -ell_class(Surface::Xhat), -2};
  return iw_hat_1 - trivial_vector(Surface::Xhat);
}

namespace {

using Column = std::array<std::int64_t, 4>;
constexpr int kColumnOrder[4] = {3, 0, 1, 2};

std::int64_t mukai_form(const Column& x, const Column& y) {
  return 2 * x[1] * y[1] - 12 * x[2] * y[2] - x[0] * y[3] - x[3] * y[0];
}

class Search {
 public:
  Search(const ConstraintSet& c, int bound) : c_(c), bound_(bound), gram_(mukai_gram()) {
    if (c.paper_rank_ch2_rows) {
      // ch0 and ch2 rows agree for both crossing rules.
      const auto literal = paper_literal_matrix(CrossingRule::Reuse);
      pin(0, literal.m[0]);
      pin(3, literal.m[3]);
    }
    if (c.degree_flip) pin(1, {0, -1, 0, 0});
    if (c.paper_ch1_row) pin(2, paper_literal_matrix(*c.paper_ch1_row).m[2]);
    point_ = coordinates(point_anchor_target());
    trivial_image_ = coordinates(-trivial_vector(Surface::Xhat));
    for (int j = 0; j < 4; ++j) build_candidates(j);
  }

  bool feasible() const { return !conflict_; }

  double search_space() const {
    double size = 1;
    for (const auto& list : candidates_) size *= static_cast<double>(list.size());
    return size;
  }

  const std::vector<Column>& first_candidates() const { return candidates_[kColumnOrder[0]]; }

  void run(std::size_t begin, std::size_t end, std::vector<Matrix4>& out) const {
    std::array<Column, 4> chosen{};
    for (std::size_t k = begin; k < end; ++k) {
      chosen[kColumnOrder[0]] = first_candidates()[k];
      descend(1, chosen, out);
    }
  }

 private:
  void pin(int row, const std::array<std::int64_t, 4>& values) {
    if (pinned_[row] && *pinned_[row] != values) conflict_ = true;
    pinned_[row] = values;
  }

  bool column_ok(int j, const Column& col) const {
    for (int i = 0; i < 4; ++i) {
      if (pinned_[i]) {
        if ((*pinned_[i])[j] != col[i]) return false;
      } else if (col[i] < -bound_ || col[i] > bound_) {
        return false;
      }
    }
    if (c_.chi_flip) {
      const std::int64_t source_chi = (j == 0 || j == 3) ? 1 : 0;
      if (col[0] + col[3] != -source_chi) return false;
    }
    if (c_.point_anchor && j == 3 && col != point_) return false;
    if (c_.isometry && mukai_form(col, col) != gram_[j][j]) return false;
    return true;
  }

  void build_candidates(int j) {
    std::array<std::int64_t, 4> lo{}, hi{};
    for (int i = 0; i < 4; ++i) {
      if (pinned_[i]) {
        lo[i] = hi[i] = (*pinned_[i])[j];
      } else {
        lo[i] = -bound_;
        hi[i] = bound_;
      }
    }
    Column col{};
    for (col[0] = lo[0]; col[0] <= hi[0]; ++col[0])
      for (col[1] = lo[1]; col[1] <= hi[1]; ++col[1])
        for (col[2] = lo[2]; col[2] <= hi[2]; ++col[2])
          for (col[3] = lo[3]; col[3] <= hi[3]; ++col[3])
            if (column_ok(j, col)) candidates_[j].push_back(col);
  }

  bool compatible(int j, const Column& col, const std::array<Column, 4>& chosen, int depth) const {
    if (!c_.isometry) return true;
    for (int d = 0; d < depth; ++d) {
      const int k = kColumnOrder[d];
      if (mukai_form(col, chosen[k]) != gram_[j][k]) return false;
    }
    return true;
  }

  void descend(int depth, std::array<Column, 4>& chosen, std::vector<Matrix4>& out) const {
    if (depth == 4) {
      Matrix4 m{};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = chosen[j][i];
      out.push_back(m);
      return;
    }
    const int j = kColumnOrder[depth];
    if (j == 0 && c_.trivial_anchor) {
      // T(e_r + e_s) is pinned, so column 0 follows from column 3.
      Column col{};
      for (int i = 0; i < 4; ++i) col[i] = trivial_image_[i] - chosen[3][i];
      if (column_ok(0, col) && compatible(0, col, chosen, depth)) {
        chosen[0] = col;
        descend(depth + 1, chosen, out);
      }
      return;
    }
    for (const Column& col : candidates_[j]) {
      if (!compatible(j, col, chosen, depth)) continue;
      chosen[j] = col;
      descend(depth + 1, chosen, out);
    }
  }

  const ConstraintSet& c_;
  std::int64_t bound_;
  Matrix4 gram_;
  std::array<std::optional<std::array<std::int64_t, 4>>, 4> pinned_;
  bool conflict_ = false;
  Column point_{};
  Column trivial_image_{};
  std::array<std::vector<Column>, 4> candidates_;
};

}  // namespace

std::vector<TransformMatrix> solve_transform(const ConstraintSet& constraints, int bound,
                                             unsigned workers) {
  if (constraints.empty()) throw DomainError("solve_transform needs at least one constraint");
  if (bound < 1) throw DomainError("solve_transform needs bound >= 1");

  const Search search(constraints, bound);
  if (!search.feasible()) return {};
  if (!constraints.isometry && search.search_space() > 1e8) {
    throw DomainError("search space too large without the isometry constraint; lower the bound");
  }

  const std::size_t total = search.first_candidates().size();
  workers = std::clamp<unsigned>(workers, 1, 64);
  std::vector<std::vector<Matrix4>> partial(workers);
  if (workers == 1) {
    search.run(0, total, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, w * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      threads.emplace_back([&search, &partial, w, begin, end] { search.run(begin, end, partial[w]); });
    }
  }

  std::vector<Matrix4> all;
  for (auto& p : partial) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());

  std::vector<TransformMatrix> out;
  out.reserve(all.size());
  for (const auto& m : all) out.push_back({m, Surface::X, Surface::Xhat, Convention::DerivedConsistent});
  return out;
}

}  // namespace k3fm
