#include "exact_lp.hpp"

#include <optional>
#include <vector>

namespace icm::detail {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), cells_(rows * (cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  std::size_t rows() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t pr, std::size_t pc, std::vector<Rational>& objective) {
    const Rational p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == pr) continue;
      const Rational f = at(r, pc);
      if (f == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c)
        if (at(pr, c) != 0) at(r, c) -= f * at(pr, c);
    }
    const Rational f = objective[pc];
    if (f != 0)
      for (std::size_t c = 0; c <= cols_; ++c)
        if (at(pr, c) != 0) objective[c] -= f * at(pr, c);
    basis_[pr] = pc;
  }

 private:
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

bool convex_combination_feasible(std::span<const LatticePoint> points,
                                 std::span<const Rational> target, Fit fit) {
  if (points.empty()) return false;
  const std::size_t d = target.size();
  const std::size_t n = points.size();
  for (const auto& p : points) require_same_dim(p.dim(), d, "convex_combination_feasible");

  const std::size_t slacks = fit == Fit::Dominated ? d : 0;
  const std::size_t rows = d + 1;

  // Row 0 is sum λ = 1; row j+1 is coordinate j. Rows whose slack can serve
  // as the initial basic variable need no artificial.
  std::vector<bool> needs_artificial(rows, true);
  std::vector<bool> negate(rows, false);
  for (std::size_t j = 0; j < d; ++j) {
    negate[j + 1] = target[j] < 0;
    if (fit == Fit::Dominated && !negate[j + 1]) needs_artificial[j + 1] = false;
  }
  std::size_t artificials = 0;
  for (bool a : needs_artificial) artificials += a;

  const std::size_t real_cols = n + slacks;
  Tableau t(rows, real_cols + artificials);
  std::size_t next_art = real_cols;
  for (std::size_t r = 0; r < rows; ++r) {
    const int sign = negate[r] ? -1 : 1;
    if (r == 0) {
      for (std::size_t i = 0; i < n; ++i) t.at(0, i) = 1;
      t.rhs(0) = 1;
    } else {
      const std::size_t j = r - 1;
      for (std::size_t i = 0; i < n; ++i) t.at(r, i) = Rational(points[i][j]) * sign;
      if (slacks) t.at(r, n + j) = sign;
      t.rhs(r) = target[j] * sign;
    }
    if (needs_artificial[r]) {
      t.at(r, next_art) = 1;
      t.basic(r) = next_art++;
    } else {
      t.basic(r) = n + (r - 1);
    }
  }

  // Phase-one objective: minimize the sum of artificials, expressed in the
  // nonbasic variables.
  std::vector<Rational> objective(t.cols() + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!needs_artificial[r]) continue;
    for (std::size_t c = 0; c < real_cols; ++c) objective[c] -= t.at(r, c);
    objective[t.cols()] -= t.rhs(r);
  }

  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < real_cols; ++c) {
      if (objective[c] < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) break;
    std::optional<std::size_t> leaving;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& a = t.at(r, *entering);
      if (a <= 0) continue;
      Rational ratio = t.rhs(r) / a;
      if (!leaving || ratio < best || (ratio == best && t.basic(r) < t.basic(*leaving))) {
        leaving = r;
        best = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so an entering column always has
    // a positive entry.
    if (!leaving) break;
    t.pivot(*leaving, *entering, objective);
  }
  return objective[t.cols()] == 0;
}

}  // namespace icm::detail
