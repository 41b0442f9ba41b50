#include "icm/enumerate.hpp"

#include "icm/newton.hpp"

#include <algorithm>
#include <numeric>

namespace icm {

namespace {

class UpsetWalker {
 public:
  UpsetWalker(const ExponentVector& box, const std::optional<MonomialIdeal>& floor,
              bool include_unit, const std::function<void(const MonomialIdeal&)>& visit,
              std::size_t max_points)
      : dim_(box.dim()), include_unit_(include_unit), visit_(visit) {
    std::size_t total = 1;
    for (const auto& b : box) {
      if (b < 0) throw PreconditionError("for_each_ideal_in_box: negative box");
      if (b >= Integer(max_points)) throw BudgetExceeded("for_each_ideal_in_box: box too large", 0);
      extent_.push_back(b.convert_to<long long>() + 1);
      total *= static_cast<std::size_t>(extent_.back());
      if (total > max_points) throw BudgetExceeded("for_each_ideal_in_box: box too large", 0);
    }
    stride_.assign(dim_, 1);
    for (std::size_t j = 1; j < dim_; ++j) stride_[j] = stride_[j - 1] * extent_[j - 1];

    points_.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      LatticePoint p(dim_);
      std::size_t rest = idx;
      for (std::size_t j = 0; j < dim_; ++j) {
        p[j] = static_cast<long long>(rest % extent_[j]);
        rest /= extent_[j];
      }
      points_.push_back(std::move(p));
    }
    forced_.assign(total, false);
    if (floor) {
      require_same_dim(floor->dim(), dim_, "for_each_ideal_in_box");
      for (std::size_t idx = 0; idx < total; ++idx) forced_[idx] = contains(*floor, points_[idx]);
    }
    // Successors first: decreasing total degree.
    order_.resize(total);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return points_[a].total() > points_[b].total();
    });
    chosen_.assign(total, false);
  }

  void run() { walk(0); }

 private:
  bool successors_chosen(std::size_t idx) const {
    std::size_t rest = idx;
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::size_t c = rest % extent_[j];
      rest /= extent_[j];
      if (c + 1 < static_cast<std::size_t>(extent_[j]) && !chosen_[idx + stride_[j]]) return false;
    }
    return true;
  }

  void walk(std::size_t k) {
    if (k == order_.size()) {
      emit();
      return;
    }
    const std::size_t idx = order_[k];
    if (forced_[idx]) {
      chosen_[idx] = true;
      walk(k + 1);
      chosen_[idx] = false;
      return;
    }
    walk(k + 1);
    if (idx == 0 && !include_unit_) return;
    if (successors_chosen(idx)) {
      chosen_[idx] = true;
      walk(k + 1);
      chosen_[idx] = false;
    }
  }

  void emit() {
    std::vector<ExponentVector> gens;
    for (std::size_t idx = 0; idx < points_.size(); ++idx) {
      if (!chosen_[idx]) continue;
      bool minimal = true;
      std::size_t rest = idx;
      for (std::size_t j = 0; j < dim_ && minimal; ++j) {
        const std::size_t c = rest % extent_[j];
        rest /= extent_[j];
        if (c > 0 && chosen_[idx - stride_[j]]) minimal = false;
      }
      if (minimal) gens.push_back(points_[idx]);
    }
    if (gens.empty()) return;  // the zero ideal
    visit_(MonomialIdeal::minimalize(gens, dim_));
  }

  std::size_t dim_;
  bool include_unit_;
  const std::function<void(const MonomialIdeal&)>& visit_;
  std::vector<long long> extent_;
  std::vector<std::size_t> stride_;
  std::vector<LatticePoint> points_;
  std::vector<bool> forced_;
  std::vector<std::size_t> order_;
  std::vector<bool> chosen_;
};

}  // namespace

void for_each_ideal_in_box(const ExponentVector& box, const std::optional<MonomialIdeal>& floor,
                           bool include_unit,
                           const std::function<void(const MonomialIdeal&)>& visit,
                           std::size_t max_box_points) {
  UpsetWalker(box, floor, include_unit, visit, max_box_points).run();
}

std::vector<MonomialIdeal> integrally_closed_ideals_in_box(const ExponentVector& box) {
  std::vector<MonomialIdeal> out;
  for_each_ideal_in_box(box, std::nullopt, true, [&](const MonomialIdeal& I) {
    if (is_integrally_closed(I)) out.push_back(I);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace icm
