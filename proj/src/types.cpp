#include "icm/types.hpp"

#include <algorithm>

namespace icm {

bool LatticePoint::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c >= 0; });
}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer LatticePoint::total() const {
  Integer s = 0;
  for (const auto& c : coords_) s += c;
  return s;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& o) {
  require_same_dim(dim(), o.dim(), "LatticePoint::operator+=");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& o) {
  require_same_dim(dim(), o.dim(), "LatticePoint::operator-=");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = a.coords_[i].compare(b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }

bool dominated_by(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

LatticePoint componentwise_max(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (b[i] > r[i]) r[i] = b[i];
  return r;
}

LatticePoint componentwise_min(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (b[i] < r[i]) r[i] = b[i];
  return r;
}

LatticePoint componentwise_min(std::span<const LatticePoint> pts) {
  LatticePoint r = pts.front();
  for (const auto& p : pts.subspan(1)) r = componentwise_min(r, p);
  return r;
}

LatticePoint componentwise_max(std::span<const LatticePoint> pts) {
  LatticePoint r = pts.front();
  for (const auto& p : pts.subspan(1)) r = componentwise_max(r, p);
  return r;
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b)
    throw DimensionMismatch(std::string(where) + ": dimension " + std::to_string(a) +
                            " vs " + std::to_string(b));
}

}  // namespace icm
