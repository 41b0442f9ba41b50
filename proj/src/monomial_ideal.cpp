#include "icm/monomial_ideal.hpp"

#include <algorithm>

namespace icm {

MonomialIdeal MonomialIdeal::minimalize(std::span<const ExponentVector> points, std::size_t dim) {
  if (points.empty()) throw PreconditionError("minimalize: empty generator set (zero ideal)");
  if (dim == 0) throw PreconditionError("minimalize: dimension must be at least 1");
  std::vector<ExponentVector> sorted(points.begin(), points.end());
  for (const auto& p : sorted) {
    require_same_dim(p.dim(), dim, "minimalize");
    if (!p.is_nonnegative()) throw PreconditionError("minimalize: negative exponent");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // A proper divisor of p is lexicographically smaller than p, so a single
  // pass against the already kept points suffices.
  std::vector<ExponentVector> kept;
  for (auto& p : sorted) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const ExponentVector& g) { return dominated_by(g, p); });
    if (!dominated) kept.push_back(std::move(p));
  }
  return MonomialIdeal(dim, std::move(kept));
}

MonomialIdeal MonomialIdeal::minimalize(std::initializer_list<ExponentVector> points) {
  if (points.size() == 0) throw PreconditionError("minimalize: empty generator set (zero ideal)");
  return minimalize(std::span<const ExponentVector>(points.begin(), points.size()),
                    points.begin()->dim());
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  if (dim == 0) throw PreconditionError("unit: dimension must be at least 1");
  return MonomialIdeal(dim, {ExponentVector(dim)});
}

MonomialIdeal MonomialIdeal::prime(std::size_t dim, std::span<const std::size_t> variables) {
  std::vector<ExponentVector> gens;
  for (std::size_t v : variables) {
    if (v >= dim) throw PreconditionError("prime: variable index out of range");
    ExponentVector e(dim);
    e[v] = 1;
    gens.push_back(std::move(e));
  }
  return minimalize(gens, dim);
}

MonomialIdeal MonomialIdeal::maximal(std::size_t dim) {
  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  return prime(dim, all);
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

ExponentVector MonomialIdeal::generator_box() const { return componentwise_max(gens_); }

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I.dim(), J.dim(), "product");
  std::vector<ExponentVector> sums;
  sums.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) sums.push_back(a + b);
  return MonomialIdeal::minimalize(sums, I.dim());
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I.dim(), J.dim(), "intersect");
  std::vector<ExponentVector> lcms;
  lcms.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) lcms.push_back(componentwise_max(a, b));
  return MonomialIdeal::minimalize(lcms, I.dim());
}

namespace {

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const ExponentVector& g) {
  std::vector<ExponentVector> quotients;
  quotients.reserve(I.gens().size());
  for (const auto& a : I.gens()) {
    ExponentVector q(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a[i] > g[i]) q[i] = a[i] - g[i];
    quotients.push_back(std::move(q));
  }
  return MonomialIdeal::minimalize(quotients, I.dim());
}

}  // namespace

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I.dim(), J.dim(), "colon");
  MonomialIdeal result = colon_by_monomial(I, J.gens().front());
  for (std::size_t k = 1; k < J.gens().size(); ++k)
    result = intersect(result, colon_by_monomial(I, J.gens()[k]));
  return result;
}

bool contains(const MonomialIdeal& I, const ExponentVector& a) {
  require_same_dim(I.dim(), a.dim(), "contains");
  return std::any_of(I.gens().begin(), I.gens().end(),
                     [&](const ExponentVector& g) { return dominated_by(g, a); });
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_dim(I.dim(), J.dim(), "contains");
  return std::all_of(J.gens().begin(), J.gens().end(),
                     [&](const ExponentVector& g) { return contains(I, g); });
}

Integer ord(const MonomialIdeal& I) {
  Integer best = I.gens().front().total();
  for (const auto& g : I.gens()) best = std::min(best, g.total());
  return best;
}

MonomialIdeal translate(const MonomialIdeal& I, const ExponentVector& shift) {
  require_same_dim(I.dim(), shift.dim(), "translate");
  std::vector<ExponentVector> moved;
  moved.reserve(I.gens().size());
  for (const auto& g : I.gens()) moved.push_back(g + shift);
  return MonomialIdeal::minimalize(moved, I.dim());
}

std::pair<MonomialIdeal, ExponentVector> normalize_translation(const MonomialIdeal& I) {
  ExponentVector m = componentwise_min(I.gens());
  std::vector<ExponentVector> moved;
  moved.reserve(I.gens().size());
  for (const auto& g : I.gens()) moved.push_back(g - m);
  return {MonomialIdeal::minimalize(moved, I.dim()), std::move(m)};
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
  os << '<';
  for (std::size_t i = 0; i < I.gens().size(); ++i) os << (i ? "," : "") << I.gens()[i];
  return os << '>';
}

}  // namespace icm
