#include "icm/newton.hpp"

#include "exact_lp.hpp"

#include <algorithm>
#include <limits>

namespace icm {

NewtonPolyhedron::NewtonPolyhedron(std::size_t dim, std::vector<LatticePoint> points)
    : dim_(dim), points_(std::move(points)) {
  if (points_.empty()) throw PreconditionError("NewtonPolyhedron: empty point set");
  for (const auto& p : points_) require_same_dim(p.dim(), dim_, "NewtonPolyhedron");
}

NewtonPolyhedron np_of(const MonomialIdeal& I) { return NewtonPolyhedron(I.dim(), I.gens()); }

namespace {

std::vector<Rational> to_rational(const LatticePoint& q) {
  std::vector<Rational> r;
  r.reserve(q.dim());
  for (const auto& c : q) r.emplace_back(c);
  return r;
}

bool member_of(std::span<const LatticePoint> points, std::span<const Rational> q) {
  // Cheap certificates either way before falling back to the LP.
  for (const auto& p : points) {
    bool below = true;
    for (std::size_t j = 0; j < q.size() && below; ++j) below = Rational(p[j]) <= q[j];
    if (below) return true;
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    bool some_below = false;
    for (const auto& p : points)
      if (Rational(p[j]) <= q[j]) {
        some_below = true;
        break;
      }
    if (!some_below) return false;
  }
  return detail::convex_combination_feasible(points, q, detail::Fit::Dominated);
}

bool member_of(std::span<const LatticePoint> points, const LatticePoint& q) {
  for (const auto& p : points)
    if (dominated_by(p, q)) return true;
  for (std::size_t j = 0; j < q.dim(); ++j) {
    const bool some_below = std::any_of(points.begin(), points.end(),
                                        [&](const LatticePoint& p) { return p[j] <= q[j]; });
    if (!some_below) return false;
  }
  return detail::convex_combination_feasible(points, to_rational(q), detail::Fit::Dominated);
}

long long to_small(const Integer& v, const char* where) {
  if (v > std::numeric_limits<int>::max())
    throw BudgetExceeded(std::string(where) + ": enumeration box too large", 0);
  return v.convert_to<long long>();
}

}  // namespace

bool member(const NewtonPolyhedron& P, std::span<const Rational> q) {
  require_same_dim(P.dim(), q.size(), "member");
  return member_of(P.points(), q);
}

bool member(const NewtonPolyhedron& P, const LatticePoint& q) {
  require_same_dim(P.dim(), q.dim(), "member");
  return member_of(P.points(), q);
}

std::vector<LatticePoint> vertices(const NewtonPolyhedron& P) {
  std::vector<LatticePoint> pts = P.points();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Drop dominated points first: they are never vertices and removing them
  // keeps the LPs small.
  std::vector<LatticePoint> candidates;
  for (const auto& p : pts) {
    const bool dominated = std::any_of(pts.begin(), pts.end(), [&](const LatticePoint& o) {
      return o != p && dominated_by(o, p);
    });
    if (!dominated) candidates.push_back(p);
  }
  std::vector<LatticePoint> result;
  std::vector<LatticePoint> others;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    others.clear();
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (k != i) others.push_back(candidates[k]);
    if (others.empty() || !member_of(others, candidates[i])) result.push_back(candidates[i]);
  }
  return result;
}

NewtonPolyhedron reduce(const NewtonPolyhedron& P) { return NewtonPolyhedron(P.dim(), vertices(P)); }

NewtonPolyhedron mink_sum(const NewtonPolyhedron& P, const NewtonPolyhedron& Q) {
  require_same_dim(P.dim(), Q.dim(), "mink_sum");
  std::vector<LatticePoint> sums;
  sums.reserve(P.points().size() * Q.points().size());
  for (const auto& a : P.points())
    for (const auto& b : Q.points()) sums.push_back(a + b);
  return NewtonPolyhedron(P.dim(), std::move(sums));
}

bool equivalent(const NewtonPolyhedron& P, const NewtonPolyhedron& Q) {
  require_same_dim(P.dim(), Q.dim(), "equivalent");
  const auto vp = vertices(P);
  const auto vq = vertices(Q);
  if (vp.size() != vq.size()) return false;
  return std::all_of(vp.begin(), vp.end(), [&](const LatticePoint& v) { return member_of(vq, v); }) &&
         std::all_of(vq.begin(), vq.end(), [&](const LatticePoint& v) { return member_of(vp, v); });
}

MonomialIdeal lattice_ideal(std::span<const LatticePoint> points, std::size_t dim) {
  const MonomialIdeal seed = MonomialIdeal::minimalize(points, dim);
  const auto& gens = seed.gens();
  if (seed.is_principal()) return seed;

  const ExponentVector box = seed.generator_box();
  // Binary-search the longest axis, enumerate the rest of the box. A point
  // of NP(I) above the box in some coordinate is not a minimal generator.
  std::size_t search_axis = 0;
  for (std::size_t j = 1; j < dim; ++j)
    if (box[j] > box[search_axis]) search_axis = j;

  std::vector<long long> extent(dim, 0);
  for (std::size_t j = 0; j < dim; ++j)
    if (j != search_axis) extent[j] = to_small(box[j], "integral_closure");

  std::vector<ExponentVector> found;
  LatticePoint q(dim);
  std::vector<long long> counter(dim, 0);
  while (true) {
    for (std::size_t j = 0; j < dim; ++j)
      if (j != search_axis) q[j] = counter[j];
    q[search_axis] = box[search_axis];
    if (member_of(gens, q)) {
      Integer lo = 0, hi = box[search_axis];
      while (lo < hi) {
        Integer mid = (lo + hi) / 2;
        q[search_axis] = mid;
        if (member_of(gens, q))
          hi = mid;
        else
          lo = mid + 1;
      }
      q[search_axis] = lo;
      found.push_back(q);
    }
    std::size_t j = 0;
    for (; j < dim; ++j) {
      if (j == search_axis) continue;
      if (counter[j] < extent[j]) {
        ++counter[j];
        break;
      }
      counter[j] = 0;
    }
    if (j == dim) break;
  }
  return MonomialIdeal::minimalize(found, dim);
}

MonomialIdeal integral_closure(const MonomialIdeal& I) { return lattice_ideal(I.gens(), I.dim()); }

bool is_integrally_closed(const MonomialIdeal& I) { return integral_closure(I) == I; }

}  // namespace icm
