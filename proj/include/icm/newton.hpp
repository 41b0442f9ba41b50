#pragma once

#include "icm/monomial_ideal.hpp"

#include <vector>

namespace icm {

/// conv(points) + R^d_+. Holds the Newton polyhedron of a monomial ideal,
/// or any orthant-recession polyhedron with integral vertices.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t dim, std::vector<LatticePoint> points);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }

 private:
  std::size_t dim_;
  std::vector<LatticePoint> points_;
};

NewtonPolyhedron np_of(const MonomialIdeal& I);

/// Exact test of q ∈ conv(points) + R^d_+.
bool member(const NewtonPolyhedron& P, std::span<const Rational> q);
bool member(const NewtonPolyhedron& P, const LatticePoint& q);

/// The points of P that are not in the polyhedron spanned by the others,
/// sorted lexicographically. This is the unique minimal generating set.
std::vector<LatticePoint> vertices(const NewtonPolyhedron& P);

/// Same polyhedron, generated by its vertices.
NewtonPolyhedron reduce(const NewtonPolyhedron& P);

/// Minkowski sum on all pairwise point sums (not reduced).
NewtonPolyhedron mink_sum(const NewtonPolyhedron& P, const NewtonPolyhedron& Q);

/// Whether P and Q describe the same set.
bool equivalent(const NewtonPolyhedron& P, const NewtonPolyhedron& Q);

/// Ideal generated by the lattice points of NP(I).
MonomialIdeal integral_closure(const MonomialIdeal& I);

/// Ideal generated by the lattice points of conv(points) + R^d_+ for
/// nonnegative integral points.
MonomialIdeal lattice_ideal(std::span<const LatticePoint> points, std::size_t dim);

bool is_integrally_closed(const MonomialIdeal& I);

}  // namespace icm
