#pragma once

#include "icm/types.hpp"

#include <map>
#include <utility>
#include <vector>

namespace icm {

/// A bounded lattice polytope, held by its vertex set (sorted).
class IntegralPolytope {
 public:
  /// Vertex set of conv(points). Throws PreconditionError on empty input.
  static IntegralPolytope hull(std::span<const LatticePoint> points, std::size_t dim);
  static IntegralPolytope hull(std::initializer_list<LatticePoint> points);
  static IntegralPolytope point(LatticePoint p);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticePoint>& vertices() const noexcept { return verts_; }
  bool is_point() const noexcept { return verts_.size() == 1; }

  friend bool operator==(const IntegralPolytope&, const IntegralPolytope&) = default;
  friend IntegralPolytope translate(const IntegralPolytope& P, const LatticePoint& shift);

 private:
  IntegralPolytope(std::size_t dim, std::vector<LatticePoint> verts)
      : dim_(dim), verts_(std::move(verts)) {}

  std::size_t dim_ = 0;
  std::vector<LatticePoint> verts_;
};

IntegralPolytope p_mink_sum(const IntegralPolytope& P, const IntegralPolytope& Q);

/// n-fold Minkowski sum of P with itself; a point at the origin for n = 0.
IntegralPolytope p_mink_multiple(const IntegralPolytope& P, unsigned long n);

IntegralPolytope translate(const IntegralPolytope& P, const LatticePoint& shift);

/// Moves the componentwise minimum of the vertices to the origin.
std::pair<IntegralPolytope, LatticePoint> normalize_translation(const IntegralPolytope& P);

/// Least last coordinate.
Integer height(const IntegralPolytope& P);

/// conv(P ∪ c_h(P)), where c_h drops every point to the height of P.
IntegralPolytope shadow(const IntegralPolytope& P);

/// [pos] - [neg] in the group of lattice polytopes modulo translation. Both
/// parts are stored translation-normalized; equality of group elements is
/// class_equal, not field equality.
class PolytopeGroupElement {
 public:
  PolytopeGroupElement(const IntegralPolytope& pos, const IntegralPolytope& neg);
  explicit PolytopeGroupElement(const IntegralPolytope& pos);
  static PolytopeGroupElement identity(std::size_t dim);

  std::size_t dim() const noexcept { return pos_.dim(); }
  const IntegralPolytope& pos() const noexcept { return pos_; }
  const IntegralPolytope& neg() const noexcept { return neg_; }

  friend PolytopeGroupElement operator+(const PolytopeGroupElement& a, const PolytopeGroupElement& b);
  friend PolytopeGroupElement operator-(const PolytopeGroupElement& a);
  friend PolytopeGroupElement operator-(const PolytopeGroupElement& a, const PolytopeGroupElement& b);

 private:
  IntegralPolytope pos_;
  IntegralPolytope neg_;
};

/// a.pos + b.neg and b.pos + a.neg are translates.
bool class_equal(const PolytopeGroupElement& a, const PolytopeGroupElement& b);

/// A member of the standard basis of the planar polytope group: the segment
/// conv{0, v} for a primitive direction v, or the right triangle that is its
/// shadow. Directions are kept in the upper half-plane (v2 > 0, or v2 = 0
/// and v1 > 0); v and -v give translates.
struct BasisElement {
  enum class Kind { Segment, Triangle };

  Kind kind;
  Integer v1;
  Integer v2;

  /// Throws PreconditionError for v = 0 or a non-primitive v.
  static BasisElement segment(Integer a, Integer b);
  /// Also throws for axis directions, whose shadow is not two-dimensional.
  static BasisElement triangle(Integer a, Integer b);

  /// conv{0, v} for segments; the translation-normalized shadow for
  /// triangles.
  IntegralPolytope polytope() const;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend bool operator<(const BasisElement& a, const BasisElement& b);
};

IntegralPolytope basis_segment(const LatticePoint& v);
IntegralPolytope basis_triangle(const LatticePoint& v);

std::ostream& operator<<(std::ostream& os, const BasisElement& b);

using BasisDecomposition = std::map<BasisElement, Integer>;

/// Integer coefficients c with e = sum c(B) [B] in the planar polytope
/// group; zero coefficients are omitted. Checks the reconstruction
/// identity before returning. Throws DimensionMismatch unless dim(e) = 2.
BasisDecomposition decompose_2d(const PolytopeGroupElement& e);

/// sum c(B) [B] as a group element.
PolytopeGroupElement recompose_2d(const BasisDecomposition& coefficients);

/// Primitive edge directions of a planar polytope, counted with lattice
/// length, walking the boundary counterclockwise. A segment contributes
/// both of its directions.
std::map<std::pair<Integer, Integer>, Integer> edge_counts_2d(const IntegralPolytope& P);

std::ostream& operator<<(std::ostream& os, const IntegralPolytope& P);

}  // namespace icm
