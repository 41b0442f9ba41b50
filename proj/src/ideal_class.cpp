#include "icm/ideal_class.hpp"

#include "icm/monoid.hpp"
#include "icm/newton.hpp"

#include <algorithm>

namespace icm {

namespace {

MonomialIdeal normalized(const MonomialIdeal& I) { return normalize_translation(I).first; }

MonomialIdeal axis_pair_closure(const Integer& a, const Integer& b) {
  return integral_closure(MonomialIdeal::minimalize(
      {LatticePoint(std::vector<Integer>{a, 0}), LatticePoint(std::vector<Integer>{0, b})}));
}

MonomialIdeal product_of_pairs(const std::vector<std::pair<Integer, Integer>>& pairs,
                               const ExponentVector& monomial) {
  MonomialIdeal acc = MonomialIdeal::minimalize({monomial});
  for (const auto& [a, b] : pairs) acc = product(acc, axis_pair_closure(a, b));
  return integral_closure(acc);
}

}  // namespace

IdealClassElement::IdealClassElement(const MonomialIdeal& num, const MonomialIdeal& den)
    : num_(normalized(num)), den_(normalized(den)) {
  require_same_dim(num.dim(), den.dim(), "IdealClassElement");
  if (!is_integrally_closed(num_) || !is_integrally_closed(den_))
    throw PreconditionError("IdealClassElement: ideals must be integrally closed");
}

IdealClassElement::IdealClassElement(const MonomialIdeal& num)
    : IdealClassElement(num, MonomialIdeal::unit(num.dim())) {}

IdealClassElement::IdealClassElement(MonomialIdeal num, MonomialIdeal den, Trusted)
    : num_(normalized(num)), den_(normalized(den)) {}

IdealClassElement IdealClassElement::identity(std::size_t dim) {
  return IdealClassElement(MonomialIdeal::unit(dim), MonomialIdeal::unit(dim), Trusted{});
}

IdealClassElement operator*(const IdealClassElement& a, const IdealClassElement& b) {
  require_same_dim(a.dim(), b.dim(), "IdealClassElement::operator*");
  return IdealClassElement(star(a.num_, b.num_), star(a.den_, b.den_),
                           IdealClassElement::Trusted{});
}

IdealClassElement IdealClassElement::inverse() const { return IdealClassElement(den_, num_, Trusted{}); }

bool class_equal_ideal(const IdealClassElement& a, const IdealClassElement& b) {
  require_same_dim(a.dim(), b.dim(), "class_equal_ideal");
  return normalized(star(a.num(), b.den())) == normalized(star(b.num(), a.den()));
}

IdealClassElement phi(const IntegralPolytope& P) {
  const IntegralPolytope shifted = normalize_translation(P).first;
  return IdealClassElement(lattice_ideal(shifted.vertices(), P.dim()));
}

IdealClassElement phi_group(const PolytopeGroupElement& e) {
  return IdealClassElement(phi(e.pos()).num(), phi(e.neg()).num());
}

IntegralPolytope ideal_to_polytope(const MonomialIdeal& I) {
  return IntegralPolytope::hull(I.gens(), I.dim());
}

ColonFactorization colon_factorization_2d(const MonomialIdeal& I) {
  require_same_dim(I.dim(), 2, "colon_factorization_2d");
  if (!is_integrally_closed(I))
    throw PreconditionError("colon_factorization_2d: ideal is not integrally closed");

  ColonFactorization out{ExponentVector(2), {}, ExponentVector(2), {}};
  const BasisDecomposition coeffs = decompose_2d(PolytopeGroupElement(ideal_to_polytope(I)));
  for (const auto& [basis, c] : coeffs) {
    const MonomialIdeal image = phi(basis.polytope()).num();
    if (image.is_unit()) continue;
    // A non-trivial planar image is the closure of (x^a, y^b), with its
    // generators on both axes.
    const auto& gens = image.gens();
    const Integer a = gens.back()[0];
    const Integer b = gens.front()[1];
    if (gens.front()[0] != 0 || gens.back()[1] != 0 || axis_pair_closure(a, b) != image)
      throw std::logic_error("colon_factorization_2d: unexpected basis image");
    auto& side = c > 0 ? out.num_factors : out.den_factors;
    for (Integer k = abs(c); k > 0; --k) side.emplace_back(a, b);
  }
  std::sort(out.num_factors.begin(), out.num_factors.end());
  std::sort(out.den_factors.begin(), out.den_factors.end());

  // [I] = [N] - [D] modulo monomials, so x^m2 (I * D) = x^m1 N where m1, m2
  // are the translation parts of I * D and N.
  const MonomialIdeal N = product_of_pairs(out.num_factors, ExponentVector(2));
  const MonomialIdeal D = product_of_pairs(out.den_factors, ExponentVector(2));
  const auto [id_shape, id_shift] = normalize_translation(star(I, D));
  const auto [n_shape, n_shift] = normalize_translation(N);
  if (id_shape != n_shape) throw std::logic_error("colon_factorization_2d: class mismatch");
  const ExponentVector common = componentwise_min(id_shift, n_shift);
  out.num_monomial = id_shift - common;
  out.den_monomial = n_shift - common;

  if (evaluate(out) != I) throw std::logic_error("colon_factorization_2d: round trip failed");
  return out;
}

MonomialIdeal evaluate(const ColonFactorization& f) {
  return colon(product_of_pairs(f.num_factors, f.num_monomial),
               product_of_pairs(f.den_factors, f.den_monomial));
}

}  // namespace icm
