#pragma once

#include "icm/monomial_ideal.hpp"
#include "icm/polytope.hpp"

#include <utility>
#include <vector>

namespace icm {

/// [num, den] in the Grothendieck group of integrally closed monomial
/// ideals modulo monomial multiples. Both parts are stored translated so the
/// componentwise minimum of their generators is zero, which sends every
/// principal ideal to the unit ideal.
class IdealClassElement {
 public:
  /// Throws PreconditionError unless both ideals are integrally closed.
  IdealClassElement(const MonomialIdeal& num, const MonomialIdeal& den);
  explicit IdealClassElement(const MonomialIdeal& num);
  static IdealClassElement identity(std::size_t dim);

  std::size_t dim() const noexcept { return num_.dim(); }
  const MonomialIdeal& num() const noexcept { return num_; }
  const MonomialIdeal& den() const noexcept { return den_; }

  /// [I*I', J*J'].
  friend IdealClassElement operator*(const IdealClassElement& a, const IdealClassElement& b);
  IdealClassElement inverse() const;

 private:
  struct Trusted {};
  IdealClassElement(MonomialIdeal num, MonomialIdeal den, Trusted);

  MonomialIdeal num_;
  MonomialIdeal den_;
};

/// a.num * b.den and b.num * a.den agree up to a monomial factor.
bool class_equal_ideal(const IdealClassElement& a, const IdealClassElement& b);

/// Class of the ideal generated by the lattice points of P_N + R^d_+, where
/// P_N is P translated into the nonnegative orthant.
IdealClassElement phi(const IntegralPolytope& P);

/// phi(pos) / phi(neg).
IdealClassElement phi_group(const PolytopeGroupElement& e);

/// conv(gens(I)).
IntegralPolytope ideal_to_polytope(const MonomialIdeal& I);

/// I = closure(x^num_monomial * prod closure(x^a, y^b)) :
///     closure(x^den_monomial * prod closure(x^c, y^d)),
/// factors listed as (a, b) pairs, ascending, repeated by multiplicity.
struct ColonFactorization {
  ExponentVector num_monomial;
  std::vector<std::pair<Integer, Integer>> num_factors;
  ExponentVector den_monomial;
  std::vector<std::pair<Integer, Integer>> den_factors;
};

/// Colon expression for an integrally closed ideal in two variables, read
/// off the basis decomposition of conv(gens(I)). Throws DimensionMismatch
/// unless dim(I) = 2 and PreconditionError if I is not integrally closed.
ColonFactorization colon_factorization_2d(const MonomialIdeal& I);

/// Evaluates the colon expression.
MonomialIdeal evaluate(const ColonFactorization& f);

}  // namespace icm
