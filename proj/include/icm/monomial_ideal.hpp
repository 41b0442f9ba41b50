#pragma once

#include "icm/types.hpp"

#include <utility>
#include <vector>

namespace icm {

/// A nonzero monomial ideal of k[x_1..x_d], held by its minimal generators.
///
/// The generators form an antichain under the componentwise order and are
/// stored sorted lexicographically, so two ideals are equal exactly when
/// their generator lists are. The unit ideal is generated by the origin.
/// The zero ideal has no representation.
class MonomialIdeal {
 public:
  /// Ideal generated by `points`; keeps only the minimal elements.
  /// Throws PreconditionError on an empty set or negative coordinates and
  /// DimensionMismatch when a point has length other than `dim`.
  static MonomialIdeal minimalize(std::span<const ExponentVector> points, std::size_t dim);
  static MonomialIdeal minimalize(std::initializer_list<ExponentVector> points);

  static MonomialIdeal unit(std::size_t dim);
  /// The monomial prime generated by the variables with the given indices.
  static MonomialIdeal prime(std::size_t dim, std::span<const std::size_t> variables);
  /// The homogeneous maximal ideal (x_1, ..., x_d).
  static MonomialIdeal maximal(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
  bool is_unit() const;
  bool is_principal() const noexcept { return gens_.size() == 1; }

  /// Componentwise maximum of the generators; every minimal generator of the
  /// integral closure and of any colon I : K lies below it.
  ExponentVector generator_box() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.gens_.begin(), a.gens_.end(),
                                                  b.gens_.begin(), b.gens_.end());
  }

 private:
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens)
      : dim_(dim), gens_(std::move(gens)) {}

  std::size_t dim_ = 0;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// I ∩ J, via componentwise maxima of generator pairs.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// I : J = { f : fJ ⊆ I }.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

bool contains(const MonomialIdeal& I, const ExponentVector& a);

/// J ⊆ I.
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

/// Largest n with I ⊆ m^n, which for a monomial ideal is the least total
/// degree of a generator.
Integer ord(const MonomialIdeal& I);

/// x^shift * I.
MonomialIdeal translate(const MonomialIdeal& I, const ExponentVector& shift);

/// Splits I = x^m * I' with m the componentwise minimum of the generators.
/// I' is the canonical representative of the class of I modulo monomials.
std::pair<MonomialIdeal, ExponentVector> normalize_translation(const MonomialIdeal& I);

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);

}  // namespace icm
