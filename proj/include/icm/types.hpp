#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace icm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Operands live in different ambient dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded search ran out of budget before reaching an answer. This is
/// never a negative answer.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t examined)
      : std::runtime_error(what), examined_(examined) {}
  std::size_t examined() const noexcept { return examined_; }

 private:
  std::size_t examined_;
};

// ---------------------------------------------------------------------------
// LatticePoint
// ---------------------------------------------------------------------------

/// A point of Z^d with arbitrary precision coordinates. Exponent vectors of
/// monomials are lattice points with nonnegative coordinates; the monomial
/// ideal type enforces that.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t dim) : coords_(dim) {}
  explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_nonnegative() const;
  bool is_zero() const;
  Integer total() const;

  LatticePoint& operator+=(const LatticePoint& o);
  LatticePoint& operator-=(const LatticePoint& o);

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  // Lexicographic.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

 private:
  std::vector<Integer> coords_;
};

using ExponentVector = LatticePoint;

LatticePoint operator+(LatticePoint a, const LatticePoint& b);
LatticePoint operator-(LatticePoint a, const LatticePoint& b);

/// Componentwise a <= b.
bool dominated_by(const LatticePoint& a, const LatticePoint& b);

LatticePoint componentwise_max(const LatticePoint& a, const LatticePoint& b);
LatticePoint componentwise_min(const LatticePoint& a, const LatticePoint& b);

/// Componentwise minimum over a nonempty set of points.
LatticePoint componentwise_min(std::span<const LatticePoint> pts);
/// Componentwise maximum over a nonempty set of points.
LatticePoint componentwise_max(std::span<const LatticePoint> pts);

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

void require_same_dim(std::size_t a, std::size_t b, const char* where);

}  // namespace icm
