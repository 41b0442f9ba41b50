#pragma once

#include "icm/ideal_class.hpp"
#include "icm/monoid.hpp"
#include "icm/monomial_ideal.hpp"
#include "icm/polytope.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace icm {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses a comma separated list of monomials such as "x^2, x*y, y^2" or
/// "x1^3*x4". Variables are x1..xd, with aliases x, y, z, w for x1..x4.
/// "1" is the unit monomial. The dimension is the largest variable index
/// unless `dim` is given.
MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

/// Inverse of parse_ideal for the same dimension.
std::string render(const MonomialIdeal& I);

/// Parses a list of integer tuples such as "(0,0) (1,0) (0,1)" (commas
/// between tuples optional) and returns their convex hull.
IntegralPolytope parse_polytope(std::string_view text);

/// {"vars": d, "gens": [[...], ...]}; entries may be numbers or decimal
/// strings.
MonomialIdeal ideal_from_document(const nlohmann::json& doc);

// JSON renderings. All integers are emitted as decimal strings; generator
// lists come out in lexicographic order.
nlohmann::json to_json(const Integer& n);
nlohmann::json to_json(const LatticePoint& p);
nlohmann::json to_json(const MonomialIdeal& I);
nlohmann::json to_json(const IntegralPolytope& P);
nlohmann::json to_json(const IdealClassElement& c);
nlohmann::json to_json(const BasisDecomposition& d);
nlohmann::json to_json(const ColonFactorization& f);
nlohmann::json to_json(const std::vector<AtomMultiset>& factorizations);

}  // namespace icm
