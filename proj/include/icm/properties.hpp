#pragma once

#include "icm/monomial_ideal.hpp"
#include "icm/polytope.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace icm {

// Random generators for property checks. All draws go through the given
// engine, so a fixed seed reproduces a run.
namespace gen {

using Engine = std::mt19937_64;

/// Between 1 and max_gens random generators in [0, max_exp]^dim.
MonomialIdeal ideal(Engine& rng, std::size_t dim, int max_gens, int max_exp);

/// Closure of a random ideal; the unit ideal comes up with probability about
/// `unit_chance`.
MonomialIdeal closed_ideal(Engine& rng, std::size_t dim, int max_gens, int max_exp,
                           double unit_chance = 0.0);

/// Hull of between 1 and max_points random points in [-radius, radius]^2.
IntegralPolytope polygon(Engine& rng, int max_points, int radius);

}  // namespace gen

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

/// The monoid property suites: star monoid laws, the Newton polyhedron
/// homomorphism, ord additivity, conicality, cancellation, torsion-freeness,
/// closure idempotence and extensivity, and monomial primes being atoms.
std::vector<PropertyReport> run_property_suites(std::uint64_t seed, std::size_t cases);

}  // namespace icm
