// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failing criteria.

#include "icm/enumerate.hpp"
#include "icm/ideal_class.hpp"
#include "icm/monoid.hpp"
#include "icm/newton.hpp"
#include "icm/properties.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace icm;
using oracle::ideal;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

const MonomialIdeal m = MonomialIdeal::maximal(3);
const MonomialIdeal J = ideal({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
const MonomialIdeal J1 = ideal({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
const MonomialIdeal J2 = ideal({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
const MonomialIdeal J3 = ideal({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});

// No ord shortcuts and no ord pruning: every closed J ⊇ I in the box is tried.
const SearchOptions exhaustive{.max_candidates = 50'000'000, .ord_shortcut = false, .prune_by_ord = false};

std::string show(const MonomialIdeal& I) {
  std::ostringstream os;
  os << I;
  return os.str();
}

void eq_identity(Outcome& out) {
  const auto lhs = star(m, J);
  const auto rhs = star(star(J1, J2), J3);
  out.require(lhs == rhs, "products differ: " + show(lhs) + " vs " + show(rhs));
  out.detail << "product has " << lhs.gens().size() << " generators";
}

void ord_values(Outcome& out) {
  const std::vector<int> expected{1, 2, 1, 1, 1};
  const std::vector<MonomialIdeal> ideals{m, J, J1, J2, J3};
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    out.require(ord(ideals[i]) == expected[i], "ord of " + show(ideals[i]));
    out.detail << ord(ideals[i]) << (i + 1 < ideals.size() ? "," : "");
  }
}

void non_unique(Outcome& out) {
  FactorSearch search(exhaustive);
  const auto P = search.star(m, J);
  const auto all = search.all_factorizations(P);
  std::set<AtomMultiset> distinct(all.begin(), all.end());
  out.require(distinct.size() == all.size(), "duplicate multisets");
  out.require(distinct.size() >= 2, "fewer than two factorizations");
  AtomMultiset two{m, J}, three{J1, J2, J3};
  std::sort(two.begin(), two.end());
  std::sort(three.begin(), three.end());
  out.require(distinct.count(two) == 1, "{m, J} missing");
  out.require(distinct.count(three) == 1, "{J1, J2, J3} missing");
  bool sizes2 = false, sizes3 = false;
  for (const auto& f : all) {
    sizes2 = sizes2 || f.size() == 2;
    sizes3 = sizes3 || f.size() == 3;
    const auto problem = validate(Factorization{P, f}, search);
    out.require(!problem, "factorization does not validate: " + problem.value_or(""));
  }
  out.require(sizes2 && sizes3, "missing a length-2 or length-3 factorization");
  for (const auto& A : {m, J, J1, J2, J3})
    out.require(search.is_star_irreducible(A), show(A) + " is reducible");
  out.detail << distinct.size() << " factorizations; 5 atoms confirmed exhaustively";
}

void non_prime(Outcome& out) {
  FactorSearch search(exhaustive);
  const auto P = search.star(search.star(J1, J2), J3);
  // m divides J1*J2*J3 with cofactor J ...
  const auto cofactor = search.divides(m, P);
  out.require(cofactor == J, "m does not divide the product with cofactor J");
  // ... yet divides no star product of a proper subset of the factors ...
  const std::vector<MonomialIdeal> factors{J1, J2, J3};
  int checked = 0;
  for (unsigned mask = 1; mask < 7; ++mask) {
    MonomialIdeal S = MonomialIdeal::unit(3);
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) S = search.star(S, factors[i]);
    out.require(!search.divides(m, S), "m divides a partial product");
    ++checked;
  }
  // ... so primality would force a proper factorization of the atom J.
  out.require(search.is_star_irreducible(J), "J is reducible");
  out.detail << "m | J1*J2*J3 with quotient J; m divides none of " << checked << " partial products";
}

void unique_in_two_variables(Outcome& out) {
  FactorSearch search(exhaustive);
  std::size_t count = 0;
  for (const auto& I : integrally_closed_ideals_in_box(ExponentVector{5, 5})) {
    if (I.is_unit()) continue;
    ++count;
    const auto all = search.all_factorizations(I);
    out.require(all.size() == 1, show(I) + " has " + std::to_string(all.size()) + " factorizations");
  }
  out.detail << count << " closed ideals, each with exactly one factorization";
}

void closure_oracle(Outcome& out) {
  std::size_t count = 0;
  for (const oracle::Vec& box : {oracle::Vec{6, 6}, oracle::Vec{3, 3, 3}}) {
    oracle::for_each_antichain(box, 4, [&](const oracle::VecSet& gens) {
      ++count;
      const auto got = oracle::gens_of(integral_closure(ideal(gens)));
      if (got != oracle::closure(gens)) out.require(false, "closure of " + show(ideal(gens)));
    });
  }
  out.detail << count << " ideals";
}

void properties(Outcome& out) {
  const auto reports = run_property_suites(20240601, 200);
  for (const auto& r : reports) {
    out.require(r.passed() && r.cases >= 200, r.name + ": " + r.first_failure);
  }
  out.detail << reports.size() << " suites x 200 cases";
}

void polytope_group(Outcome& out) {
  using P = IntegralPolytope;
  using E = PolytopeGroupElement;
  using B = BasisElement;
  gen::Engine rng(20240601);
  const int samples = 150;
  for (int n = 0; n < samples; ++n) {
    const auto A = gen::polygon(rng, 6, 4), Q = gen::polygon(rng, 6, 4);
    out.require(class_equal(E(shadow(p_mink_sum(A, Q))), E(p_mink_sum(shadow(A), shadow(Q)))),
                "shadow homomorphism");
    out.require(class_equal(recompose_2d(decompose_2d(E(A))), E(A)), "reconstruction");
    out.require(class_equal(recompose_2d(decompose_2d(E(A, Q))), E(A, Q)), "reconstruction of a difference");
  }
  const P square = P::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  out.require(decompose_2d(E(square)) == BasisDecomposition{{B::segment(1, 0), 1}, {B::segment(0, 1), 1}},
              "unit square");
  out.require(decompose_2d(E(P::hull({{0, 0}, {1, 0}, {0, 1}}))) == BasisDecomposition{{B::triangle(-1, 1), 1}},
              "unit triangle");
  for (int k = 1; k <= 5; ++k)
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {-3, 1}, {1, 0}, {0, 1}, {2, -5}}) {
      const auto S = p_mink_multiple(basis_segment(LatticePoint{a, b}), k);
      out.require(decompose_2d(E(S)) == BasisDecomposition{{B::segment(a, b), k}}, "scaled segment");
    }
  out.detail << samples << " random polygon pairs; golden cases";
}

void phi_contracts(Outcome& out) {
  using E = PolytopeGroupElement;
  gen::Engine rng(20240602);
  const int pairs = 120;
  for (int n = 0; n < pairs; ++n) {
    const E a(gen::polygon(rng, 4, 3), gen::polygon(rng, 3, 2));
    const E b(gen::polygon(rng, 4, 3), gen::polygon(rng, 3, 2));
    out.require(class_equal_ideal(phi_group(a + b), phi_group(a) * phi_group(b)), "homomorphism");
  }
  std::size_t witnesses = 0;
  for (const auto& I : integrally_closed_ideals_in_box(ExponentVector{5, 5})) {
    out.require(class_equal_ideal(phi(ideal_to_polytope(I)), IdealClassElement(I)), "witness " + show(I));
    ++witnesses;
  }
  const int random3d = 60;
  for (int n = 0; n < random3d; ++n) {
    const auto I = gen::closed_ideal(rng, 3, 4, 3);
    out.require(class_equal_ideal(phi(ideal_to_polytope(I)), IdealClassElement(I)), "witness " + show(I));
  }
  out.detail << pairs << " pairs; " << witnesses << " box ideals + " << random3d << " 3D ideals";
}

void colon_round_trip(Outcome& out) {
  std::size_t count = 0, with_den = 0;
  for (const auto& I : integrally_closed_ideals_in_box(ExponentVector{6, 6})) {
    const auto f = colon_factorization_2d(I);
    out.require(evaluate(f) == I, "round trip of " + show(I));
    ++count;
    with_den += !f.den_factors.empty();
  }
  out.detail << count << " closed ideals (" << with_den << " with a nontrivial denominator)";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"star(m, J) = J1*J2*J3", eq_identity},
      {"ord values 1,2,1,1,1", ord_values},
      {"non-unique factorization, atoms irreducible", non_unique},
      {"m is not prime", non_prime},
      {"unique factorization in box (5,5)", unique_in_two_variables},
      {"closure vs halfspace oracle", closure_oracle},
      {"property suites", properties},
      {"polytope group", polytope_group},
      {"phi homomorphism and surjectivity", phi_contracts},
      {"colon factorization round trip box (6,6)", colon_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !out.pass;
    std::printf("%s criterion %zu: %s -- %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                out.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failures;
}
