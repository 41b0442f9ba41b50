#include "icm/properties.hpp"

#include "icm/monoid.hpp"
#include "icm/newton.hpp"

#include <functional>
#include <sstream>

namespace icm {

namespace gen {

MonomialIdeal ideal(Engine& rng, std::size_t dim, int max_gens, int max_exp) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<int> exp(0, max_exp);
  const int k = count(rng);
  std::vector<ExponentVector> pts;
  for (int i = 0; i < k; ++i) {
    ExponentVector p(dim);
    for (std::size_t j = 0; j < dim; ++j) p[j] = exp(rng);
    pts.push_back(std::move(p));
  }
  return MonomialIdeal::minimalize(pts, dim);
}

MonomialIdeal closed_ideal(Engine& rng, std::size_t dim, int max_gens, int max_exp,
                           double unit_chance) {
  if (unit_chance > 0 && std::bernoulli_distribution(unit_chance)(rng))
    return MonomialIdeal::unit(dim);
  while (true) {
    MonomialIdeal I = integral_closure(ideal(rng, dim, max_gens, max_exp));
    if (unit_chance > 0 || !I.is_unit()) return I;
  }
}

IntegralPolytope polygon(Engine& rng, int max_points, int radius) {
  std::uniform_int_distribution<int> count(1, max_points);
  std::uniform_int_distribution<int> coord(-radius, radius);
  const int k = count(rng);
  std::vector<LatticePoint> pts;
  for (int i = 0; i < k; ++i) pts.push_back(LatticePoint{coord(rng), coord(rng)});
  return IntegralPolytope::hull(pts, 2);
}

}  // namespace gen

namespace {

class Suite {
 public:
  Suite(std::string name, std::size_t cases) : report_{std::move(name), 0, 0, {}}, target_(cases) {}

  // `check` returns an empty string on success or a failure description.
  template <class Check>
  PropertyReport run(Check&& check) {
    for (std::size_t i = 0; i < target_; ++i) {
      ++report_.cases;
      std::string failure;
      try {
        failure = check();
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (!failure.empty() && report_.failures++ == 0) report_.first_failure = failure;
    }
    return report_;
  }

 private:
  PropertyReport report_;
  std::size_t target_;
};

template <class... Ts>
std::string describe(const Ts&... parts) {
  std::ostringstream os;
  ((os << parts << ' '), ...);
  return os.str();
}

std::size_t pick_dim(gen::Engine& rng) { return std::uniform_int_distribution<std::size_t>(2, 3)(rng); }

int max_exp_for(std::size_t dim) { return dim == 2 ? 4 : 2; }

}  // namespace

std::vector<PropertyReport> run_property_suites(std::uint64_t seed, std::size_t cases) {
  gen::Engine rng(seed);
  FactorSearch search;
  std::vector<PropertyReport> reports;

  auto closed = [&](std::size_t d, double unit_chance = 0.0) {
    return gen::closed_ideal(rng, d, 3, max_exp_for(d), unit_chance);
  };

  reports.push_back(Suite("star monoid laws", cases).run([&]() -> std::string {
    const std::size_t d = pick_dim(rng);
    const auto I = closed(d, 0.1), J = closed(d, 0.1), K = closed(d, 0.1);
    if (search.star(search.star(I, J), K) != search.star(I, search.star(J, K)))
      return describe("associativity", I, J, K);
    if (search.star(I, J) != search.star(J, I)) return describe("commutativity", I, J);
    if (search.star(I, MonomialIdeal::unit(d)) != I) return describe("identity", I);
    return {};
  }));

  reports.push_back(Suite("NP homomorphism", cases).run([&]() -> std::string {
    const std::size_t d = pick_dim(rng);
    const auto I = gen::ideal(rng, d, 3, max_exp_for(d));
    const auto J = gen::ideal(rng, d, 3, max_exp_for(d));
    const auto sum = mink_sum(np_of(I), np_of(J));
    if (!equivalent(sum, np_of(product(I, J)))) return describe("NP(IJ)", I, J);
    if (!equivalent(sum, np_of(search.star(I, J)))) return describe("NP(I*J)", I, J);
    return {};
  }));

  reports.push_back(Suite("ord additivity", cases).run([&]() -> std::string {
    const std::size_t d = pick_dim(rng);
    const auto I = closed(d, 0.1), J = closed(d, 0.1);
    if (ord(search.star(I, J)) != ord(I) + ord(J)) return describe("ord(I*J)", I, J);
    if (ord(product(I, J)) != ord(I) + ord(J)) return describe("ord(IJ)", I, J);
    return {};
  }));

  reports.push_back(Suite("conical", cases).run([&]() -> std::string {
    const std::size_t d = pick_dim(rng);
    const auto I = closed(d, 0.3), J = closed(d, 0.3);
    const bool unit_product = search.star(I, J).is_unit();
    if (unit_product != (I.is_unit() && J.is_unit())) return describe("conical", I, J);
    return {};
  }));

  reports.push_back(Suite("cancellation", cases).run([&]() -> std::string {
    const std::size_t d = pick_dim(rng);
    const auto I = closed(d, 0.1), J = closed(d, 0.1), K = closed(d, 0.1);
    const auto IK = search.star(I, K);
    if (quotient_cancel(IK, K) != I) return describe("quotient_cancel", I, K);
    const auto JK = search.star(J, K);
    if ((IK == JK) != (I == J)) return describe("cancellative", I, J, K);
    return {};
  }));

  reports.push_back(Suite("torsion-free", cases).run([&]() -> std::string {
    const std::size_t d = pick_dim(rng);
    const auto I = closed(d), J = closed(d);
    if (I == J) return {};
    auto In = I, Jn = J;
    for (int n = 2; n <= 3; ++n) {
      In = search.star(In, I);
      Jn = search.star(Jn, J);
      if (In == Jn) return describe("equal powers", n, I, J);
    }
    return {};
  }));

  reports.push_back(Suite("closure idempotent and extensive", cases).run([&]() -> std::string {
    const std::size_t d = pick_dim(rng);
    const auto I = gen::ideal(rng, d, 4, max_exp_for(d) + 1);
    const auto C = integral_closure(I);
    if (!contains(C, I)) return describe("extensive", I);
    if (integral_closure(C) != C) return describe("idempotent", I);
    return {};
  }));

  FactorSearch exhaustive(SearchOptions{.max_candidates = 1'000'000, .ord_shortcut = false,
                                        .prune_by_ord = false});
  reports.push_back(Suite("monomial primes are atoms", cases).run([&]() -> std::string {
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::vector<std::size_t> vars;
    while (vars.empty())
      for (std::size_t i = 0; i < d; ++i)
        if (std::bernoulli_distribution(0.5)(rng)) vars.push_back(i);
    const auto P = MonomialIdeal::prime(d, vars);
    if (!exhaustive.is_star_irreducible(P)) return describe("prime not an atom", P);
    return {};
  }));

  return reports;
}

}  // namespace icm
