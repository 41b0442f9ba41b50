#pragma once

#include "icm/monomial_ideal.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace icm {

/// I * J, the integral closure of IJ.
MonomialIdeal star(const MonomialIdeal& I, const MonomialIdeal& J);

/// S is not of the form closure(HK) for the given K.
class NotStarMultiple : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Recovers H from S = H * K as the colon S : K. Throws NotStarMultiple when
/// S is not a star-multiple of K.
MonomialIdeal quotient_cancel(const MonomialIdeal& S, const MonomialIdeal& K);

/// Knobs for the bounded factor searches.
struct SearchOptions {
  /// Cap on candidate ideals examined per top-level call.
  std::size_t max_candidates = 2'000'000;
  /// Treat ord-1 ideals as atoms without searching.
  bool ord_shortcut = true;
  /// Discard candidate splittings whose ord values cannot add up.
  bool prune_by_ord = true;
};

/// Atoms sorted ascending; their star product is `base`.
struct Factorization {
  MonomialIdeal base;
  std::vector<MonomialIdeal> atoms;
};

using AtomMultiset = std::vector<MonomialIdeal>;

/// Factor searches in the monoid of integrally closed monomial ideals.
///
/// A proper splitting I = J * K has J ⊇ I, K ⊇ I and, by cancellation,
/// K = I : J, so both factors have generators inside the generator box of I.
/// The search enumerates integrally closed J in that box containing I and
/// checks the colon. Results are memoized per instance, so reusing one
/// instance across many queries is much cheaper than the free functions.
/// Not thread-safe; use one instance per thread.
class FactorSearch {
 public:
  explicit FactorSearch(SearchOptions options = {});

  const SearchOptions& options() const noexcept { return options_; }

  /// K with I * K = J, if any.
  std::optional<MonomialIdeal> divides(const MonomialIdeal& I, const MonomialIdeal& J);
  bool is_star_irreducible(const MonomialIdeal& I);
  Factorization factor_atoms(const MonomialIdeal& I);
  /// Every multiset of atoms whose star product is I, each sorted, in
  /// ascending order.
  std::vector<AtomMultiset> all_factorizations(const MonomialIdeal& I);

  /// All (J, K) with J, K integrally closed non-units and J * K = I.
  const std::vector<std::pair<MonomialIdeal, MonomialIdeal>>& splittings(const MonomialIdeal& I);

  /// Candidates examined by the most recent top-level call.
  std::size_t examined() const noexcept { return examined_; }

  /// Memoized closure.
  const MonomialIdeal& closure(const MonomialIdeal& I);
  MonomialIdeal star(const MonomialIdeal& I, const MonomialIdeal& J);

 private:
  class Session;

  bool closed(const MonomialIdeal& I);
  void count_candidate();
  bool irreducible_impl(const MonomialIdeal& I);
  std::vector<MonomialIdeal> factor_impl(const MonomialIdeal& I);
  const std::vector<AtomMultiset>& all_impl(const MonomialIdeal& I);
  void require_closed_nonunit(const MonomialIdeal& I, const char* where);

  SearchOptions options_;
  std::size_t examined_ = 0;
  int depth_ = 0;
  std::map<MonomialIdeal, MonomialIdeal> closure_cache_;
  std::map<MonomialIdeal, std::vector<std::pair<MonomialIdeal, MonomialIdeal>>> split_cache_;
  std::map<MonomialIdeal, std::vector<AtomMultiset>> all_cache_;
};

std::optional<MonomialIdeal> divides(const MonomialIdeal& I, const MonomialIdeal& J,
                                     const SearchOptions& options = {});
bool is_star_irreducible(const MonomialIdeal& I, const SearchOptions& options = {});
Factorization factor_atoms(const MonomialIdeal& I, const SearchOptions& options = {});
std::vector<AtomMultiset> all_factorizations(const MonomialIdeal& I,
                                             const SearchOptions& options = {});

/// Checks that the atoms multiply back to the base, that each atom is
/// irreducible and that the length is at most ord(base). Returns a
/// description of the first failure, or nothing.
std::optional<std::string> validate(const Factorization& f, FactorSearch& search);

}  // namespace icm
