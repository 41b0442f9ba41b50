#include "icm/monoid.hpp"

#include "icm/enumerate.hpp"
#include "icm/newton.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace icm {

MonomialIdeal star(const MonomialIdeal& I, const MonomialIdeal& J) {
  return integral_closure(product(I, J));
}

MonomialIdeal quotient_cancel(const MonomialIdeal& S, const MonomialIdeal& K) {
  MonomialIdeal H = colon(S, K);
  if (star(H, K) != S) throw NotStarMultiple("quotient_cancel: not a star-multiple");
  return H;
}

// Resets the candidate counter on entry to a top-level call only.
class FactorSearch::Session {
 public:
  explicit Session(FactorSearch& s) : s_(s) {
    if (s_.depth_++ == 0) s_.examined_ = 0;
  }
  ~Session() { --s_.depth_; }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

 private:
  FactorSearch& s_;
};

FactorSearch::FactorSearch(SearchOptions options) : options_(options) {}

const MonomialIdeal& FactorSearch::closure(const MonomialIdeal& I) {
  auto it = closure_cache_.find(I);
  if (it == closure_cache_.end()) it = closure_cache_.emplace(I, integral_closure(I)).first;
  return it->second;
}

MonomialIdeal FactorSearch::star(const MonomialIdeal& I, const MonomialIdeal& J) {
  return closure(product(I, J));
}

bool FactorSearch::closed(const MonomialIdeal& I) { return closure(I) == I; }

void FactorSearch::count_candidate() {
  if (++examined_ > options_.max_candidates) {
    std::ostringstream msg;
    msg << "search budget of " << options_.max_candidates << " candidates exceeded";
    throw BudgetExceeded(msg.str(), examined_);
  }
}

void FactorSearch::require_closed_nonunit(const MonomialIdeal& I, const char* where) {
  if (I.is_unit()) throw PreconditionError(std::string(where) + ": unit ideal");
  if (!closed(I)) throw PreconditionError(std::string(where) + ": ideal is not integrally closed");
}

const std::vector<std::pair<MonomialIdeal, MonomialIdeal>>& FactorSearch::splittings(
    const MonomialIdeal& I) {
  Session session(*this);
  if (auto it = split_cache_.find(I); it != split_cache_.end()) return it->second;

  const Integer ord_I = ord(I);
  std::vector<std::pair<MonomialIdeal, MonomialIdeal>> found;
  if (!(options_.prune_by_ord && ord_I <= 1)) {
    for_each_ideal_in_box(I.generator_box(), I, false, [&](const MonomialIdeal& J) {
      count_candidate();
      if (J == I) return;
      if (options_.prune_by_ord && ord(J) >= ord_I) return;
      if (!closed(J)) return;
      MonomialIdeal K = colon(I, J);
      if (K.is_unit()) return;
      if (options_.prune_by_ord && ord(J) + ord(K) != ord_I) return;
      if (star(J, K) == I) found.emplace_back(J, std::move(K));
    });
  }
  std::sort(found.begin(), found.end());
  return split_cache_.emplace(I, std::move(found)).first->second;
}

bool FactorSearch::irreducible_impl(const MonomialIdeal& I) {
  if (options_.ord_shortcut && ord(I) == 1) return true;
  return splittings(I).empty();
}

bool FactorSearch::is_star_irreducible(const MonomialIdeal& I) {
  Session session(*this);
  require_closed_nonunit(I, "is_star_irreducible");
  return irreducible_impl(I);
}

std::vector<MonomialIdeal> FactorSearch::factor_impl(const MonomialIdeal& I) {
  if (irreducible_impl(I)) return {I};
  // Splittings are sorted, so the first has the smallest left factor.
  const auto [J, K] = splittings(I).front();
  auto atoms = factor_impl(J);
  auto rest = factor_impl(K);
  atoms.insert(atoms.end(), rest.begin(), rest.end());
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

Factorization FactorSearch::factor_atoms(const MonomialIdeal& I) {
  Session session(*this);
  require_closed_nonunit(I, "factor_atoms");
  return Factorization{I, factor_impl(I)};
}

const std::vector<AtomMultiset>& FactorSearch::all_impl(const MonomialIdeal& I) {
  if (auto it = all_cache_.find(I); it != all_cache_.end()) return it->second;
  std::set<AtomMultiset> result;
  if (irreducible_impl(I)) {
    result.insert({I});
  } else {
    // Every factorization has some atom J first, and the remaining atoms
    // factor I : J.
    for (const auto& [J, K] : splittings(I)) {
      if (!irreducible_impl(J)) continue;
      for (const auto& tail : all_impl(K)) {
        AtomMultiset m = tail;
        m.push_back(J);
        std::sort(m.begin(), m.end());
        result.insert(std::move(m));
      }
    }
  }
  return all_cache_.emplace(I, std::vector<AtomMultiset>(result.begin(), result.end()))
      .first->second;
}

std::vector<AtomMultiset> FactorSearch::all_factorizations(const MonomialIdeal& I) {
  Session session(*this);
  require_closed_nonunit(I, "all_factorizations");
  return all_impl(I);
}

std::optional<MonomialIdeal> FactorSearch::divides(const MonomialIdeal& I, const MonomialIdeal& J) {
  Session session(*this);
  require_same_dim(I.dim(), J.dim(), "divides");
  if (!closed(I) || !closed(J)) throw PreconditionError("divides: arguments must be integrally closed");
  if (I.is_unit()) return J;
  MonomialIdeal candidate = colon(J, I);
  if (star(I, candidate) == J) return candidate;
  if (options_.prune_by_ord && ord(J) < ord(I)) return std::nullopt;

  // The colon is the only possible quotient by cancellation; this sweep
  // re-checks that within the generator box of J.
  std::optional<MonomialIdeal> hit;
  const Integer need = ord(J) - ord(I);
  for_each_ideal_in_box(J.generator_box(), J, true, [&](const MonomialIdeal& K) {
    if (hit) return;
    count_candidate();
    if (options_.prune_by_ord && ord(K) != need) return;
    if (closed(K) && star(I, K) == J) hit = K;
  });
  return hit;
}

std::optional<MonomialIdeal> divides(const MonomialIdeal& I, const MonomialIdeal& J,
                                     const SearchOptions& options) {
  return FactorSearch(options).divides(I, J);
}

bool is_star_irreducible(const MonomialIdeal& I, const SearchOptions& options) {
  return FactorSearch(options).is_star_irreducible(I);
}

Factorization factor_atoms(const MonomialIdeal& I, const SearchOptions& options) {
  return FactorSearch(options).factor_atoms(I);
}

std::vector<AtomMultiset> all_factorizations(const MonomialIdeal& I, const SearchOptions& options) {
  return FactorSearch(options).all_factorizations(I);
}

std::optional<std::string> validate(const Factorization& f, FactorSearch& search) {
  if (f.atoms.empty()) return "empty factorization";
  MonomialIdeal acc = MonomialIdeal::unit(f.base.dim());
  for (const auto& a : f.atoms) {
    if (a.is_unit()) return "unit atom";
    if (!search.is_star_irreducible(a)) {
      std::ostringstream msg;
      msg << "atom " << a << " is reducible";
      return msg.str();
    }
    acc = search.star(acc, a);
  }
  if (acc != f.base) return "atoms do not multiply back to the base";
  if (Integer(f.atoms.size()) > ord(f.base)) return "length exceeds ord";
  return std::nullopt;
}

}  // namespace icm
