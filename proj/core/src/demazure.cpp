#include "crystal/demazure.hpp"

#include <algorithm>
#include <set>

#include "crystal/error.hpp"

namespace crystal {

bool DemazureSet::contains(const Tableau& t) const {
  return std::binary_search(elements.begin(), elements.end(), t);
}

namespace {

// Closure of a set under all powers of one operator arrow.
std::set<Tableau> string_closure(const std::set<Tableau>& base, int i, Dir dir) {
  std::set<Tableau> out = base;
  for (const Tableau& t : base) {
    Tableau cur = t;
    while (auto next = tableau_op(cur, i, dir)) {
      cur = *next;
      out.insert(cur);
    }
  }
  return out;
}

std::vector<Tableau> sorted(const std::set<Tableau>& s) { return {s.begin(), s.end()}; }

}  // namespace

DemazureSet demazure_crystal(const Partition& lambda, int n, const Permutation& w) {
  std::set<Tableau> cur{Tableau::highest_weight(lambda, n)};
  const auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = string_closure(cur, *it, Dir::lower);
  return {lambda, n, w, DemKind::demazure, sorted(cur)};
}

DemazureSet opposite_demazure_crystal(const Partition& lambda, int n, const Permutation& w) {
  const Permutation w0 = Permutation::longest(n);
  // v_{w_0 lambda} is the unique element killed by every lowering operator.
  Tableau lowest = Tableau::highest_weight(lambda, n);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < n && !moved; ++i)
      if (auto down = tableau_op(lowest, i, Dir::lower)) {
        lowest = *down;
        moved = true;
      }
  }
  require(lowest.weight() == act(w0, lambda.weight()), ErrorKind::internal,
          "lowering from v_lambda missed the lowest weight");
  std::set<Tableau> cur{lowest};
  const auto word = (w * w0).reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = string_closure(cur, *it, Dir::raise);
  return {lambda, n, w, DemKind::opposite, sorted(cur)};
}

DemazureSet atom(const Partition& lambda, int n, const Permutation& w, DemKind kind) {
  require(kind == DemKind::atom || kind == DemKind::opposite_atom,
          ErrorKind::parse_error, "atom kind must be atom or opposite_atom");
  const auto coset = stabilizer_and_coset_reps(lambda);
  require(std::find(coset.reps.begin(), coset.reps.end(), w) != coset.reps.end(),
          ErrorKind::not_minimal_coset_rep,
          "atoms are indexed by minimal coset representatives");

  const bool opposite = kind == DemKind::opposite_atom;
  DemazureSet base = opposite ? opposite_demazure_crystal(lambda, n, w)
                              : demazure_crystal(lambda, n, w);
  std::set<Tableau> kept(base.elements.begin(), base.elements.end());
  const Weight wl = act(w, lambda.weight());
  for (const auto& v : coset.reps) {
    if (act(v, lambda.weight()) == wl) continue;
    const bool smaller = opposite ? bruhat_leq(w, v) : bruhat_leq(v, w);
    if (!smaller) continue;
    const DemazureSet other = opposite ? opposite_demazure_crystal(lambda, n, v)
                                       : demazure_crystal(lambda, n, v);
    for (const auto& t : other.elements) kept.erase(t);
  }
  return {lambda, n, w, kind, sorted(kept)};
}

SparsePoly weight_monomial(const Weight& mu, VarBlock block) {
  const int n = mu.rank();
  Exponents exp(2 * n, 0);
  const int off = block == VarBlock::x ? 0 : n;
  for (int k = 1; k <= n; ++k) exp[off + k - 1] = static_cast<int>(mu.at(k));
  return SparsePoly::monomial(std::move(exp), 1);
}

SparsePoly character(const DemazureSet& ds, VarBlock block) {
  SparsePoly out(2 * ds.n);
  for (const auto& t : ds.elements) out += weight_monomial(t.weight(), block);
  return out;
}

SparsePoly demazure_operator_poly(const Partition& lambda, int n, const Permutation& w) {
  require(lambda.rank() == n && w.rank() == n, ErrorKind::shape_mismatch,
          "rank mismatch in the divided-difference oracle");
  SparsePoly f = weight_monomial(lambda.weight(), VarBlock::x);
  const auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = isobaric_divided_difference(f, *it);
  return f;
}

}  // namespace crystal
