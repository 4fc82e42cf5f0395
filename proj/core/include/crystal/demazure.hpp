#pragma once

#include <vector>

#include "crystal/poly.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

enum class DemKind { demazure, atom, opposite, opposite_atom };
enum class VarBlock { x, y };

// A Demazure crystal, opposite Demazure crystal, or one of their atoms,
// materialized as an explicit sorted set of tableaux inside B(lambda).
struct DemazureSet {
  Partition lambda;
  int n;
  Permutation w;
  DemKind kind;
  std::vector<Tableau> elements;

  bool contains(const Tableau& t) const;
};

// B_w(lambda): the lowering closure along a reduced word of w, read right
// to left from {v_lambda}.
DemazureSet demazure_crystal(const Partition& lambda, int n, const Permutation& w);

// B^w(lambda): the raising closure from {v_{w_0 lambda}} along a reduced
// word of w * w_0, read right to left.
DemazureSet opposite_demazure_crystal(const Partition& lambda, int n, const Permutation& w);

// Atom of a minimal coset representative (error otherwise): the Demazure
// crystal minus the union over Bruhat-smaller coset representatives moving
// lambda elsewhere; opposite atoms use Bruhat-larger ones.
DemazureSet atom(const Partition& lambda, int n, const Permutation& w, DemKind kind);

// Weight generating function over the chosen variable block; homogeneous of
// degree |lambda| in 2n variables.
SparsePoly character(const DemazureSet& ds, VarBlock block);

// Independent oracle for ch B_w(lambda): isobaric divided differences
// applied along a reduced word of w to the monomial x^lambda.
SparsePoly demazure_operator_poly(const Partition& lambda, int n, const Permutation& w);

// Monomial z^mu in the chosen block of the 2n-variable ring.
SparsePoly weight_monomial(const Weight& mu, VarBlock block);

}  // namespace crystal
