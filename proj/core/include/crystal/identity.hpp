#pragma once

#include <vector>

#include "crystal/demazure.hpp"
#include "crystal/matrix.hpp"
#include "crystal/poly.hpp"

namespace crystal {

// Truncated expansion of a Cauchy-type kernel prod (1 - x_i y_j)^{-1} over
// one of three supports.
struct KernelSpec {
  enum class Support { lower, upper, staircase };

  int n;
  Support support;
  int degree_bound;  // max total degree retained

  bool pair_in_support(int i, int j) const;
};

// Product of truncated geometric series over the support pairs; the
// coefficient of x^alpha y^beta counts matrices on the support with row
// sums alpha and column sums beta.
SparsePoly kernel_series(const KernelSpec& spec);

// sum x^{wt(P)} y^{wt(Q)} over a set of tableau pairs.
SparsePoly refined_character(const std::vector<std::pair<Tableau, Tableau>>& pairs);

enum class Variant { lower_khat_k, lower_k_khat, staircase, littlewood };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

// One summand of the character expansion: the x-side and y-side Demazure
// sets attached to (lambda, w).
struct RhsTerm {
  Partition lambda;
  Permutation w;
  DemazureSet x_set;
  DemazureSet y_set;
};

std::vector<RhsTerm> rhs_terms(int n, int degree_bound, Variant variant);

// The full right-hand side: sum over lambda with 2|lambda| <= D and minimal
// coset representatives of character(x_set) * character(y_set); for the
// littlewood variant, sum of s_{2 lambda}.
SparsePoly rhs_sum(int n, int degree_bound, Variant variant);

// Schur polynomial as the generating function of B(lambda) over [n].
SparsePoly schur_poly(const Partition& lambda, int n, VarBlock block);

struct DegreeCount {
  int degree;
  size_t lhs_terms;
  size_t rhs_terms;
  size_t diff_terms;
};

struct IdentityReport {
  Variant variant;
  int n;
  int degree_bound;
  bool ok;  // the difference is the zero polynomial
  SparsePoly difference;
  std::vector<DegreeCount> per_degree;
};

// Kernel minus expansion; a nonzero difference is a result, not an error.
IdentityReport verify_identity(int n, int degree_bound, Variant variant);

}  // namespace crystal
