#include "crystal/identity.hpp"

#include <algorithm>

#include "crystal/error.hpp"
#include "crystal/parallel.hpp"

namespace crystal {

bool KernelSpec::pair_in_support(int i, int j) const {
  switch (support) {
    case Support::lower: return j <= i;
    case Support::upper: return i <= j;
    case Support::staircase: return i + j <= n + 1;
  }
  return false;
}

SparsePoly kernel_series(const KernelSpec& spec) {
  SparsePoly out = SparsePoly::one(2 * spec.n);
  for (int i = 1; i <= spec.n; ++i) {
    for (int j = 1; j <= spec.n; ++j) {
      if (!spec.pair_in_support(i, j)) continue;
      SparsePoly factor(2 * spec.n);
      for (int k = 0; 2 * k <= spec.degree_bound; ++k) {
        Exponents exp(2 * spec.n, 0);
        exp[i - 1] = k;
        exp[spec.n + j - 1] = k;
        factor.add_term(exp, 1);
      }
      out = SparsePoly::mul_truncated(out, factor, spec.degree_bound);
    }
  }
  return out;
}

SparsePoly refined_character(const std::vector<std::pair<Tableau, Tableau>>& pairs) {
  SparsePoly out(0);
  bool first = true;
  for (const auto& [p, q] : pairs) {
    if (first) {
      out = SparsePoly(2 * p.alphabet());
      first = false;
    }
    out += weight_monomial(p.weight(), VarBlock::x) *
           weight_monomial(q.weight(), VarBlock::y);
  }
  return out;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::lower_khat_k: return "lower_KhatK";
    case Variant::lower_k_khat: return "lower_KKhat";
    case Variant::staircase: return "staircase";
    case Variant::littlewood: return "littlewood";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "lower_KhatK" || s == "lower-khat-k") return Variant::lower_khat_k;
  if (s == "lower_KKhat" || s == "lower-k-khat") return Variant::lower_k_khat;
  if (s == "staircase") return Variant::staircase;
  if (s == "littlewood") return Variant::littlewood;
  fail(ErrorKind::parse_error, "unknown variant '" + s + "'");
}

std::vector<RhsTerm> rhs_terms(int n, int degree_bound, Variant variant) {
  require(variant != Variant::littlewood, ErrorKind::parse_error,
          "littlewood expands into Schur polynomials, not character pairs");
  std::vector<RhsTerm> terms;
  const Permutation w0 = Permutation::longest(n);
  for (const auto& lambda : Partition::all_up_to(n, degree_bound / 2)) {
    for (const auto& w : stabilizer_and_coset_reps(lambda).reps) {
      switch (variant) {
        case Variant::lower_khat_k:
          // K^{w lambda}(x) Khat_{w lambda}(y)
          terms.push_back({lambda, w, opposite_demazure_crystal(lambda, n, w),
                           atom(lambda, n, w, DemKind::atom)});
          break;
        case Variant::lower_k_khat:
          // Khat^{w lambda}(x) K_{w lambda}(y)
          terms.push_back({lambda, w, atom(lambda, n, w, DemKind::opposite_atom),
                           demazure_crystal(lambda, n, w)});
          break;
        case Variant::staircase: {
          // K_{w lambda}(x) Khat_{w w_0 lambda}(y)
          const Weight mu = act(w0 * w, lambda.weight());
          const Permutation u = min_coset_rep_for(lambda, mu);
          terms.push_back({lambda, w, demazure_crystal(lambda, n, w),
                           atom(lambda, n, u, DemKind::atom)});
          break;
        }
        case Variant::littlewood: break;
      }
    }
  }
  return terms;
}

SparsePoly schur_poly(const Partition& lambda, int n, VarBlock block) {
  SparsePoly out(2 * n);
  for (const auto& t : enumerate_crystal(lambda, n))
    out += weight_monomial(t.weight(), block);
  return out;
}

SparsePoly rhs_sum(int n, int degree_bound, Variant variant) {
  if (variant == Variant::littlewood) {
    SparsePoly out(2 * n);
    for (const auto& lambda : Partition::all_up_to(n, degree_bound / 2)) {
      std::vector<Coord> doubled;
      for (Coord p : lambda.parts()) doubled.push_back(2 * p);
      out += schur_poly(Partition(doubled, n), n, VarBlock::x);
    }
    return out;
  }
  // Each lambda contributes homogeneous degree 2|lambda|; per-lambda work is
  // independent and merged in order.
  const auto lambdas = Partition::all_up_to(n, degree_bound / 2);
  const auto parts = parallel_map<SparsePoly>(lambdas.size(), [&](size_t k) {
    const auto& lambda = lambdas[k];
    SparsePoly sum(2 * n);
    for (const auto& w : stabilizer_and_coset_reps(lambda).reps) {
      switch (variant) {
        case Variant::lower_khat_k:
          sum += character(opposite_demazure_crystal(lambda, n, w), VarBlock::x) *
                 character(atom(lambda, n, w, DemKind::atom), VarBlock::y);
          break;
        case Variant::lower_k_khat:
          sum += character(atom(lambda, n, w, DemKind::opposite_atom), VarBlock::x) *
                 character(demazure_crystal(lambda, n, w), VarBlock::y);
          break;
        case Variant::staircase: {
          const Permutation w0 = Permutation::longest(n);
          const Permutation u = min_coset_rep_for(lambda, act(w0 * w, lambda.weight()));
          sum += character(demazure_crystal(lambda, n, w), VarBlock::x) *
                 character(atom(lambda, n, u, DemKind::atom), VarBlock::y);
          break;
        }
        case Variant::littlewood: break;
      }
    }
    return sum;
  });
  SparsePoly out(2 * n);
  for (const auto& p : parts) out += p;
  return out;
}

IdentityReport verify_identity(int n, int degree_bound, Variant variant) {
  KernelSpec spec{n,
                  variant == Variant::staircase ? KernelSpec::Support::staircase
                                                : KernelSpec::Support::lower,
                  degree_bound};
  SparsePoly lhs = kernel_series(spec);
  if (variant == Variant::littlewood) lhs = substitute_y_equals_x(lhs);
  const SparsePoly rhs = rhs_sum(n, degree_bound, variant);
  const SparsePoly diff = lhs - rhs;

  IdentityReport report{variant, n, degree_bound, diff.is_zero(), diff, {}};
  for (int d = 0; d <= degree_bound; ++d) {
    const DegreeCount dc{d, lhs.homogeneous_component(d).term_count(),
                         rhs.homogeneous_component(d).term_count(),
                         diff.homogeneous_component(d).term_count()};
    if (dc.lhs_terms || dc.rhs_terms || dc.diff_terms) report.per_degree.push_back(dc);
  }
  return report;
}

}  // namespace crystal
