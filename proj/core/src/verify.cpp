#include "crystal/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "crystal/continuous.hpp"
#include "crystal/demazure.hpp"
#include "crystal/error.hpp"
#include "crystal/identity.hpp"
#include "crystal/ls_path.hpp"
#include "crystal/matrix.hpp"
#include "crystal/parallel.hpp"

namespace crystal {

namespace {

struct Ctx {
  SuiteResult res;

  explicit Ctx(std::string name) { res.name = std::move(name); }

  void check(bool cond, const std::string& what) {
    ++res.checks;
    if (!cond && res.passed) {
      res.passed = false;
      res.detail = what;
    }
  }
};

// The acceptance grid: even degrees, capped per rank to keep kernels small.
std::vector<int> degree_schedule(int n, int max_degree) {
  const int cap = n <= 2 ? 8 : n == 3 ? 6 : 4;
  std::vector<int> ds;
  for (int d = 2; d <= std::min(cap, max_degree); d += 2) ds.push_back(d);
  return ds;
}

}  // namespace

size_t count_ssyt_direct(const Partition& lambda, int n) {
  std::vector<std::vector<int>> cells;
  for (int r = 1; r <= lambda.rank() && lambda.part(r) > 0; ++r)
    cells.emplace_back(lambda.part(r), 0);
  size_t count = 0;
  auto rec = [&](auto&& self, size_t r, size_t c) -> void {
    if (r == cells.size()) {
      ++count;
      return;
    }
    const auto [nr, nc] = c + 1 < cells[r].size() ? std::pair(r, c + 1) : std::pair(r + 1, size_t{0});
    const int lo = std::max(c > 0 ? cells[r][c - 1] : 1,  // weak along the row
                            r > 0 && c < cells[r - 1].size() ? cells[r - 1][c] + 1 : 1);
    for (int v = lo; v <= n; ++v) {
      cells[r][c] = v;
      self(self, nr, nc);
    }
  };
  rec(rec, 0, 0);
  return count;
}

SuiteResult suite_cauchy_lower(int max_n, int max_degree) {
  Ctx ctx("cauchy-lower");
  for (int n = 2; n <= max_n; ++n) {
    for (int d : degree_schedule(n, max_degree)) {
      for (Variant v : {Variant::lower_khat_k, Variant::lower_k_khat}) {
        const auto report = verify_identity(n, d, v);
        ctx.check(report.ok, variant_name(v) + " difference nonzero at n=" +
                                 std::to_string(n) + " D=" + std::to_string(d));
      }
    }
  }
  return ctx.res;
}

SuiteResult suite_cauchy_staircase(int max_n, int max_degree) {
  Ctx ctx("cauchy-staircase");
  for (int n = 2; n <= max_n; ++n) {
    for (int d : degree_schedule(n, max_degree)) {
      const auto report = verify_identity(n, d, Variant::staircase);
      ctx.check(report.ok, "staircase difference nonzero at n=" + std::to_string(n) +
                               " D=" + std::to_string(d));
    }
  }
  return ctx.res;
}

SuiteResult suite_littlewood(int max_n, int max_degree) {
  Ctx ctx("littlewood");
  for (int n = 1; n <= max_n; ++n) {
    const int d = std::min(10, max_degree);
    if (d < 2) continue;
    const auto report = verify_identity(n, d, Variant::littlewood);
    ctx.check(report.ok, "littlewood difference nonzero at n=" + std::to_string(n) +
                             " D=" + std::to_string(d));
  }
  return ctx.res;
}

SuiteResult suite_main_bijection(int max_n, Coord max_entry_sum) {
  Ctx ctx("main-bijection");
  for (int n = 1; n <= max_n; ++n) {
    for (Coord s = 0; s <= max_entry_sum; ++s) {
      const auto matrices = all_matrices(n, s, /*lower_only=*/true);
      std::set<std::string> hit;
      size_t contained = 0;
      for (const auto& m : matrices) {
        const auto cls = classify_low(m);
        ctx.check(cls.lambda.size() == s, "classification changed the degree");
        const std::string key = cls.lambda.to_string() + "|" + cls.w.to_string() + "|" +
                                cls.p.to_string() + "|" + cls.q.to_string();
        ctx.check(hit.insert(key).second, "classify_low repeated " + key);
        ctx.check(opposite_demazure_crystal(cls.lambda, n, cls.w).contains(cls.p),
                  "P outside B^w(lambda) for " + m.to_string());
        ctx.check(atom(cls.lambda, n, cls.w, DemKind::atom).contains(cls.q),
                  "Q outside the atom of w for " + m.to_string());
        const Weight tau_p = psi(cls.p, cls.lambda).tau();
        const Weight iota_q = psi(cls.q, cls.lambda).iota();
        ctx.check(order_geq(tau_p, iota_q, cls.lambda),
                  "tensor cell violated: tau(P) < iota(Q) for " + m.to_string());
        ++contained;
      }
      // Exactly-once coverage: the target union has the same cardinality.
      size_t target = 0;
      for (const auto& lambda : Partition::all_of_size(n, s))
        for (const auto& w : stabilizer_and_coset_reps(lambda).reps)
          target += opposite_demazure_crystal(lambda, n, w).elements.size() *
                    atom(lambda, n, w, DemKind::atom).elements.size();
      ctx.check(target == matrices.size(),
                "target count " + std::to_string(target) + " != matrix count " +
                    std::to_string(matrices.size()) + " at n=" + std::to_string(n) +
                    " s=" + std::to_string(s));
      ctx.check(contained == hit.size(), "classification multiset collision");
    }
  }
  return ctx.res;
}

SuiteResult suite_demazure_oracle(int max_n, Coord max_size) {
  Ctx ctx("demazure-oracle");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : Partition::all_up_to(n, max_size)) {
      const auto coset = stabilizer_and_coset_reps(lambda);
      std::set<Tableau> seen;
      SparsePoly atom_sum(2 * n);
      size_t atom_total = 0;
      for (const auto& w : coset.reps) {
        const auto dem = demazure_crystal(lambda, n, w);
        ctx.check(character(dem, VarBlock::x) == demazure_operator_poly(lambda, n, w),
                  "character differs from the divided-difference polynomial at lambda=" +
                      lambda.to_string() + " w=" + w.to_string());
        const auto at = atom(lambda, n, w, DemKind::atom);
        for (const auto& t : at.elements)
          ctx.check(seen.insert(t).second, "atoms overlap at lambda=" + lambda.to_string());
        atom_total += at.elements.size();
        atom_sum += character(at, VarBlock::x);
      }
      const auto full = enumerate_crystal(lambda, n);
      ctx.check(atom_total == full.size(),
                "atoms do not partition B(lambda) at lambda=" + lambda.to_string());
      ctx.check(atom_sum == schur_poly(lambda, n, VarBlock::x),
                "atom characters do not sum to the Schur polynomial at lambda=" +
                    lambda.to_string());
    }
  }
  return ctx.res;
}

SuiteResult suite_psi_isomorphism(int max_n, Coord max_size) {
  Ctx ctx("psi-isomorphism");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : Partition::all_up_to(n, max_size)) {
      const auto tabs = enumerate_crystal(lambda, n);
      ctx.check(tabs.size() == count_ssyt_direct(lambda, n),
                "B(lambda) size differs from the direct SSYT count at " + lambda.to_string());
      const auto paths = enumerate_ls_paths(lambda, n);
      ctx.check(tabs.size() == paths.size(),
                "path crystal size mismatch at " + lambda.to_string());

      std::set<LSPath> images;
      for (const auto& t : tabs) {
        const LSPath pi = psi(t, lambda);
        images.insert(pi);
        ctx.check(psi_inv(pi) == t, "psi_inv(psi(T)) != T at " + lambda.to_string());
        ctx.check(pi.weight() == t.weight(), "psi changed the weight at " + lambda.to_string());
        for (int i = 1; i < n; ++i) {
          for (Dir dir : {Dir::raise, Dir::lower}) {
            const auto tt = tableau_op(t, i, dir);
            const auto pp = path_op(pi, i, dir);
            ctx.check(tt.has_value() == pp.has_value(),
                      "psi does not match operator domains at " + lambda.to_string());
            if (tt && pp)
              ctx.check(psi(*tt, lambda) == *pp,
                        "psi does not intertwine the operators at " + lambda.to_string());
          }
        }
      }
      ctx.check(images.size() == tabs.size(), "psi is not injective at " + lambda.to_string());
      for (const auto& pi : paths)
        ctx.check(images.count(pi) == 1,
                  "lowering closure produced a path outside psi(B) at " + lambda.to_string());
    }
  }
  return ctx.res;
}

SuiteResult suite_bicrystal_commutation(int max_n, Coord max_entry_sum) {
  Ctx ctx("bicrystal-commutation");
  for (int n = 2; n <= max_n; ++n) {
    std::vector<NNMatrix> all;
    for (Coord s = 0; s <= max_entry_sum; ++s)
      for (auto& m : all_matrices(n, s, /*lower_only=*/false)) all.push_back(std::move(m));
    const auto results = parallel_map<size_t>(all.size(), [&](size_t k) {
      const NNMatrix& m = all[k];
      size_t bad = 0;
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
          for (Dir di : {Dir::raise, Dir::lower})
            for (Dir dj : {Dir::raise, Dir::lower}) {
              auto r = bicrystal_op(m, i, di, Side::row);
              auto rc = r ? bicrystal_op(*r, j, dj, Side::col) : std::nullopt;
              auto c = bicrystal_op(m, j, dj, Side::col);
              auto cr = c ? bicrystal_op(*c, i, di, Side::row) : std::nullopt;
              if (rc != cr) ++bad;
            }
      return bad;
    });
    size_t bad = 0, cases = 0;
    for (size_t k = 0; k < all.size(); ++k) {
      bad += results[k];
      cases += 4 * (n - 1) * (n - 1);
    }
    ctx.res.checks += cases;
    ctx.check(bad == 0, std::to_string(bad) + " non-commuting operator pairs at n=" +
                            std::to_string(n));
  }
  return ctx.res;
}

SuiteResult suite_low_closure(int max_n, Coord max_entry_sum) {
  Ctx ctx("low-closure");
  for (int n = 1; n <= max_n; ++n) {
    for (Coord s = 0; s <= max_entry_sum; ++s) {
      for (const auto& m : all_matrices(n, s, /*lower_only=*/true)) {
        bool extremal = true;
        for (int i = 1; i < n; ++i) {
          for (Dir dir : {Dir::raise, Dir::lower}) {
            const auto moved = diagonal_op(m, i, dir);
            if (moved) {
              ctx.check(moved->lower_triangular(),
                        "diagonal operator left M^low at " + m.to_string());
              if (dir == Dir::raise) extremal = false;
            } else {
              ++ctx.res.checks;
            }
          }
        }
        if (extremal)
          ctx.check(m.as_diagonal_partition().has_value(),
                    "raise-extremal matrix is not M_lambda: " + m.to_string());
      }
      for (const auto& lambda : Partition::all_of_size(n, s)) {
        const NNMatrix m = NNMatrix::diagonal(lambda);
        for (int i = 1; i < n; ++i)
          ctx.check(!diagonal_op(m, i, Dir::raise).has_value(),
                    "M_lambda is not raise-extremal at " + lambda.to_string());
      }
    }
  }
  return ctx.res;
}

namespace {

Rat random_rat(std::mt19937_64& rng, int max_numerator, int max_denominator) {
  std::uniform_int_distribution<int> num(0, max_numerator);
  std::uniform_int_distribution<int> den(1, max_denominator);
  return Rat(num(rng), den(rng));
}

RatVec random_dominant(std::mt19937_64& rng, int n, int max_denominator) {
  RatVec v;
  for (int k = 0; k < n; ++k) v.push_back(random_rat(rng, 4, max_denominator));
  std::sort(v.rbegin(), v.rend());
  return v;
}

PLPath random_lowered_path(std::mt19937_64& rng, const RatVec& lambda, int max_denominator) {
  PLPath p = PLPath::straight(lambda);
  const int n = static_cast<int>(lambda.size());
  std::uniform_int_distribution<int> ops(0, 4);
  std::uniform_int_distribution<int> pick_i(1, std::max(1, n - 1));
  std::uniform_int_distribution<int> frac_num(1, 4);
  std::uniform_int_distribution<int> extra_den(1, max_denominator);
  const int count = ops(rng);
  for (int k = 0; k < count && n > 1; ++k) {
    const int i = pick_i(rng);
    const Rat phi = cont_phi(p, i);
    if (phi == 0) continue;
    const Rat r = phi * Rat(frac_num(rng), 4 * extra_den(rng));
    const auto lowered = cont_op(p, i, -r);
    if (lowered) p = *lowered;
  }
  return p;
}

RatMatrix random_rat_matrix(std::mt19937_64& rng, int n, int max_denominator, bool lower) {
  RatMatrix m = RatMatrix::zeros(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= (lower ? i : n); ++j) m.at(i, j) = random_rat(rng, 2, max_denominator);
  return m;
}

}  // namespace

SuiteResult suite_continuous(int max_n, std::uint64_t seed, int group_law_trials,
                             int commutation_trials, int main2_trials, int max_denominator) {
  Ctx ctx("continuous");
  std::mt19937_64 rng(seed);

  // (a) one-parameter group law e^{r+s} = e^s e^r.
  for (int trial = 0; trial < group_law_trials; ++trial) {
    const int n = 2 + static_cast<int>(trial % std::max(1, max_n - 1));
    const RatVec lambda = random_dominant(rng, n, max_denominator);
    const PLPath p = random_lowered_path(rng, lambda, max_denominator);
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    const int i = pick_i(rng);
    std::uniform_int_distribution<int> num(-6, 6);
    const Rat r = Rat(num(rng), max_denominator);
    const Rat s = Rat(num(rng), max_denominator);
    const auto a = cont_op(p, i, r);
    if (!a) {
      ++ctx.res.checks;
      continue;
    }
    const auto b = cont_op(*a, i, s);
    const auto c = cont_op(p, i, r + s);
    ctx.check(b.has_value() == c.has_value(),
              "group law domain mismatch at r=" + rat_to_string(r) + " s=" + rat_to_string(s));
    if (b && c)
      ctx.check(*b == *c,
                "group law value mismatch at r=" + rat_to_string(r) + " s=" + rat_to_string(s));
    // eps/phi witness the admissible range ends.
    const Rat eps = cont_eps(p, i), phi = cont_phi(p, i);
    ctx.check(cont_op(p, i, eps).has_value() && !cont_op(p, i, eps + 1).has_value(),
              "eps does not witness the raising range");
    ctx.check(cont_op(p, i, -phi).has_value() && !cont_op(p, i, -phi - 1).has_value(),
              "phi does not witness the lowering range");
  }

  // (b) scaling equivariance against the integer module.
  for (int n = 2; n <= max_n; ++n) {
    std::vector<NNMatrix> pool;
    for (Coord s = 1; s <= 3; ++s)
      for (auto& m : all_matrices(n, s, /*lower_only=*/false)) pool.push_back(std::move(m));
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> pick_den(1, max_denominator);
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const NNMatrix m = pool[pick(rng)];
      const int den = pick_den(rng);
      const int i = pick_i(rng);
      const Side side = trial % 2 ? Side::row : Side::col;
      const RatMatrix rm = RatMatrix::from_integer(m);
      const RatMatrix scaled = rm.scaled(Rat(1, den));
      for (int p = 1; p <= 3; ++p) {
        const Rat r(p, den);
        const auto x = cont_matrix_op(scaled, i, r, side);
        const auto y = cont_matrix_op(rm, i, Rat(p), side);
        ctx.check(x.has_value() == y.has_value(), "scaling changed the operator domain");
        if (x && y) ctx.check(*x == y->scaled(Rat(1, den)), "scaling equivariance failed");
        // Integer raising powers agree with iterated bicrystal operators.
        std::optional<NNMatrix> z = m;
        for (int k = 0; k < p && z; ++k) z = bicrystal_op(*z, i, Dir::raise, side);
        ctx.check(y.has_value() == z.has_value(),
                  "continuous and integer domains differ on " + m.to_string());
        if (y && z) ctx.check(*y == RatMatrix::from_integer(*z),
                              "continuous raise differs from iterated integer raise");
      }
      // Path-level identity: pi_{e^r M} traces e^r pi_M.
      const Rat eps = cont_matrix_eps(scaled, i, Side::row);
      if (eps > 0) {
        const auto moved = cont_matrix_op(scaled, i, eps, Side::row);
        const auto path_moved = cont_op(build_pi_M(scaled), i, eps);
        ctx.check(moved.has_value() && path_moved.has_value() &&
                      equivalent(build_pi_M(*moved), *path_moved),
                  "pi_{e^r M} differs from e^r pi_M at " + scaled.to_string());
      }
    }
  }

  // (c) row/column commutation.
  for (int trial = 0; trial < commutation_trials; ++trial) {
    const int n = 2 + static_cast<int>(trial % std::max(1, max_n - 1));
    const RatMatrix m = random_rat_matrix(rng, n, max_denominator, /*lower=*/false);
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    std::uniform_int_distribution<int> num(-6, 6);
    const int i = pick_i(rng), j = pick_i(rng);
    const Rat r = Rat(num(rng), max_denominator), s = Rat(num(rng), max_denominator);
    const auto a = cont_matrix_op(m, i, r, Side::row);
    const auto ab = a ? cont_matrix_op(*a, j, s, Side::col) : std::nullopt;
    const auto b = cont_matrix_op(m, j, s, Side::col);
    const auto ba = b ? cont_matrix_op(*b, i, r, Side::row) : std::nullopt;
    ctx.check(ab == ba, "row and column operators do not commute on " + m.to_string());
  }

  // (d) the continuous main bijection on random lower-triangular matrices.
  for (int trial = 0; trial < main2_trials; ++trial) {
    const int n = 2 + static_cast<int>(trial % std::max(1, max_n - 1));
    const RatMatrix m = random_rat_matrix(rng, n, max_denominator, /*lower=*/true);
    try {
      const auto report = verify_main2(m);
      ctx.check(report.tau_geq_iota, "tensor cell violated for " + m.to_string());
      RatVec wl(report.lambda.size());
      for (size_t k = 0; k < report.lambda.size(); ++k)
        wl[report.w.image(static_cast<int>(k) + 1) - 1] = report.lambda[k];
      ctx.check(wl == report.iota_q, "coset representative does not match iota(Q)");
    } catch (const Error& e) {
      ctx.check(false, std::string("verify_main2 raised: ") + e.what());
    }
  }
  return ctx.res;
}

SuiteResult suite_negative_control(int max_n, int degree) {
  Ctx ctx("negative-control");
  for (int n = 2; n <= max_n; ++n) {
    const KernelSpec spec{n, KernelSpec::Support::lower, degree};
    const SparsePoly kernel = kernel_series(spec);
    const auto terms = rhs_terms(n, degree, Variant::lower_khat_k);
    for (size_t drop = 0; drop < terms.size(); ++drop) {
      if (terms[drop].y_set.elements.empty()) continue;
      SparsePoly sum(2 * n);
      for (size_t k = 0; k < terms.size(); ++k) {
        DemazureSet y = terms[k].y_set;
        if (k == drop) y.elements.pop_back();
        sum += character(terms[k].x_set, VarBlock::x) * character(y, VarBlock::y);
      }
      ctx.check(!(kernel - sum).is_zero(),
                "dropping an atom element left the difference zero (vacuous comparison?)");
    }
  }
  return ctx.res;
}

std::vector<SuiteResult> verify_all(int max_n, int max_degree, std::uint64_t seed) {
  if (max_n <= 0) return {};
  const Coord s_bound = std::min<Coord>(4, std::max(0, max_degree / 2));
  std::vector<SuiteResult> out;
  out.push_back(suite_cauchy_lower(max_n, max_degree));
  out.push_back(suite_cauchy_staircase(max_n, max_degree));
  out.push_back(suite_littlewood(max_n, max_degree));
  out.push_back(suite_main_bijection(max_n, s_bound));
  out.push_back(suite_demazure_oracle(max_n, std::min<Coord>(4, max_degree)));
  out.push_back(suite_psi_isomorphism(max_n, std::min<Coord>(5, max_degree)));
  out.push_back(suite_bicrystal_commutation(max_n, s_bound));
  out.push_back(suite_low_closure(max_n, s_bound));
  out.push_back(suite_continuous(max_n, seed, 400, 100, 100, 4));
  if (max_degree >= 2) out.push_back(suite_negative_control(max_n, std::min(4, max_degree)));
  return out;
}

}  // namespace crystal
