#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crystal/identity.hpp"
#include "crystal/json_io.hpp"

using namespace crystal;

namespace {

// Count matrices on the support with the given row and column sums.
Int count_matrices(const KernelSpec& spec, const Exponents& exp) {
  const int n = spec.n;
  std::vector<int> row(exp.begin(), exp.begin() + n);
  std::vector<int> col(exp.begin() + n, exp.end());
  Int count = 0;
  std::vector<int> m(n * n, 0);
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += m[i * n + j];
        if (s != col[j]) return;
      }
      ++count;
      return;
    }
    const int i = cell / n, j = cell % n;
    if (!spec.pair_in_support(i + 1, j + 1)) {
      self(self, cell + 1);
      return;
    }
    int budget = row[i];
    for (int jj = 0; jj < j; ++jj) budget -= m[i * n + jj];
    for (int v = 0; v <= budget; ++v) {
      m[i * n + j] = v;
      // Prune: the last supported cell of the row must absorb the rest.
      bool last = true;
      for (int jj = j + 1; jj < n; ++jj)
        if (spec.pair_in_support(i + 1, jj + 1)) last = false;
      if (!last || v == budget) self(self, cell + 1);
      m[i * n + j] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("kernel series examples") {
  CHECK(kernel_series({2, KernelSpec::Support::lower, 0}) == SparsePoly::one(4));
  CHECK(kernel_series({2, KernelSpec::Support::lower, 2}).to_string() ==
        "1 + x1*y1 + x2*y1 + x2*y2");
  CHECK(kernel_series({2, KernelSpec::Support::staircase, 2}).to_string() ==
        "1 + x1*y1 + x1*y2 + x2*y1");
}

TEST_CASE("kernel coefficients count matrices") {
  for (int n = 2; n <= 3; ++n) {
    for (auto support : {KernelSpec::Support::lower, KernelSpec::Support::upper,
                         KernelSpec::Support::staircase}) {
      const KernelSpec spec{n, support, 4};
      const SparsePoly series = kernel_series(spec);
      for (const auto& [exp, coef] : series.terms()) CHECK(coef == count_matrices(spec, exp));
      // And the zero coefficients really are zero.
      Exponents probe(2 * n, 0);
      probe[0] = 1;  // row sums (1,0,..), col sums (0,..,1): empty on lower support
      probe[2 * n - 1] = 1;
      if (support == KernelSpec::Support::lower) {
        CHECK(series.coefficient(probe) == 0);
        CHECK(count_matrices(spec, probe) == 0);
      }
    }
  }
}

TEST_CASE("refined character examples") {
  const Partition one({1, 0}, 2);
  const Tableau t1(one, {{1}}, 2), t2(one, {{2}}, 2);
  CHECK(refined_character({{t1, t1}}).to_string() == "x1*y1");
  CHECK(refined_character({{t1, t1}, {t2, t1}}).to_string() == "x1*y1 + x2*y1");
  CHECK(refined_character({}).is_zero());
}

TEST_CASE("rhs_sum examples") {
  for (Variant v : {Variant::lower_khat_k, Variant::lower_k_khat, Variant::staircase})
    CHECK(rhs_sum(2, 0, v) == SparsePoly::one(4));
  CHECK(rhs_sum(2, 2, Variant::lower_khat_k).to_string() == "1 + x1*y1 + x2*y1 + x2*y2");
  CHECK(rhs_sum(2, 2, Variant::staircase).to_string() == "1 + x1*y1 + x1*y2 + x2*y1");
}

TEST_CASE("identities hold at small scale") {
  for (Variant v : {Variant::lower_khat_k, Variant::lower_k_khat}) {
    const auto r = verify_identity(2, 4, v);
    CHECK(r.ok);
    CHECK(r.difference.is_zero());
  }
  CHECK(verify_identity(3, 4, Variant::staircase).ok);
  CHECK(verify_identity(1, 6, Variant::littlewood).ok);
}

TEST_CASE("littlewood in one variable is the even geometric series") {
  const auto r = verify_identity(1, 6, Variant::littlewood);
  CHECK(r.ok);
  SparsePoly expect(2);
  for (int k = 0; k <= 6; k += 2) expect.add_term({k, 0}, 1);
  CHECK(substitute_y_equals_x(kernel_series({1, KernelSpec::Support::lower, 6})) == expect);
}

TEST_CASE("refined character of RSK over M^low matches the kernel slice") {
  for (int n = 2; n <= 3; ++n) {
    const int smax = 4;
    const SparsePoly series = kernel_series({n, KernelSpec::Support::lower, 2 * smax});
    for (Coord s = 0; s <= smax; ++s) {
      std::vector<std::pair<Tableau, Tableau>> pairs;
      for (const auto& m : all_matrices(n, s, true)) pairs.push_back(rsk(m));
      SparsePoly lhs = refined_character(pairs);
      if (pairs.empty()) lhs = SparsePoly(2 * n);
      CHECK(lhs == series.homogeneous_component(2 * static_cast<int>(s)));
    }
  }
}

TEST_CASE("symmetric specialization matches the symmetric kernel") {
  // Setting y := x in the lower kernel gives the Littlewood product over
  // i <= j, which the upper-triangular support reproduces after swapping.
  const int n = 3, d = 6;
  const SparsePoly lower = kernel_series({n, KernelSpec::Support::lower, d});
  const SparsePoly upper = kernel_series({n, KernelSpec::Support::upper, d});
  CHECK(substitute_y_equals_x(lower) == substitute_y_equals_x(upper));
  CHECK(swap_xy_blocks(lower) == upper);
}

TEST_CASE("y := x in the expansion gives the Schur sum") {
  for (int n = 1; n <= 3; ++n)
    for (Variant v : {Variant::lower_khat_k, Variant::lower_k_khat})
      CHECK(substitute_y_equals_x(rhs_sum(n, 6, v)) == rhs_sum(n, 6, Variant::littlewood));
}

TEST_CASE("variable reversal maps the lower kernel to the staircase kernel") {
  for (int n = 2; n <= 3; ++n) {
    const SparsePoly lower = kernel_series({n, KernelSpec::Support::lower, 4});
    const SparsePoly staircase = kernel_series({n, KernelSpec::Support::staircase, 4});
    CHECK(reverse_x_variables(lower) == staircase);
    // And the expansions transform the same way.
    CHECK(reverse_x_variables(rhs_sum(n, 4, Variant::lower_khat_k)) ==
          rhs_sum(n, 4, Variant::staircase));
  }
}

TEST_CASE("truncated multiplication is associative on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3), nv(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = nv(rng);
    auto random_poly = [&] {
      SparsePoly p(2 * n);
      for (int t = 0; t < 4; ++t) {
        Exponents exp(2 * n);
        for (auto& x : exp) x = e(rng);
        p.add_term(exp, c(rng));
      }
      return p;
    };
    const SparsePoly a = random_poly(), b = random_poly(), cc = random_poly();
    const int d = 5;
    const auto left = SparsePoly::mul_truncated(SparsePoly::mul_truncated(a, b, d), cc, d);
    const auto right = SparsePoly::mul_truncated(a, SparsePoly::mul_truncated(b, cc, d), d);
    CHECK(left == right);
  }
}

TEST_CASE("report shape") {
  const auto r = verify_identity(2, 4, Variant::lower_khat_k);
  const std::string json = identity_report_to_json(r);
  CHECK(json.find("\"variant\":\"lower_KhatK\"") != std::string::npos);
  CHECK(json.find("\"ok\":true") != std::string::npos);
  CHECK(json.find("\"difference_terms\":0") != std::string::npos);
}
