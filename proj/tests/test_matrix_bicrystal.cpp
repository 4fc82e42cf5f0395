#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "crystal/demazure.hpp"
#include "crystal/error.hpp"
#include "crystal/json_io.hpp"
#include "crystal/matrix.hpp"

using namespace crystal;

TEST_CASE("biword examples") {
  SUBCASE("diagonal matrix") {
    const auto bw = matrix_biword(NNMatrix::diagonal(Partition({2, 1}, 2)));
    CHECK(bw.a.to_string() == "112");
    CHECK(bw.b.to_string() == "112");
  }
  SUBCASE("zero matrix") {
    const auto bw = matrix_biword(NNMatrix::zeros(2));
    CHECK(bw.a.letters.empty());
    CHECK(bw.b.letters.empty());
  }
  SUBCASE("antidiagonal") {
    const auto bw = matrix_biword(NNMatrix::parse("0,1;1,0"));
    CHECK(bw.a.to_string() == "21");
    CHECK(bw.b.to_string() == "12");
  }
  SUBCASE("round trip and sortedness") {
    for (Coord s = 0; s <= 3; ++s)
      for (const auto& m : all_matrices(2, s, false))
        CHECK(biword_matrix(matrix_biword(m)) == m);
    CHECK_THROWS_AS(biword_matrix(Biword{Word({1, 2}, 2), Word({2, 1}, 2)}), Error);
    CHECK_THROWS_AS(biword_matrix(Biword{Word({1, 2}, 2), Word({1, 1}, 2)}), Error);
  }
}

TEST_CASE("bicrystal operator examples") {
  CHECK(bicrystal_op(NNMatrix::parse("0,1;1,0"), 1, Dir::raise, Side::row) ==
        NNMatrix::parse("1,1;0,0"));
  CHECK(bicrystal_op(NNMatrix::unit(2, 2, 1), 1, Dir::lower, Side::col) ==
        NNMatrix::unit(2, 2, 2));
  const NNMatrix ml = NNMatrix::diagonal(Partition({3, 1}, 2));
  for (Side side : {Side::row, Side::col})
    CHECK_FALSE(bicrystal_op(ml, 1, Dir::raise, side).has_value());
}

TEST_CASE("diagonal operator examples") {
  CHECK(diagonal_op(NNMatrix::unit(2, 2, 1), 1, Dir::raise) == NNMatrix::unit(2, 1, 1));
  CHECK_FALSE(diagonal_op(NNMatrix::unit(2, 2, 2), 1, Dir::lower).has_value());
  CHECK(diagonal_op(NNMatrix::unit(2, 1, 1), 1, Dir::lower) == NNMatrix::unit(2, 2, 1));
}

TEST_CASE("raise_to_highest examples") {
  SUBCASE("already extremal") {
    const auto res = raise_to_highest(NNMatrix::diagonal(Partition({2, 1}, 2)));
    CHECK(res.lambda == Partition({2, 1}, 2));
    CHECK(res.script.empty());
  }
  SUBCASE("single unit below the diagonal") {
    const auto res = raise_to_highest(NNMatrix::unit(2, 2, 1));
    CHECK(res.lambda == Partition({1, 0}, 2));
    REQUIRE(res.script.size() == 1);
    CHECK(res.script[0].i == 1);
  }
  SUBCASE("unit at the lower-right corner") {
    const auto res = raise_to_highest(NNMatrix::unit(2, 2, 2));
    CHECK(res.lambda == Partition({1, 0}, 2));
    CHECK(res.script.size() == 2);
  }
  SUBCASE("oracle: the diagonal-op graph on lower unit matrices") {
    // Every lower-triangular entry-sum-1 matrix raises to M_{(1)}; matrices
    // above the diagonal can terminate at other highest weight elements, so
    // the M_lambda guarantee is specific to M^low.
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= i; ++j)
        CHECK(raise_to_highest(NNMatrix::unit(3, i, j)).lambda == Partition({1}, 3));
    CHECK_THROWS_AS(raise_to_highest(NNMatrix::unit(3, 1, 2)), Error);
  }
}

TEST_CASE("rsk examples") {
  SUBCASE("diagonal to highest weight pair") {
    const Partition lambda({2, 1}, 2);
    const auto [p, q] = rsk(NNMatrix::diagonal(lambda));
    CHECK(p == Tableau::highest_weight(lambda, 2));
    CHECK(q == Tableau::highest_weight(lambda, 2));
  }
  SUBCASE("antidiagonal") {
    const auto [p, q] = rsk(NNMatrix::parse("0,1;1,0"));
    CHECK(p == Tableau(Partition({2, 0}, 2), {{1, 2}}, 2));
    CHECK(q == Tableau(Partition({2, 0}, 2), {{1, 2}}, 2));
  }
  SUBCASE("single subdiagonal unit") {
    const auto [p, q] = rsk(NNMatrix::unit(2, 2, 1));
    CHECK(p == Tableau(Partition({1, 0}, 2), {{2}}, 2));
    CHECK(q == Tableau(Partition({1, 0}, 2), {{1}}, 2));
  }
  SUBCASE("transpose swaps the pair") {
    for (Coord s = 0; s <= 4; ++s) {
      for (const auto& m : all_matrices(2, s, false)) {
        const auto [p, q] = rsk(m);
        const auto [pt, qt] = rsk(m.transposed());
        CHECK(p == qt);
        CHECK(q == pt);
      }
    }
  }
}

TEST_CASE("classify_low examples") {
  SUBCASE("unit at (1,1)") {
    const auto cls = classify_low(NNMatrix::unit(2, 1, 1));
    CHECK(cls.lambda == Partition({1, 0}, 2));
    CHECK(cls.w.is_identity());
  }
  SUBCASE("unit at (2,1)") {
    const auto cls = classify_low(NNMatrix::unit(2, 2, 1));
    CHECK(cls.lambda == Partition({1, 0}, 2));
    CHECK(cls.w.is_identity());
    CHECK(cls.p == Tableau(Partition({1, 0}, 2), {{2}}, 2));
    CHECK(cls.q == Tableau(Partition({1, 0}, 2), {{1}}, 2));
  }
  SUBCASE("unit at (2,2)") {
    const auto cls = classify_low(NNMatrix::unit(2, 2, 2));
    CHECK(cls.lambda == Partition({1, 0}, 2));
    CHECK(cls.w == Permutation::simple(2, 1));
  }
  SUBCASE("rejects non-lower-triangular input") {
    CHECK_THROWS_AS(classify_low(NNMatrix::parse("0,1;0,0")), Error);
  }
}

TEST_CASE("bicrystal commutation at small scale") {
  for (int n = 2; n <= 3; ++n) {
    for (Coord s = 0; s <= (n == 2 ? 4 : 3); ++s) {
      for (const auto& m : all_matrices(n, s, false)) {
        for (int i = 1; i < n; ++i)
          for (int j = 1; j < n; ++j)
            for (Dir di : {Dir::raise, Dir::lower})
              for (Dir dj : {Dir::raise, Dir::lower}) {
                auto r = bicrystal_op(m, i, di, Side::row);
                auto rc = r ? bicrystal_op(*r, j, dj, Side::col) : std::nullopt;
                auto c = bicrystal_op(m, j, dj, Side::col);
                auto cr = c ? bicrystal_op(*c, i, di, Side::row) : std::nullopt;
                CHECK(rc == cr);
              }
      }
    }
  }
}

TEST_CASE("row and column components meet in exactly one diagonal") {
  // Under row+col operators every matrix connects to exactly one M_lambda.
  for (int n = 2; n <= 3; ++n) {
    std::map<NNMatrix, NNMatrix> root;  // matrix -> its component's extremum
    for (Coord s = 0; s <= 4; ++s) {
      for (const auto& m : all_matrices(n, s, false)) {
        NNMatrix cur = m;
        // Row raises then column raises reach the bi-extremal element.
        bool moved = true;
        while (moved) {
          moved = false;
          for (Side side : {Side::row, Side::col})
            for (int i = 1; i < n; ++i)
              while (auto up = bicrystal_op(cur, i, Dir::raise, side)) {
                cur = *up;
                moved = true;
              }
        }
        const auto diag = cur.as_diagonal_partition();
        REQUIRE(diag.has_value());
        root.emplace(m, cur);
      }
    }
    // Connectivity: neighbors share the root.
    for (const auto& [m, r] : root) {
      for (Side side : {Side::row, Side::col})
        for (int i = 1; i < n; ++i)
          for (Dir dir : {Dir::raise, Dir::lower})
            if (auto next = bicrystal_op(m, i, dir, side))
              if (next->entry_sum() <= 4) CHECK(root.at(*next) == r);
    }
  }
}

TEST_CASE("upper-triangular matrices close under the transposed structure") {
  // The mirror statement for M^up: operators routed through the transpose
  // stay upper-triangular, and the raise-extremal elements are diagonal.
  for (int n = 2; n <= 3; ++n) {
    for (Coord s = 0; s <= 4; ++s) {
      for (const auto& lower : all_matrices(n, s, true)) {
        const NNMatrix m = lower.transposed();
        bool extremal = true;
        for (int i = 1; i < n; ++i) {
          for (Dir dir : {Dir::raise, Dir::lower}) {
            if (auto moved = diagonal_op(m.transposed(), i, dir)) {
              CHECK(moved->transposed().upper_triangular());
              if (dir == Dir::raise) extremal = false;
            }
          }
        }
        if (extremal) CHECK(m.as_diagonal_partition().has_value());
      }
    }
  }
}

namespace {

// The two-factor tensor rule applied to an RSK pair directly, using the
// tableau stats; the oracle for the routing inside diagonal_op.
std::optional<std::pair<Tableau, Tableau>> pair_tensor_op(const Tableau& p, const Tableau& q,
                                                          int i, Dir dir) {
  const CrystalStats sp = word_stats(p.reading_word());
  const CrystalStats sq = word_stats(q.reading_word());
  const bool first = dir == Dir::raise ? sp.phi_at(i) >= sq.eps_at(i)
                                       : sp.phi_at(i) > sq.eps_at(i);
  if (first) {
    auto moved = tableau_op(p, i, dir);
    if (!moved) return std::nullopt;
    return std::make_pair(*moved, q);
  }
  auto moved = tableau_op(q, i, dir);
  if (!moved) return std::nullopt;
  return std::make_pair(p, *moved);
}

}  // namespace

TEST_CASE("rsk intertwines the diagonal operators with the pair tensor rule") {
  for (int n = 2; n <= 3; ++n) {
    for (Coord s = 0; s <= 3; ++s) {
      for (const auto& m : all_matrices(n, s, false)) {
        const auto [p, q] = rsk(m);
        for (int i = 1; i < n; ++i) {
          for (Dir dir : {Dir::raise, Dir::lower}) {
            const auto moved = diagonal_op(m, i, dir);
            const auto pair_moved = pair_tensor_op(p, q, i, dir);
            CHECK(moved.has_value() == pair_moved.has_value());
            if (moved && pair_moved) {
              const auto [mp, mq] = rsk(*moved);
              CHECK(mp == pair_moved->first);
              CHECK(mq == pair_moved->second);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("diagonal ops preserve lower-triangularity") {
  for (int n = 2; n <= 3; ++n)
    for (Coord s = 0; s <= 4; ++s)
      for (const auto& m : all_matrices(n, s, true))
        for (int i = 1; i < n; ++i)
          for (Dir dir : {Dir::raise, Dir::lower})
            if (auto moved = diagonal_op(m, i, dir)) CHECK(moved->lower_triangular());
}

TEST_CASE("classify_low is a bijection onto matching-degree pairs") {
  for (int n = 2; n <= 3; ++n) {
    for (Coord s = 0; s <= (n == 2 ? 4 : 3); ++s) {
      const auto matrices = all_matrices(n, s, true);
      std::set<std::string> seen;
      for (const auto& m : matrices) {
        const auto cls = classify_low(m);
        CHECK(cls.lambda.size() == s);
        CHECK(opposite_demazure_crystal(cls.lambda, n, cls.w).contains(cls.p));
        CHECK(atom(cls.lambda, n, cls.w, DemKind::atom).contains(cls.q));
        seen.insert(cls.lambda.to_string() + "|" + cls.w.to_string() + "|" +
                    cls.p.to_string() + "|" + cls.q.to_string());
      }
      CHECK(seen.size() == matrices.size());
      size_t target = 0;
      for (const auto& lambda : Partition::all_of_size(n, s))
        for (const auto& w : stabilizer_and_coset_reps(lambda).reps)
          target += opposite_demazure_crystal(lambda, n, w).elements.size() *
                    atom(lambda, n, w, DemKind::atom).elements.size();
      CHECK(target == matrices.size());
    }
  }
}

TEST_CASE("matrix parsing and JSON") {
  const NNMatrix m = NNMatrix::parse("0,0;1,0");
  CHECK(m == NNMatrix::unit(2, 2, 1));
  CHECK(m.to_string() == "0,0;1,0");
  CHECK(nn_matrix_from_json(nn_matrix_to_json(m)) == m);
  CHECK_THROWS_AS(NNMatrix::parse("1,2;3"), Error);
  CHECK_THROWS_AS(NNMatrix::parse("1,-2;3,4"), Error);
}
