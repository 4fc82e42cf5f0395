#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "crystal/error.hpp"
#include "crystal/weyl.hpp"

using namespace crystal;

namespace {

// Brute-force Bruhat order: u <= v iff some reduced word of v contains a
// reduced word of u as a subword.  Only used as an oracle at tiny ranks.
bool bruhat_leq_subword(const Permutation& u, const Permutation& v) {
  if (u.length() > v.length()) return false;
  const auto word = v.reduced_word();
  const auto target = u;
  // Enumerate subwords (v has length <= 6 for n <= 4).
  const size_t len = word.size();
  for (size_t mask = 0; mask < (size_t{1} << len); ++mask) {
    Permutation prod = Permutation::identity(u.rank());
    for (size_t k = 0; k < len; ++k)
      if (mask & (size_t{1} << k)) prod = prod * Permutation::simple(u.rank(), word[k]);
    if (prod == target) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("action on weights") {
  const Weight mu({1, 0});
  CHECK(act(Permutation::identity(2), mu) == mu);
  CHECK(act(Permutation::simple(2, 1), mu) == Weight({0, 1}));
  // w_0 reverses the coordinates.
  CHECK(act(Permutation::longest(3), Weight({2, 1, 0})) == Weight({0, 1, 2}));
  CHECK(act(Permutation::simple(3, 1) * Permutation::simple(3, 2) * Permutation::simple(3, 1),
            Weight({2, 1, 0})) == Weight({0, 1, 2}));
}

TEST_CASE("action is a group action") {
  for (int n = 2; n <= 4; ++n) {
    const Weight mu([n] {
      std::vector<Coord> c;
      for (int k = 0; k < n; ++k) c.push_back(7 - 2 * k);
      return c;
    }());
    for (const auto& u : symmetric_group(n))
      for (const auto& v : symmetric_group(n))
        CHECK(act(u * v, mu) == act(u, act(v, mu)));
  }
}

TEST_CASE("lengths and reduced words") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& w : symmetric_group(n)) {
      const auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      Permutation prod = Permutation::identity(n);
      for (int i : word) prod = prod * Permutation::simple(n, i);
      CHECK(prod == w);
    }
  }
}

TEST_CASE("bruhat order basics") {
  const int n = 3;
  for (const auto& w : symmetric_group(n)) {
    CHECK(bruhat_leq(Permutation::identity(n), w));
    CHECK(bruhat_leq(w, Permutation::longest(n)));
  }
  CHECK(bruhat_leq(Permutation({2, 1, 3}), Permutation({2, 3, 1})));
  CHECK_FALSE(bruhat_leq(Permutation({3, 2, 1}), Permutation({3, 1, 2})));
}

TEST_CASE("bruhat order matches the subword oracle") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& u : symmetric_group(n))
      for (const auto& v : symmetric_group(n))
        CHECK(bruhat_leq(u, v) == bruhat_leq_subword(u, v));
}

TEST_CASE("bruhat covers") {
  // Covering relations are exactly v = u * t for a transposition with the
  // length going up by one.
  const int n = 4;
  const auto group = symmetric_group(n);
  for (const auto& u : group) {
    for (const auto& v : group) {
      if (v.length() != u.length() + 1) continue;
      bool cover = false;
      for (int a = 1; a <= n && !cover; ++a)
        for (int b = a + 1; b <= n && !cover; ++b) {
          auto window = u.window();
          std::swap(window[a - 1], window[b - 1]);
          if (Permutation(window) == v) cover = true;
        }
      CHECK(bruhat_leq(u, v) == cover);
    }
  }
}

TEST_CASE("stabilizer and coset representatives") {
  SUBCASE("lambda fixed by all of W") {
    const auto data = stabilizer_and_coset_reps(Partition({1, 1}, 2));
    CHECK(data.stabilizer_generators == std::vector<int>{1});
    REQUIRE(data.reps.size() == 1);
    CHECK(data.reps[0].is_identity());
  }
  SUBCASE("free orbit") {
    const auto data = stabilizer_and_coset_reps(Partition({1, 0}, 2));
    CHECK(data.stabilizer_generators.empty());
    REQUIRE(data.reps.size() == 2);
    CHECK(data.reps[0].is_identity());
    CHECK(data.reps[1] == Permutation::simple(2, 1));
  }
  SUBCASE("partial stabilizer") {
    const auto data = stabilizer_and_coset_reps(Partition({2, 1, 1}, 3));
    CHECK(data.reps.size() == 3);
    CHECK(data.stabilizer_generators == std::vector<int>{2});
  }
}

TEST_CASE("coset reps are orbit-minimal and respect the stabilizer") {
  for (const auto& lambda :
       {Partition({2, 1, 1}, 3), Partition({3, 3, 0}, 3), Partition({2, 1, 0, 0}, 4)}) {
    const auto data = stabilizer_and_coset_reps(lambda);
    const auto pts = orbit(lambda);
    CHECK(data.reps.size() == pts.size());
    std::set<Weight> seen;
    for (const auto& w : data.reps) {
      seen.insert(act(w, lambda.weight()));
      for (int i : data.stabilizer_generators)
        CHECK(act(w * Permutation::simple(lambda.rank(), i), lambda.weight()) ==
              act(w, lambda.weight()));
      // Minimality within the coset.
      for (const auto& v : symmetric_group(lambda.rank()))
        if (act(v, lambda.weight()) == act(w, lambda.weight()))
          CHECK(w.length() <= v.length());
    }
    CHECK(seen.size() == pts.size());
  }
}

TEST_CASE("orbit sizes") {
  CHECK(orbit(Partition({1, 0}, 2)).size() == 2);
  CHECK(orbit(Partition({1, 1}, 2)).size() == 1);
  CHECK(orbit(Partition({2, 1, 0}, 3)).size() == 6);
}

TEST_CASE("parsing") {
  CHECK(Partition::parse("2,1,0", 3) == Partition({2, 1, 0}, 3));
  CHECK(Permutation::parse("231", 3) == Permutation({2, 3, 1}));
  CHECK(Permutation::parse("s1*s2", 3) ==
        Permutation::simple(3, 1) * Permutation::simple(3, 2));
  CHECK(Permutation::parse("e", 3).is_identity());
  CHECK_THROWS_AS(Partition::parse("1,2", 2), Error);
  CHECK_THROWS_AS(Permutation::parse("22", 2), Error);
}
