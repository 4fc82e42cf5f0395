#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crystal/continuous.hpp"
#include "crystal/error.hpp"
#include "crystal/json_io.hpp"
#include "crystal/ls_path.hpp"

using namespace crystal;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

}  // namespace

TEST_CASE("cont_op basics") {
  const PLPath straight = PLPath::straight(rv({Rat(1), Rat(0)}));
  SUBCASE("raising a dominant path is null, e^0 is the identity") {
    CHECK_FALSE(cont_op(straight, 1, Rat(1, 2)).has_value());
    CHECK(cont_op(straight, 1, Rat(0)) == straight);
  }
  SUBCASE("half lowering bends the path at 1/2") {
    const auto p = cont_op(straight, 1, Rat(-1, 2));
    REQUIRE(p.has_value());
    CHECK(p->times() == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
    CHECK(p->values()[1] == rv({Rat(0), Rat(1, 2)}));
    CHECK(p->endpoint() == rv({Rat(1, 2), Rat(1, 2)}));
  }
  SUBCASE("raising undoes lowering") {
    const auto p = cont_op(straight, 1, Rat(-1, 2));
    REQUIRE(p.has_value());
    CHECK(cont_op(*p, 1, Rat(1, 2)) == straight);
  }
  SUBCASE("admissible range is [-phi, eps]") {
    CHECK(cont_eps(straight, 1) == 0);
    CHECK(cont_phi(straight, 1) == 1);
    CHECK(cont_op(straight, 1, Rat(-1)).has_value());
    CHECK_FALSE(cont_op(straight, 1, Rat(-5, 4)).has_value());
  }
}

TEST_CASE("cont_tensor_op splits the amount") {
  const PLPath straight = PLPath::straight(rv({Rat(1), Rat(0)}));
  SUBCASE("r = 0 is the identity on the pair") {
    const auto pair = cont_tensor_op(straight, straight, 1, Rat(0));
    REQUIRE(pair.has_value());
    CHECK(pair->first == straight);
    CHECK(pair->second == straight);
  }
  SUBCASE("lowering by one lands on the first factor") {
    const auto pair = cont_tensor_op(straight, straight, 1, Rat(-1));
    REQUIRE(pair.has_value());
    CHECK(pair->first == cont_op(straight, 1, Rat(-1)));
    CHECK(pair->second == straight);
  }
  SUBCASE("outside the admissible range") {
    CHECK_FALSE(cont_tensor_op(straight, straight, 1, Rat(5)).has_value());
    CHECK_FALSE(cont_tensor_op(straight, straight, 1, Rat(-5)).has_value());
  }
}

TEST_CASE("concatenation intertwines with the tensor rule") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-8, 8), den(1, 4), part(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    RatVec la{Rat(part(rng)) + Rat(part(rng), 4), Rat(part(rng), 4)};
    if (la[0] < la[1]) std::swap(la[0], la[1]);
    RatVec mu{Rat(part(rng)) + Rat(part(rng), 4), Rat(part(rng), 4)};
    if (mu[0] < mu[1]) std::swap(mu[0], mu[1]);
    PLPath a = PLPath::straight(la), b = PLPath::straight(mu);
    if (trial % 2) {
      if (auto moved = cont_op(a, 1, Rat(-part(rng), 4))) a = *moved;
      if (auto moved = cont_op(b, 1, Rat(-part(rng), 4))) b = *moved;
    }
    const Rat r(num(rng), den(rng));
    const auto joint = cont_op(concat(a, b), 1, r);
    const auto split = cont_tensor_op(a, b, 1, r);
    CHECK(joint.has_value() == split.has_value());
    if (joint && split) CHECK(equivalent(*joint, concat(split->first, split->second)));
  }
}

TEST_CASE("build_pi_M examples") {
  SUBCASE("M_lambda gives the straight path per column") {
    const RatMatrix m = RatMatrix::diagonal(rv({Rat(1), Rat(0)}));
    CHECK(build_pi_M(m) == PLPath::straight(rv({Rat(1), Rat(0)})));
  }
  SUBCASE("diag(1,1) walks eps_1 then eps_2") {
    const RatMatrix m = RatMatrix::diagonal(rv({Rat(1), Rat(1)}));
    const PLPath p = build_pi_M(m);
    CHECK(p.values().back() == rv({Rat(1), Rat(1)}));
    CHECK(p.values()[1] == rv({Rat(1), Rat(0)}));
  }
  SUBCASE("scaled unit matrix") {
    RatMatrix m = RatMatrix::zeros(2);
    m.at(2, 1) = Rat(1, 2);
    CHECK(build_pi_M(m) == PLPath::straight(rv({Rat(0), Rat(1, 2)})));
  }
  SUBCASE("zero matrix gives the constant path") {
    CHECK(build_pi_M(RatMatrix::zeros(2)) == PLPath::constant(2));
  }
}

TEST_CASE("matrix operator matches the path operator") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(0, 2), den(1, 4), rnum(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 2;
    RatMatrix m = RatMatrix::zeros(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) m.at(i, j) = Rat(num(rng), den(rng));
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    const int i = pick_i(rng);
    const Rat r(rnum(rng), den(rng));
    const auto moved = cont_matrix_op(m, i, r, Side::row);
    const auto path_moved = cont_op(build_pi_M(m), i, r);
    CHECK(moved.has_value() == path_moved.has_value());
    if (moved && path_moved) CHECK(equivalent(build_pi_M(*moved), *path_moved));
    // eps/phi agree between the matrix and path computations.
    CHECK(cont_matrix_eps(m, i, Side::row) == cont_eps(build_pi_M(m), i));
    CHECK(cont_matrix_phi(m, i, Side::row) == cont_phi(build_pi_M(m), i));
  }
}

TEST_CASE("cont_raise_to_highest examples") {
  SUBCASE("diagonal dominant is terminal") {
    const RatMatrix m = RatMatrix::diagonal(rv({Rat(3, 2), Rat(1, 2)}));
    const auto res = cont_raise_to_highest(m);
    CHECK(res.lambda == rv({Rat(3, 2), Rat(1, 2)}));
    CHECK(res.script.empty());
  }
  SUBCASE("half subdiagonal unit") {
    RatMatrix m = RatMatrix::zeros(2);
    m.at(2, 1) = Rat(1, 2);
    const auto res = cont_raise_to_highest(m);
    CHECK(res.lambda == rv({Rat(1, 2), Rat(0)}));
    REQUIRE(res.script.size() == 1);
    CHECK(res.script[0].side == Side::row);
    CHECK(res.script[0].r == Rat(1, 2));
  }
  SUBCASE("terminal weight is independent of the sweep order") {
    // Raising the transpose swaps the roles of the two sides, so both
    // schedules must land on the same diagonal.
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> num(0, 2), den(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + trial % 2;
      RatMatrix m = RatMatrix::zeros(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = Rat(num(rng), den(rng));
      CHECK(cont_raise_to_highest(m).lambda == cont_raise_to_highest(m.transposed()).lambda);
    }
  }
  SUBCASE("scaling oracle against the integer raise") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(0, 2), den(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 2;
      NNMatrix m0 = NNMatrix::zeros(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) m0.at(i, j) = num(rng);
      const int d = den(rng);
      const auto scaled = cont_raise_to_highest(RatMatrix::from_integer(m0).scaled(Rat(1, d)));
      const auto integer = raise_to_highest(m0);
      RatVec expect;
      for (Coord p : integer.lambda.parts()) expect.push_back(Rat(p, d));
      CHECK(scaled.lambda == expect);
    }
  }
}

TEST_CASE("verify_main2 examples") {
  SUBCASE("M_lambda") {
    const auto rep = verify_main2(RatMatrix::diagonal(rv({Rat(1), Rat(1, 2)})));
    CHECK(rep.w.is_identity());
    CHECK(rep.tau_geq_iota);
    CHECK(rep.p_path == PLPath::straight(rv({Rat(1), Rat(1, 2)})));
    CHECK(rep.q_path == rep.p_path);
  }
  SUBCASE("half subdiagonal unit scales the integer answer") {
    RatMatrix m = RatMatrix::zeros(2);
    m.at(2, 1) = Rat(1, 2);
    const auto rep = verify_main2(m);
    CHECK(rep.lambda == rv({Rat(1, 2), Rat(0)}));
    CHECK(rep.w.is_identity());
    // Integer counterpart: classify_low(e_21) has P = [2], Q = [1].
    const auto cls = classify_low(NNMatrix::unit(2, 2, 1));
    CHECK(cls.w == rep.w);
    const PLPath p_int = psi(cls.p, cls.lambda).to_pl();
    const PLPath q_int = psi(cls.q, cls.lambda).to_pl();
    CHECK(equivalent(rep.p_path, p_int.scaled(Rat(1, 2))));
    CHECK(equivalent(rep.q_path, q_int.scaled(Rat(1, 2))));
  }
  SUBCASE("rejects non-lower-triangular input") {
    RatMatrix m = RatMatrix::zeros(2);
    m.at(1, 2) = Rat(1, 2);
    CHECK_THROWS_AS(verify_main2(m), Error);
  }
}

TEST_CASE("kappa agrees with integer classification on integer matrices") {
  // For integral lower-triangular M, the continuous kappa image must be the
  // psi image of the RSK pair.
  for (Coord s = 0; s <= 3; ++s) {
    for (const auto& m : all_matrices(2, s, true)) {
      const auto rep = verify_main2(RatMatrix::from_integer(m));
      const auto cls = classify_low(m);
      CHECK(rep.w == cls.w);
      CHECK(equivalent(rep.p_path, psi(cls.p, cls.lambda).to_pl()));
      CHECK(equivalent(rep.q_path, psi(cls.q, cls.lambda).to_pl()));
    }
  }
}

TEST_CASE("group law on random paths") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), part(0, 2);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 2;
    RatVec la;
    for (int k = 0; k < n; ++k) la.push_back(Rat(part(rng), den(rng)));
    std::sort(la.rbegin(), la.rend());
    PLPath p = PLPath::straight(la);
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    for (int k = 0; k < 3; ++k) {
      const int i = pick_i(rng);
      const Rat phi = cont_phi(p, i);
      if (phi == 0) continue;
      if (auto moved = cont_op(p, i, -phi * Rat(1 + part(rng), 3))) p = *moved;
    }
    const int i = pick_i(rng);
    const Rat r(num(rng), den(rng)), s(num(rng), den(rng));
    const auto a = cont_op(p, i, r);
    if (!a) continue;
    const auto b = cont_op(*a, i, s);
    const auto c = cont_op(p, i, r + s);
    CHECK(b.has_value() == c.has_value());
    if (b && c) CHECK(*b == *c);
  }
}

TEST_CASE("ls direction chains of lowered paths") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> den(1, 4), part(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 2;
    RatVec la;
    for (int k = 0; k < n; ++k) la.push_back(Rat(part(rng), den(rng)));
    std::sort(la.rbegin(), la.rend());
    PLPath p = PLPath::straight(la);
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    for (int k = 0; k < 3; ++k) {
      const int i = pick_i(rng);
      const Rat phi = cont_phi(p, i);
      if (phi == 0) continue;
      if (auto moved = cont_op(p, i, -phi * Rat(1 + part(rng), 3))) p = *moved;
    }
    CHECK_NOTHROW(ls_direction_chain(p, la));
  }
}

TEST_CASE("rational matrix parsing and JSON") {
  const RatMatrix m = RatMatrix::parse("1/2,0;1/3,2");
  CHECK(m.at(1, 1) == Rat(1, 2));
  CHECK(m.at(2, 1) == Rat(1, 3));
  CHECK(m.to_string() == "1/2,0;1/3,2");
  CHECK(rat_matrix_from_json(rat_matrix_to_json(m)) == m);
  CHECK_THROWS_AS(RatMatrix::parse("1/2;1"), Error);
}

TEST_CASE("PL path JSON round trip") {
  RatMatrix m = RatMatrix::zeros(2);
  m.at(1, 1) = Rat(1, 3);
  m.at(2, 2) = Rat(1, 3);
  const PLPath p = build_pi_M(m);
  const std::string s = pl_path_to_json(p);
  CHECK(pl_path_from_json(s) == p);
  CHECK(s.find("\"t\"") != std::string::npos);
}
