#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lojax/error.hpp"
#include "lojax/multiplicity.hpp"
#include "support/generators.hpp"

#include <future>

using namespace lojax;

namespace {

MonomialIdeal mi(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<ZVec> g;
  for (const auto& row : gens) {
    ZVec v;
    for (int c : row) v.push_back(Int(c));
    g.push_back(std::move(v));
  }
  return MonomialIdeal(n, std::move(g));
}

}  // namespace

TEST_CASE("covolume fixtures") {
  CHECK(covolume(newton_polyhedron(mi(2, {{2, 0}, {0, 3}}))) == Rat(3));
  CHECK(covolume(newton_polyhedron(maximal_ideal(2))) == Rat(1) / 2);
  auto sum = minkowski_sum(newton_polyhedron(mi(2, {{2, 0}, {0, 3}})),
                           newton_polyhedron(maximal_ideal(2)));
  CHECK(covolume(sum) == Rat(11) / 2);  // shoelace on (0,0),(3,0),(2,1),(0,4)
  // The worked pair's J: shoelace on (0,0),(4,0),(1,1),(0,4).
  CHECK(covolume(newton_polyhedron(mi(2, {{4, 0}, {1, 1}, {0, 4}}))) == Rat(4));
  CHECK_THROWS_AS(covolume(newton_polyhedron(mi(2, {{1, 1}}))), Error);
}

TEST_CASE("boundary-cone covolume equals the box-truncation oracle") {
  testing::Rng rng(919);
  for (int n = 2; n <= 4; ++n) {
    for (int round = 0; round < (n == 4 ? 4 : 12); ++round) {
      auto a = testing::random_convenient_ideal(rng, n, 6, 3);
      auto hull = upward_hull_of(a);
      CHECK(covolume_dual(hull) == covolume_dual_box_oracle(hull));
      auto b = testing::random_convenient_ideal(rng, n, 4, 2);
      auto sum = minkowski_sum_dual(hull, upward_hull_of(b));
      CHECK(covolume_dual(sum) == covolume_dual_box_oracle(sum));
    }
  }
  // Rational-vertex polyhedra reach the same agreement.
  auto dd = dilate_dual(upward_hull_of(MonomialIdeal(
                2, {ZVec{Int(2), Int(0)}, ZVec{Int(1), Int(1)}, ZVec{Int(0), Int(3)}})),
            Rat(7) / 3);
  CHECK(covolume_dual(dd) == covolume_dual_box_oracle(dd));
}

TEST_CASE("covolume is monotone under polyhedron inclusion") {
  testing::Rng rng(17);
  for (int round = 0; round < 10; ++round) {
    auto a = testing::random_convenient_ideal(rng, 2, 6, 2);
    auto b = ideal_sum(a, testing::random_convenient_ideal(rng, 2, 6, 2));
    // Gamma(a) is a subset of Gamma(b), so the staircase of b is smaller.
    CHECK(covolume(newton_polyhedron(b)) <= covolume(newton_polyhedron(a)));
  }
}

TEST_CASE("samuel multiplicity fixtures") {
  CHECK(samuel_multiplicity(mi(2, {{2, 0}, {0, 3}})) == 6);
  CHECK(samuel_multiplicity(mi(2, {{3, 0}, {0, 7}})) == 21);
  CHECK(samuel_multiplicity(maximal_ideal(3)) == 1);
  // The three-variable instance: e(J) = abc, e(I) = 3*d^2*e.
  CHECK(samuel_multiplicity(mi(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) == 24);
  CHECK(samuel_multiplicity(mi(3, {{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {1, 1, 1}})) == 75);
  CHECK_THROWS_AS(samuel_multiplicity(MonomialIdeal(2, {ZVec{Int(0), Int(0)}})), Error);
}

TEST_CASE("multiplicity powers and closure invariance") {
  testing::Rng rng(23);
  for (int n = 2; n <= 3; ++n) {
    for (int round = 0; round < 6; ++round) {
      auto ideal = testing::random_convenient_ideal(rng, n, 4, 2);
      Int e = samuel_multiplicity(ideal);
      Int pow = 1;
      for (int s = 1; s <= 3; ++s) {
        pow = 1;
        for (int k = 0; k < n; ++k) pow *= s;
        CHECK(samuel_multiplicity(ideal_power(ideal, s)) == e * pow);
      }
      CHECK(samuel_multiplicity(closure_generators(ideal)) == e);
    }
  }
}

TEST_CASE("mixed multiplicity fixtures") {
  auto i = mi(2, {{2, 0}, {0, 3}});
  auto m = maximal_ideal(2);
  CHECK(mixed_multiplicity({i, i}) == 6);          // diagonal of the polarization
  CHECK(mixed_multiplicity({i, m}) == 2);          // the anchored value
  CHECK(mixed_multiplicity({m, m}) == 1);
  CHECK_THROWS_AS(mixed_multiplicity({i}), Error);  // wrong tuple length
}

TEST_CASE("mixed sequence fixtures with cross-check on") {
  auto table = mixed_sequence(mi(2, {{2, 0}, {0, 3}}), maximal_ideal(2), true);
  CHECK(table.mixed == std::vector<Int>{Int(1), Int(2), Int(6)});
  CHECK(table.e_i == 6);
  CHECK(table.e_j == 1);

  // I = J: every entry is e(I).
  auto same = mixed_sequence(mi(2, {{2, 0}, {0, 3}}), mi(2, {{2, 0}, {0, 3}}), true);
  CHECK(same.mixed == std::vector<Int>{Int(6), Int(6), Int(6)});

  // The diagonal pair: e_1 = 8 = (4/3) * 6 by the telescoping identities.
  auto diag = mixed_sequence(mi(2, {{4, 0}, {0, 4}}), mi(2, {{2, 0}, {0, 3}}), true);
  CHECK(diag.mixed == std::vector<Int>{Int(6), Int(8), Int(16)});

  // The worked pair.
  auto ex = mixed_sequence(mi(2, {{5, 0}, {0, 5}}), mi(2, {{4, 0}, {1, 1}, {0, 4}}), true);
  CHECK(ex.mixed == std::vector<Int>{Int(8), Int(10), Int(25)});
}

TEST_CASE("mixed sequence boundary entries match the pure multiplicities") {
  testing::Rng rng(31);
  for (int n = 2; n <= 3; ++n) {
    for (int round = 0; round < 5; ++round) {
      auto i = testing::random_convenient_ideal(rng, n, 4, 1);
      auto j = testing::random_convenient_ideal(rng, n, 4, 1);
      auto table = mixed_sequence(i, j, true);
      CHECK(table.e_j == samuel_multiplicity(j));
      CHECK(table.e_i == samuel_multiplicity(i));
      CHECK(static_cast<int>(table.mixed.size()) == n + 1);
    }
  }
}

TEST_CASE("rees sigma stabilizes for finite-colength tuples") {
  auto i = mi(2, {{2, 0}, {0, 3}});
  auto m = maximal_ideal(2);
  auto s = rees_sigma({i, m});
  REQUIRE(s.has_value());
  CHECK(*s == mixed_multiplicity({i, m}));
}

TEST_CASE("rees sigma on the mixed finite/non-finite tuple") {
  auto a = mi(2, {{2, 0}});       // <x^2>, not finite colength
  auto b = maximal_power(2, 3);   // m^3
  auto s = rees_sigma({a, b});
  REQUIRE(s.has_value());
  CHECK(*s == 6);
}

TEST_CASE("rees sigma reports non-stabilization") {
  auto a = mi(2, {{1, 0}});  // <x>
  auto s = rees_sigma({a, a}, 12);
  CHECK_FALSE(s.has_value());
}

TEST_CASE("colength fixtures") {
  CHECK(colength(mi(2, {{2, 0}, {0, 3}})) == 6);
  CHECK(colength(maximal_ideal(2)) == 1);
  CHECK(colength(mi(2, {{2, 0}, {1, 1}, {0, 2}})) == 3);
  CHECK(colength(maximal_power(3, 2)) == 4);  // 1 + 3 monomials below degree 2
  CHECK_THROWS_AS(colength(mi(2, {{1, 1}})), Error);
}

TEST_CASE("scaled colength converges to the covolume") {
  // For integrally closed plane ideals, colength(closure(I^s))/s^2 approaches
  // the covolume at rate C/s; the deviation scaled by s must not grow.
  testing::Rng rng(41);
  for (int round = 0; round < 3; ++round) {
    auto ideal = closure_generators(testing::random_convenient_ideal(rng, 2, 4, 2));
    Rat covol = covolume(newton_polyhedron(ideal));
    Rat prev_scaled_err;
    bool first = true;
    for (int s : {8, 16, 32}) {
      auto power = closure_generators(ideal_power(ideal, s));
      Rat density = to_rat(colength(power)) / Rat(s * s);
      Rat err = abs(Rat(density - covol));
      Rat scaled = err * s;
      if (!first) CHECK(scaled <= prev_scaled_err + Rat(1) / 1000000);
      prev_scaled_err = scaled;
      first = false;
    }
  }
}

TEST_CASE("three-variable covolume against the lattice-count density") {
  // Fully combinatorial cross-check of the 3D volume machinery: counting
  // lattice points outside the s-dilated polyhedron (the staircase of the
  // closure of I^s) has density covol + O(1/s).
  testing::Rng rng(53);
  for (int round = 0; round < 2; ++round) {
    auto ideal = testing::random_convenient_ideal(rng, 3, 4, 2);
    auto p = newton_polyhedron(ideal);
    Rat covol = covolume(p);
    auto staircase_count = [&](int s) {
      auto d = dilate(p, Rat(s));
      Int bound0 = ceil_rat(*d.axis_intercepts[0]);
      Int bound1 = ceil_rat(*d.axis_intercepts[1]);
      Int bound2 = ceil_rat(*d.axis_intercepts[2]);
      Int count = 0;
      for (Int a = 0; a < bound0; ++a)
        for (Int b = 0; b < bound1; ++b)
          for (Int c = 0; c < bound2; ++c)
            if (!contains(d, QVec{to_rat(a), to_rat(b), to_rat(c)})) ++count;
      return count;
    };
    Rat err4 = abs(Rat(to_rat(staircase_count(4)) / Rat(64) - covol)) * 4;
    Rat err8 = abs(Rat(to_rat(staircase_count(8)) / Rat(512) - covol)) * 8;
    // The scaled error is bounded by a surface-area constant; halving the
    // mesh must not let it grow.
    CHECK(err8 <= err4 + Rat(1) / 1000000);
  }
}

TEST_CASE("concurrent invocations agree") {
  // Every operation is a pure function on immutable values; four threads
  // computing the same sequence must agree bit for bit.
  auto i = mi(2, {{5, 0}, {0, 5}});
  auto j = mi(2, {{4, 0}, {1, 1}, {0, 4}});
  std::vector<std::future<std::vector<Int>>> futures;
  for (int t = 0; t < 4; ++t)
    futures.push_back(std::async(std::launch::async, [&] {
      return mixed_sequence(i, j, true).mixed;
    }));
  std::vector<Int> expected{Int(8), Int(10), Int(25)};
  for (auto& fut : futures) CHECK(fut.get() == expected);
}

TEST_CASE("lower bound against every convenient filtration") {
  // mixed(I_1..I_n) >= prod nu_J(I_k) / M^n * e(J) for random tuples and J.
  testing::Rng rng(47);
  for (int round = 0; round < 10; ++round) {
    int n = 2;
    auto i1 = testing::random_convenient_ideal(rng, n, 5, 2);
    auto i2 = testing::random_convenient_ideal(rng, n, 5, 2);
    auto j = testing::random_convenient_ideal(rng, n, 4, 1);
    auto f = build_filtration(j);
    Rat rhs = *nu_ideal(f, i1) * *nu_ideal(f, i2);
    rhs /= to_rat(f.level) * to_rat(f.level);
    rhs *= to_rat(samuel_multiplicity(j));
    CHECK(to_rat(mixed_multiplicity({i1, i2})) >= rhs);
  }
}
