#include <doctest.h>

#include "g2atomic/checks.hpp"
#include "g2atomic/lattice.hpp"
#include "oracles.hpp"

using namespace g2;

TEST_CASE("root and height conventions") {
  CHECK(to_root_coords(kAlpha1) == RootCoords{1, 0});
  CHECK(to_root_coords(kAlpha2) == RootCoords{0, 1});
  CHECK(to_root_coords(kRho) == RootCoords{5, 3});
  CHECK(height(kRho) == 8);
  for (int k = 2; k <= 5; ++k) CHECK(height(gamma(k)) == k);
  CHECK(gamma(2) == Weight{-1, 1});
  CHECK(gamma(3) == Weight{1, 0});
  CHECK(gamma(4) == Weight{3, -1});
  CHECK(gamma(5) == Weight{0, 1});
  CHECK(roots_of_height_at_least(2).size() == 4);
  CHECK(roots_of_height_at_least(5).size() == 1);
  CHECK(roots_of_height_at_least(6).empty());
  CHECK_THROWS_AS(gamma(1), DomainError);
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq({0, 0}, {1, 0}));
  CHECK(dominance_leq({1, 0}, {0, 1}));
  CHECK_FALSE(dominance_leq({0, 1}, {1, 0}));
  CHECK(dominance_leq({3, 2}, {6, 9}));
  CHECK(dominance_leq({2, 4}, {2, 4}));
}

TEST_CASE("reflections are involutions and dot action fixes -rho") {
  oracle::Gen gen(11);
  for (int n = 0; n < 500; ++n) {
    const Weight w = gen.any_weight(40);
    for (int i = 1; i <= 2; ++i) {
      CHECK(reflect(i, reflect(i, w)) == w);
      CHECK(dot_reflect(i, dot_reflect(i, w)) == w);
    }
  }
  CHECK(dot_reflect(1, {-1, -1}) == Weight{-1, -1});
  CHECK(dot_reflect(2, {-1, -1}) == Weight{-1, -1});
}

TEST_CASE("dominant_rep agrees with the brute-force Weyl group") {
  REQUIRE(oracle::weyl_group().size() == 12);
  for (std::int64_t a = -25; a <= 25; ++a)
    for (std::int64_t b = -25; b <= 25; ++b) {
      const auto [sign, rep] = oracle::straighten({a, b});
      const SignedDominant got = dominant_rep({a, b});
      INFO(a, ",", b);
      CHECK(got.sign() == sign);
      if (sign != 0) CHECK(got.rep() == rep);
    }
}

TEST_CASE("dominant_conjugate lands in the orbit") {
  oracle::Gen gen(5);
  for (int n = 0; n < 300; ++n) {
    const Weight w = gen.any_weight(30);
    const Weight d = dominant_conjugate(w);
    CHECK(d.is_dominant());
    bool found = false;
    for (const auto& g : oracle::weyl_group()) found = found || g.apply(w) == d;
    CHECK(found);
  }
}

TEST_CASE("HeightSet basics") {
  const auto all = HeightSet::all();
  CHECK(all.size() == 16);
  const HeightSet s = HeightSet::of({2, 4, 5});
  CHECK(s.size() == 3);
  CHECK(s.min() == 2);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(3));
  CHECK(s.without(2) == HeightSet::of({4, 5}));
  CHECK(s.gamma_sum() == Weight{2, 1});
  CHECK(HeightSet::of({}).gamma_sum() == Weight{0, 0});
}

TEST_CASE("X_k membership thresholds") {
  CHECK(x_set_member(5, {0, 1}));
  CHECK_FALSE(x_set_member(5, {3, 0}));
  CHECK(x_set_member(4, {3, 0}));
  CHECK_FALSE(x_set_member(4, {2, 5}));
  CHECK(x_set_member(3, {2, 0}));
  CHECK_FALSE(x_set_member(3, {1, 4}));
  CHECK(x_set_member(2, {2, 1}));
  CHECK_FALSE(x_set_member(2, {2, 0}));
}

TEST_CASE("recursive X_I membership matches the closed-form table") {
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= 12; ++b)
      for (const HeightSet s : HeightSet::all()) {
        INFO(s.to_string(), " at (", a, ",", b, ")");
        CHECK(x_I_member(s, {a, b}) == table2_member(s, {a, b}));
        CHECK(table2_shift(s, {a, b}) == Weight{a, b} - s.gamma_sum());
        if (x_I_member(s, {a, b})) CHECK(table2_shift_dominant(s, {a, b}) == (Weight{a, b} - s.gamma_sum()).is_dominant());
      }
}

TEST_CASE("weight arithmetic overflow is detected") {
  const Weight big{INT64_MAX, 0};
  CHECK_THROWS_AS(big + (Weight{1, 0}), std::overflow_error);
  CHECK_THROWS_AS(require_dominant({-1, 0}, "test"), DomainError);
}
