#include <doctest.h>

#include "g2atomic/adjusted.hpp"
#include "g2atomic/precanonical.hpp"
#include "oracles.hpp"

using namespace g2;

namespace {

bool in_x(int k, Weight w) {
  switch (k) {
    case 5: return w.b >= 1;
    case 4: return w.a >= 3;
    case 3: return w.a >= 2;
    default: return w.a >= 2 && w.b >= 1;
  }
}

// N~^k_lam in the canonical basis by the layer-by-layer recursion.
Combination adjusted_oracle(int k, Weight lam) {
  if (k == 6) return Combination::single(BasisLabel::canonical(), lam);
  Combination out = adjusted_oracle(k + 1, lam);
  if (in_x(k, lam)) {
    const Weight shifted = lam - oracle::kRoots[static_cast<std::size_t>(k)];
    out -= LaurentPoly::q_power(1) * adjusted_oracle(k + 1, shifted);
  }
  return out;
}

Combination canonical_to_atomic_oracle(const Combination& x) {
  return substitute(x, BasisLabel::atomic(), [](Weight w) { return oracle::atomic_by_inversion(w); });
}

}  // namespace

TEST_CASE("oracle root indexing") {
  for (int k = 2; k <= 5; ++k) CHECK(oracle::kRoots[static_cast<std::size_t>(k)] == gamma(k));
}

TEST_CASE("signed-sum formula matches the layer recursion") {
  for (int k = 2; k <= 6; ++k)
    for (std::int64_t a = 0; a <= 9; ++a)
      for (std::int64_t b = 0; b <= 9; ++b) {
        INFO("k = ", k, " at (", a, ",", b, ")");
        CHECK(adjusted_in_canonical(k, {a, b}) == adjusted_oracle(k, {a, b}));
      }
}

TEST_CASE("expand_up inverts step_down") {
  for (int k = 2; k <= 5; ++k)
    for (std::int64_t a = 0; a <= 8; ++a)
      for (std::int64_t b = 0; b <= 8; ++b) {
        const Combination up = adjusted_expand_up(k, {a, b});
        const Combination back = substitute(up, BasisLabel::adjusted(k + 1), [k](Weight w) { return adjusted_step_down(k, w); });
        INFO("k = ", k, " at (", a, ",", b, ")");
        CHECK(back == Combination::single(BasisLabel::adjusted(k + 1), {a, b}));
        for (const auto& [w, p] : up.terms()) CHECK(p.is_monomial());
      }
}

TEST_CASE("adjusted level 2 in the atomic basis") {
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = 0; b <= 6; ++b) {
      INFO("(", a, ",", b, ")");
      const Combination got = adjusted2_in_atomic({a, b});
      CHECK(got == canonical_to_atomic_oracle(adjusted_oracle(2, {a, b})));
      for (const auto& [w, p] : got.terms()) CHECK(p.is_nonnegative());
    }
}

TEST_CASE("both routes agree") {
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= 12; ++b) {
      INFO("(", a, ",", b, ")");
      CHECK(atomic_second({a, b}) == atomic({a, b}));
    }
}

TEST_CASE("property: both routes agree on random larger weights") {
  oracle::Gen gen(3);
  for (int n = 0; n < 10; ++n) {
    const Weight lam = gen.dominant(18);
    INFO(lam.to_string());
    CHECK(atomic_second(lam) == atomic(lam));
  }
}

TEST_CASE("layer ranges are enforced") {
  CHECK_THROWS_AS(adjusted_step_down(6, {0, 0}), DomainError);
  CHECK_THROWS_AS(adjusted_expand_up(1, {0, 0}), DomainError);
  CHECK_THROWS_AS(adjusted_in_canonical(2, {0, -1}), DomainError);
}
