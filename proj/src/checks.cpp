#include "g2atomic/checks.hpp"

#include <array>
#include <exception>
#include <sstream>

#include "g2atomic/adjusted.hpp"
#include "g2atomic/kostka.hpp"
#include "g2atomic/precanonical.hpp"

namespace g2 {

namespace {

// Table of X_I conditions. A threshold of -1 means "no condition" since the
// coordinates of a dominant weight are >= 0.
struct Table2Row {
  HeightSet members;
  Weight shift;
  std::int64_t member_a_gt, member_b_gt;
  std::int64_t dominant_a_gt, dominant_b_gt;
};

const std::array<Table2Row, 16>& table2_rows() {
  static const std::array<Table2Row, 16> rows{{
      {HeightSet::of({}), {0, 0}, -1, -1, -1, -1},
      {HeightSet::of({2}), {1, -1}, 1, 0, -1, 0},
      {HeightSet::of({3}), {-1, 0}, 1, -1, 0, -1},
      {HeightSet::of({4}), {-3, 1}, 2, -1, 2, -1},
      {HeightSet::of({5}), {0, -1}, -1, 0, -1, 0},
      {HeightSet::of({2, 3}), {0, -1}, 1, 0, -1, 0},
      {HeightSet::of({2, 4}), {-2, 0}, 1, 0, 1, -1},
      {HeightSet::of({2, 5}), {1, -2}, 1, 1, -1, 1},
      {HeightSet::of({3, 4}), {-4, 1}, 3, -1, 3, -1},
      {HeightSet::of({3, 5}), {-1, -1}, 1, 0, 0, 0},
      {HeightSet::of({4, 5}), {-3, 0}, 2, -1, 2, -1},
      {HeightSet::of({2, 3, 4}), {-3, 0}, 2, 0, 2, -1},
      {HeightSet::of({2, 3, 5}), {0, -2}, 1, 1, -1, 1},
      {HeightSet::of({2, 4, 5}), {-2, -1}, 1, 0, 1, 0},
      {HeightSet::of({3, 4, 5}), {-4, 0}, 3, -1, 3, -1},
      {HeightSet::of({2, 3, 4, 5}), {-3, -1}, 2, 0, 2, 0},
  }};
  return rows;
}

const Table2Row& table2_row(HeightSet set) {
  for (const Table2Row& row : table2_rows())
    if (row.members == set) return row;
  throw DomainError("table2: no row for " + set.to_string());
}

// Records pass/fail and keeps the first discrepancy message.
class Probe {
public:
  explicit Probe(const char* name) { outcome_.name = name; }

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (outcome_.passed) outcome_.detail = what;
    outcome_.passed = false;
  }
  void not_applicable() { outcome_.applicable = false; }

  template <typename Body>
  CheckOutcome run(Body&& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      outcome_.passed = false;
      outcome_.detail = std::string("exception: ") + e.what();
    }
    return outcome_;
  }

private:
  CheckOutcome outcome_;
};

std::string at(const char* what, Weight lam) { return std::string(what) + " at " + lam.to_string(); }
std::string at(const char* what, int level, Weight lam) {
  return std::string(what) + " (level " + std::to_string(level) + ") at " + lam.to_string();
}

BasisLabel pre(int level) { return BasisLabel::precanonical(level); }
BasisLabel adj(int level) { return BasisLabel::adjusted(level); }

constexpr std::array<NamedCheck, 17> kChecks{{
    {"table2-equivalence", "lattice", check_table2},
    {"step-inverse-consistency", "precanonical", check_step_inverse_consistency},
    {"closed-form-equality", "precanonical", check_closed_forms},
    {"levelwise-definitional", "precanonical", check_levelwise_definitional},
    {"definitional-roundtrip", "precanonical", check_definitional_roundtrip},
    {"atomic-positivity", "precanonical", check_atomic_positivity},
    {"axis-closed-form", "precanonical", check_axis_closed_form},
    {"adjusted-step-consistency", "adjusted", check_adjusted_step_consistency},
    {"adjusted-canonical", "adjusted", check_adjusted_canonical},
    {"adjusted-vs-precanonical", "adjusted", check_adjusted_vs_precanonical},
    {"cross-approach-equality", "adjusted", check_cross_approach},
    {"adjusted-positivity", "adjusted", check_adjusted_positivity},
    {"kf-specialization", "kostka", check_kf_specialization},
    {"kf-monic-degree", "kostka", check_kf_monic_degree},
    {"kf-monotonicity", "kostka", check_kf_monotonicity},
    {"kf-triangularity", "kostka", check_kf_triangularity},
    {"weyl-dimension", "kostka", check_weyl_dimension},
}};

}  // namespace

bool VerifyReport::passed() const {
  for (const CheckOutcome& c : checks)
    if (!c.passed) return false;
  return true;
}

std::span<const NamedCheck> all_checks() { return kChecks; }

bool table2_member(HeightSet set, Weight lam) {
  require_dominant(lam, "table2_member");
  const Table2Row& row = table2_row(set);
  return lam.a > row.member_a_gt && lam.b > row.member_b_gt;
}

Weight table2_shift(HeightSet set, Weight lam) { return lam + table2_row(set).shift; }

bool table2_shift_dominant(HeightSet set, Weight lam) {
  require_dominant(lam, "table2_shift_dominant");
  const Table2Row& row = table2_row(set);
  return lam.a > row.dominant_a_gt && lam.b > row.dominant_b_gt;
}

CheckOutcome check_table2(Weight lam) {
  return Probe("table2-equivalence").run([&](Probe& p) {
    for (const HeightSet set : HeightSet::all()) {
      const std::string where = set.to_string() + " at " + lam.to_string();
      p.expect(x_I_member(set, lam) == table2_member(set, lam), "membership differs for " + where);
      p.expect(lam - set.gamma_sum() == table2_shift(set, lam), "shift differs for " + where);
      p.expect((lam - set.gamma_sum()).is_dominant() == table2_shift_dominant(set, lam),
               "shift dominance differs for " + where);
    }
  });
}

CheckOutcome check_step_inverse_consistency(Weight lam) {
  return Probe("step-inverse-consistency").run([&](Probe& p) {
    for (int i = 2; i <= 5; ++i) {
      const auto up = [i](Weight w) { return step_up(i, w); };
      const auto down = [i](Weight w) { return inverse_step(i, w); };
      p.expect(substitute(inverse_step(i, lam), pre(i), up) == Combination::single(pre(i), lam),
               at("step_up o inverse_step", i, lam));
      p.expect(substitute(step_up(i, lam), pre(i + 1), down) == Combination::single(pre(i + 1), lam),
               at("inverse_step o step_up", i, lam));
    }
  });
}

CheckOutcome check_closed_forms(Weight lam) {
  return Probe("closed-form-equality").run([&](Probe& p) {
    p.expect(step_up(5, lam) == closed_form_n6_in_n5(lam), at("N6 in N5", lam));
    p.expect(step_up(2, lam) == closed_form_n3_in_n2(lam), at("N3 in N2", lam));
    p.expect(step_up(3, lam) == closed_form_n4_in_n3(lam), at("N4 in N3", lam));
    const MixedExpansion mixed = closed_form_n5_in_n4(lam);
    const Combination pushed =
        mixed.level4 + substitute(mixed.level3, pre(4), [](Weight w) { return inverse_step(3, w); });
    p.expect(step_up(4, lam) == pushed, at("N5 in N4", lam));
  });
}

CheckOutcome check_levelwise_definitional(Weight lam) {
  return Probe("levelwise-definitional").run([&](Probe& p) {
    for (int i = 2; i <= 5; ++i) {
      const Combination via_layer = substitute(inverse_step(i, lam), BasisLabel::canonical(),
                                               [i](Weight w) { return defn_precanonical(i + 1, w); });
      p.expect(via_layer == defn_precanonical(i, lam), at("inverse_step vs definition", i, lam));
    }
  });
}

CheckOutcome check_definitional_roundtrip(Weight lam) {
  return Probe("definitional-roundtrip").run([&](Probe& p) {
    const Combination back =
        substitute(atomic(lam), BasisLabel::canonical(), [](Weight w) { return defn_precanonical(2, w); });
    p.expect(back == Combination::single(BasisLabel::canonical(), lam), at("atomic expansion does not resum", lam));
  });
}

CheckOutcome check_atomic_positivity(Weight lam) {
  return Probe("atomic-positivity").run([&](Probe& p) {
    const Combination x = atomic(lam);
    p.expect(x.coeff(lam) == LaurentPoly::constant(1), at("leading coefficient not 1", lam));
    for (const auto& [mu, c] : x.terms()) {
      p.expect(c.is_nonnegative(), at("negative coefficient", mu));
      p.expect(dominance_leq(mu, lam), at("support weight not below lambda", mu));
    }
  });
}

CheckOutcome check_axis_closed_form(Weight lam) {
  return Probe("axis-closed-form").run([&](Probe& p) {
    if (lam.a != 0 || lam.b % 2 != 0) {
      p.not_applicable();
      return;
    }
    Combination x = Combination::single(pre(5), lam);
    for (int level = 4; level >= 2; --level)
      x = substitute(x, pre(level), [level](Weight w) { return step_up(level, w); });
    p.expect(x == closed_form_n5_axis_atomic(lam.b / 2), at("N5 axis closed form", lam));
  });
}

CheckOutcome check_adjusted_step_consistency(Weight lam) {
  return Probe("adjusted-step-consistency").run([&](Probe& p) {
    for (int k = 2; k <= 5; ++k) {
      const auto up = [k](Weight w) { return adjusted_expand_up(k, w); };
      const auto down = [k](Weight w) { return adjusted_step_down(k, w); };
      p.expect(substitute(adjusted_expand_up(k, lam), adj(k + 1), down) == Combination::single(adj(k + 1), lam),
               at("step_down o expand_up", k, lam));
      p.expect(substitute(adjusted_step_down(k, lam), adj(k), up) == Combination::single(adj(k), lam),
               at("expand_up o step_down", k, lam));
    }
  });
}

CheckOutcome check_adjusted_canonical(Weight lam) {
  return Probe("adjusted-canonical").run([&](Probe& p) {
    for (int k = 2; k <= 6; ++k) {
      Combination layered = Combination::single(adj(k), lam);
      for (int j = k; j <= 5; ++j)
        layered = substitute(layered, adj(j + 1), [j](Weight w) { return adjusted_step_down(j, w); });
      p.expect(layered.relabeled(BasisLabel::canonical()) == adjusted_in_canonical(k, lam),
               at("layered vs subset sum", k, lam));
    }
  });
}

CheckOutcome check_adjusted_vs_precanonical(Weight lam) {
  return Probe("adjusted-vs-precanonical").run([&](Probe& p) {
    const Combination lhs = adjusted_in_canonical(2, lam) - defn_precanonical(2, lam);
    const Combination correction = adjusted2_in_atomic(lam) - Combination::single(BasisLabel::atomic(), lam);
    const Combination rhs =
        substitute(correction, BasisLabel::canonical(), [](Weight w) { return defn_precanonical(2, w); });
    p.expect(lhs == rhs, at("N~2 - N2 mismatch", lam));
  });
}

CheckOutcome check_cross_approach(Weight lam) {
  return Probe("cross-approach-equality").run(
      [&](Probe& p) { p.expect(atomic_second(lam) == atomic(lam), at("two atomic routes differ", lam)); });
}

CheckOutcome check_adjusted_positivity(Weight lam) {
  return Probe("adjusted-positivity").run([&](Probe& p) {
    const auto all_positive = [](const Combination& x) {
      for (const auto& [w, c] : x.terms())
        if (!c.is_nonnegative()) return false;
      return true;
    };
    for (int k = 2; k <= 5; ++k) p.expect(all_positive(adjusted_expand_up(k, lam)), at("expand_up", k, lam));
    p.expect(all_positive(adjusted2_in_atomic(lam)), at("adjusted2_in_atomic", lam));
  });
}

CheckOutcome check_kf_specialization(Weight lam) {
  return Probe("kf-specialization").run([&](Probe& p) {
    WeightMultiplicities mult(lam);
    const Combination column = canonical_to_standard(lam);
    for (const Weight mu : dominant_weights_below(lam)) {
      const LaurentPoly k = kostka_foulkes(lam, mu);
      p.expect(k == column.coeff(mu), at("K via column differs", mu));
      p.expect(k.eval_at_one() == mult(mu), at("K(1) != multiplicity", mu));
    }
  });
}

CheckOutcome check_kf_monic_degree(Weight lam) {
  return Probe("kf-monic-degree").run([&](Probe& p) {
    for (const Weight mu : dominant_weights_below(lam)) {
      const LaurentPoly k = kostka_foulkes(lam, mu);
      const std::int64_t expected = height(lam - mu);
      p.expect(k.degree() == expected && k.coeff(expected) == 1, at("not monic of degree ht(lam-mu)", mu));
    }
  });
}

CheckOutcome check_kf_monotonicity(Weight lam) {
  return Probe("kf-monotonicity").run([&](Probe& p) {
    const std::vector<Weight> below = dominant_weights_below(lam);
    std::map<Weight, LaurentPoly> k;
    for (const Weight mu : below) k.emplace(mu, kostka_foulkes(lam, mu));
    for (const Weight mu : below) {
      for (const Weight nu : below) {
        if (!dominance_leq(mu, nu)) continue;
        const LaurentPoly diff = k.at(mu) - k.at(nu).scale_qpow(height(nu - mu), 1);
        p.expect(diff.is_nonnegative(), "monotonicity fails for mu=" + mu.to_string() + ", nu=" + nu.to_string() +
                                            " at " + lam.to_string());
      }
    }
  });
}

CheckOutcome check_kf_triangularity(Weight lam) {
  return Probe("kf-triangularity").run([&](Probe& p) {
    p.expect(kostka_foulkes(lam, lam) == LaurentPoly::constant(1), at("K(lam,lam) != 1", lam));
    for (std::int64_t c = 0; c <= lam.a + 2; ++c) {
      for (std::int64_t d = 0; d <= lam.b + 2; ++d) {
        const Weight mu{c, d};
        if (!dominance_leq(mu, lam)) p.expect(kostka_foulkes(lam, mu).is_zero(), at("K nonzero outside cone", mu));
      }
    }
  });
}

CheckOutcome check_weyl_dimension(Weight lam) {
  return Probe("weyl-dimension").run([&](Probe& p) {
    WeightMultiplicities mult(lam);
    std::int64_t total = 0;
    for (const Weight mu : dominant_weights_below(lam)) total += mult(mu) * weyl_orbit_size(mu);
    p.expect(total == weyl_dimension(lam), at("sum of multiplicities != Weyl dimension", lam));
  });
}

}  // namespace g2
