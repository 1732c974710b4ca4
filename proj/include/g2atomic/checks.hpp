#pragma once

/**
 * @file checks.hpp
 * @brief Per-weight invariant checks.
 *
 * Each check evaluates one identity for a single dominant weight and never
 * throws: exceptions raised by the computation are reported as failures.
 */

#include <span>
#include <string>
#include <vector>

#include "g2atomic/lattice.hpp"

namespace g2 {

struct CheckOutcome {
  std::string name;
  bool passed = true;
  bool applicable = true;  // false when the identity says nothing about this weight
  std::string detail;      // first discrepancy, empty on success
};

struct VerifyReport {
  Weight lam;
  std::vector<CheckOutcome> checks;

  [[nodiscard]] bool passed() const;
};

using CheckFn = CheckOutcome (*)(Weight);

struct NamedCheck {
  const char* name;
  const char* module;
  CheckFn fn;
};

/// Every per-weight check, in reporting order.
std::span<const NamedCheck> all_checks();

// lattice
CheckOutcome check_table2(Weight lam);

// precanonical
CheckOutcome check_step_inverse_consistency(Weight lam);
CheckOutcome check_closed_forms(Weight lam);
CheckOutcome check_levelwise_definitional(Weight lam);
CheckOutcome check_definitional_roundtrip(Weight lam);
CheckOutcome check_atomic_positivity(Weight lam);
CheckOutcome check_axis_closed_form(Weight lam);

// adjusted
CheckOutcome check_adjusted_step_consistency(Weight lam);
CheckOutcome check_adjusted_canonical(Weight lam);
CheckOutcome check_adjusted_vs_precanonical(Weight lam);
CheckOutcome check_cross_approach(Weight lam);
CheckOutcome check_adjusted_positivity(Weight lam);

// kostka
CheckOutcome check_kf_specialization(Weight lam);
CheckOutcome check_kf_monic_degree(Weight lam);
CheckOutcome check_kf_monotonicity(Weight lam);
CheckOutcome check_kf_triangularity(Weight lam);
CheckOutcome check_weyl_dimension(Weight lam);

/// Closed-form membership conditions for X_I, one row per subset I of
/// {2,3,4,5}; the recursive x_I_member is normative, this is its cross-check.
bool table2_member(HeightSet set, Weight lam);
/// Closed-form lam - Gamma_I and its dominance condition from the same table.
Weight table2_shift(HeightSet set, Weight lam);
bool table2_shift_dominant(HeightSet set, Weight lam);

}  // namespace g2
