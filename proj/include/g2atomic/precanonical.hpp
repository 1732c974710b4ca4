#pragma once

/**
 * @file precanonical.hpp
 * @brief Pre-canonical bases N^i of the G2 spherical Hecke algebra and the
 * first route to the atomic decomposition of canonical basis elements.
 *
 * N^i_lam is the signed subset sum of tilde-H over roots of height >= i.
 * N^6 is the canonical basis and N^2 the atomic basis, so composing the
 * four layer changes N^{i+1} -> N^i (i = 5,4,3,2) writes a canonical basis
 * element in the atomic basis. The layer at i = 4 may produce negative
 * intermediate coefficients; they cancel in the full composition.
 */

#include "g2atomic/combo.hpp"

namespace g2 {

/// Straightened canonical element: 0 on singular weights, otherwise
/// sign * Hbar at the dominant representative under the dot action.
Combination tilde_h(Weight w);

/// N^level_lam written in the canonical basis, level in [2,6], by the
/// defining signed subset sum.
Combination defn_precanonical(int level, Weight lam);

/// N^level_lam written in basis N^{level+1}, level in [2,5].
Combination inverse_step(int level, Weight lam);

/// N^{level+1}_lam written in basis N^level, level in [2,5].
Combination step_up(int level, Weight lam);

// Closed-form layer expansions, kept as independent oracles for step_up.

/// N^6_lam in N^5: sum_{i=0}^{b} q^i N^5_(a, b-i).
Combination closed_form_n6_in_n5(Weight lam);

/// N^3_lam in N^2: sum_{i=0}^{b} q^i N^2_(a+i, b-i).
Combination closed_form_n3_in_n2(Weight lam);

/// N^5_lam as an N^4 part plus an N^3 part, split by a mod 3.
struct MixedExpansion {
  Combination level4{BasisLabel::precanonical(4)};
  Combination level3{BasisLabel::precanonical(3)};
};
MixedExpansion closed_form_n5_in_n4(Weight lam);

/// N^4_lam in N^3, split by the parity of b.
Combination closed_form_n4_in_n3(Weight lam);

/// Atomic expansion of N^5_(0,2m), m >= 0, in closed form.
Combination closed_form_n5_axis_atomic(std::int64_t m);

/// Hbar_lam = sum_mu a_{lam,mu}(q) N_mu, obtained by composing the four
/// step_up layers. Throws InternalError if a coefficient is not in N[q],
/// the leading coefficient is not 1, or the support leaves {mu <= lam}.
/// Results are memoized per thread.
Combination atomic(Weight lam);

/// Drops the per-thread memo tables of atomic() and adjusted2_in_atomic()
/// on every thread, lazily at each thread's next lookup.
void reset_memo_caches();

}  // namespace g2
