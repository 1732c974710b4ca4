#pragma once

/**
 * @file adjusted.hpp
 * @brief Adjusted pre-canonical bases N~^k and the second route to the
 * atomic decomposition.
 *
 * N~^6 is the canonical basis; N~^k_lam = N~^{k+1}_lam - q N~^{k+1}_{lam - gamma_k}
 * when lam lies in X_k and N~^{k+1}_lam otherwise. Unlike N^k, every layer
 * change N~^{k+1} -> N~^k has coefficients in N[q]; the remaining step from
 * N~^2 to the atomic basis is a positive recursion as well.
 */

#include "g2atomic/combo.hpp"

namespace g2 {

/// N~^k_lam in basis N~^{k+1}, k in [2,5].
Combination adjusted_step_down(int k, Weight lam);

/// N~^{k+1}_lam in basis N~^k, k in [2,5]. All coefficients are powers of q.
Combination adjusted_expand_up(int k, Weight lam);

/// N~^k_lam in the canonical basis, k in [2,6]: a signed sum over the sets
/// I of heights with lam in X_I and k <= min I.
Combination adjusted_in_canonical(int k, Weight lam);

/// N~^2_lam in the atomic basis.
Combination adjusted2_in_atomic(Weight lam);

/// Atomic decomposition of Hbar_lam via the adjusted bases. Agrees with
/// atomic(lam); throws InternalError on a positivity or shape violation.
Combination atomic_second(Weight lam);

}  // namespace g2
