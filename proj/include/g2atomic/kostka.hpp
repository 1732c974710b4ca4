#pragma once

/**
 * @file kostka.hpp
 * @brief Standard-basis expansions and Kostka-Foulkes polynomials.
 *
 * With N_lam = sum_{mu <= lam} q^{ht(lam - mu)} H_mu, the atomic
 * decomposition of Hbar_lam yields Hbar_lam = sum_mu K_{lam,mu}(q) H_mu.
 * The Freudenthal multiplicity formula gives K_{lam,mu}(1) independently.
 */

#include <map>
#include <vector>

#include "g2atomic/checks.hpp"
#include "g2atomic/combo.hpp"

namespace g2 {

/// All dominant mu with mu <= lam, in display order.
std::vector<Weight> dominant_weights_below(Weight lam);

/// N_lam in the standard basis.
Combination atomic_to_standard(Weight lam);

/// Hbar_lam in the standard basis; the coefficients are K_{lam,mu}(q).
Combination canonical_to_standard(Weight lam);
/// Same, from a precomputed atomic expansion of Hbar_lam.
Combination canonical_to_standard(const Combination& atomic_expansion);

/// K_{lam,mu}(q) = sum over nu in the atomic support of lam with mu <= nu of
/// q^{ht(nu - mu)} a_{lam,nu}(q). Zero when mu is not below lam.
LaurentPoly kostka_foulkes(Weight lam, Weight mu);
/// Same, from a precomputed atomic expansion of Hbar_lam.
LaurentPoly kostka_foulkes(const Combination& atomic_expansion, Weight lam, Weight mu);

/// Symmetric W-invariant form with <alpha1,alpha1> = 2, <alpha2,alpha2> = 6.
std::int64_t inner_product(Weight x, Weight y);

/// Weight multiplicities of the irreducible G2-module of highest weight lam,
/// by Freudenthal's recursion. Memoizes dominant weights; not thread-safe.
class WeightMultiplicities {
public:
  explicit WeightMultiplicities(Weight highest);

  [[nodiscard]] Weight highest() const { return highest_; }
  /// m_lam(mu) for any weight mu.
  std::int64_t operator()(Weight mu);

private:
  std::int64_t dominant(Weight mu);

  Weight highest_;
  std::int64_t highest_norm_;
  std::map<Weight, std::int64_t> memo_;
};

std::int64_t freudenthal_multiplicity(Weight lam, Weight mu);

/// Weyl dimension formula.
std::int64_t weyl_dimension(Weight lam);

/// Size of the W_f-orbit of w under the linear action.
std::int64_t weyl_orbit_size(Weight w);

/// Runs the per-weight invariant bundle: positivity, agreement of the two
/// atomic routes, definitional round-trip, K(1) against Freudenthal,
/// monic top degree and monotonicity.
VerifyReport verify(Weight lam);

}  // namespace g2
