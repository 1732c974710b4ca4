#include "g2atomic/kostka.hpp"

#include <algorithm>
#include <set>

#include "g2atomic/precanonical.hpp"
#include "internal.hpp"

namespace g2 {

using detail::checked_add;
using detail::checked_mul;

std::vector<Weight> dominant_weights_below(Weight lam) {
  require_dominant(lam, "dominant_weights_below");
  const RootCoords top = to_root_coords(lam);
  std::vector<Weight> out;
  // mu = (c,d) <= lam iff 2c + 3d <= top.c1 and c + 2d <= top.c2 (same parity
  // is automatic: the root lattice is the whole weight lattice in type G2).
  for (std::int64_t c = 0; 2 * c <= top.c1; ++c)
    for (std::int64_t d = 0; 2 * c + 3 * d <= top.c1; ++d)
      if (c + 2 * d <= top.c2) out.push_back({c, d});
  std::sort(out.begin(), out.end(), display_before);
  return out;
}

Combination atomic_to_standard(Weight lam) {
  require_dominant(lam, "atomic_to_standard");
  Combination out(BasisLabel::standard());
  for (const Weight mu : dominant_weights_below(lam)) out.add_term(mu, LaurentPoly::q_power(height(lam - mu)));
  return out;
}

Combination canonical_to_standard(Weight lam) {
  require_dominant(lam, "canonical_to_standard");
  return canonical_to_standard(atomic(lam));
}

Combination canonical_to_standard(const Combination& atomic_expansion) {
  if (!atomic_expansion.basis().equivalent(BasisLabel::atomic()))
    throw BasisMismatch("canonical_to_standard: expected an atomic expansion");
  return detail::debug_check_exponents(substitute(atomic_expansion, BasisLabel::standard(), atomic_to_standard));
}

LaurentPoly kostka_foulkes(Weight lam, Weight mu) {
  require_dominant(lam, "kostka_foulkes");
  return kostka_foulkes(atomic(lam), lam, mu);
}

LaurentPoly kostka_foulkes(const Combination& atomic_expansion, Weight lam, Weight mu) {
  require_dominant(lam, "kostka_foulkes");
  require_dominant(mu, "kostka_foulkes");
  if (!atomic_expansion.basis().equivalent(BasisLabel::atomic()))
    throw BasisMismatch("kostka_foulkes: expected an atomic expansion");
  LaurentPoly out;
  if (!dominance_leq(mu, lam)) return out;
  for (const auto& [nu, a] : atomic_expansion.terms())
    if (dominance_leq(mu, nu)) out += a.scale_qpow(height(nu - mu), 1);
  return out;
}

std::int64_t inner_product(Weight x, Weight y) {
  const RootCoords r = to_root_coords(y);
  return checked_add(checked_mul(x.a, r.c1), checked_mul(checked_mul(3, x.b), r.c2));
}

WeightMultiplicities::WeightMultiplicities(Weight highest)
    : highest_(highest), highest_norm_(inner_product(highest + kRho, highest + kRho)) {
  require_dominant(highest, "WeightMultiplicities");
}

std::int64_t WeightMultiplicities::operator()(Weight mu) { return dominant(dominant_conjugate(mu)); }

std::int64_t WeightMultiplicities::dominant(Weight mu) {
  if (!dominance_leq(mu, highest_)) return 0;
  if (mu == highest_) return 1;
  if (const auto it = memo_.find(mu); it != memo_.end()) return it->second;

  std::int64_t rhs = 0;
  for (const PositiveRoot& root : kPositiveRoots) {
    for (Weight shifted = mu + root.weight; dominance_leq(shifted, highest_); shifted = shifted + root.weight) {
      const std::int64_t m = (*this)(shifted);
      if (m != 0) rhs = checked_add(rhs, checked_mul(m, inner_product(shifted, root.weight)));
    }
  }
  rhs = checked_mul(rhs, 2);
  const std::int64_t gap = highest_norm_ - inner_product(mu + kRho, mu + kRho);
  if (gap <= 0 || rhs % gap != 0)
    throw InternalError("freudenthal: inexact division at " + mu.to_string() + " for " + highest_.to_string());
  const std::int64_t m = rhs / gap;
  memo_.emplace(mu, m);
  return m;
}

std::int64_t freudenthal_multiplicity(Weight lam, Weight mu) {
  WeightMultiplicities mult(lam);
  return mult(mu);
}

std::int64_t weyl_dimension(Weight lam) {
  require_dominant(lam, "weyl_dimension");
  std::int64_t num = 1;
  std::int64_t den = 1;
  for (const PositiveRoot& root : kPositiveRoots) {
    num = checked_mul(num, inner_product(lam + kRho, root.weight));
    den = checked_mul(den, inner_product(kRho, root.weight));
  }
  if (num % den != 0) throw InternalError("weyl_dimension: inexact division");
  return num / den;
}

std::int64_t weyl_orbit_size(Weight w) {
  std::set<Weight> seen{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    const Weight x = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= 2; ++i) {
      const Weight y = reflect(i, x);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return static_cast<std::int64_t>(seen.size());
}

VerifyReport verify(Weight lam) {
  require_dominant(lam, "verify");
  VerifyReport report{lam, {}};
  report.checks.push_back(check_atomic_positivity(lam));
  report.checks.push_back(check_cross_approach(lam));
  report.checks.push_back(check_definitional_roundtrip(lam));
  report.checks.push_back(check_kf_specialization(lam));
  report.checks.push_back(check_kf_monic_degree(lam));
  report.checks.push_back(check_kf_monotonicity(lam));
  return report;
}

}  // namespace g2
