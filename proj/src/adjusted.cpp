#include "g2atomic/adjusted.hpp"

#include <map>

#include "internal.hpp"

namespace g2 {

namespace {

BasisLabel adj(int level) { return BasisLabel::adjusted(level); }

void require_layer(int k, int hi, const char* who) {
  if (k < 2 || k > hi) throw DomainError(std::string(who) + ": level " + std::to_string(k) + " out of range");
}

void require_positive(const Combination& x, const char* who) {
  for (const auto& [w, p] : x.terms())
    if (!p.is_nonnegative()) throw InternalError(std::string(who) + ": negative coefficient at " + w.to_string());
}

Combination adjusted2_in_atomic_rec(Weight lam, std::int64_t depth_left) {
  if (depth_left < 0) throw InternalError("adjusted2_in_atomic: depth guard tripped");
  thread_local detail::WeightMemo memo_slot;
  auto& memo = memo_slot.get();
  if (const auto it = memo.find(lam); it != memo.end()) return it->second;

  const auto [a, b] = lam;
  Combination out = Combination::single(BasisLabel::atomic(), lam);
  if (a >= 3 || a + b < 2) {
    // N~^2 and N^2 coincide.
  } else if (a == 2) {
    out += LaurentPoly::q_power(2) * adjusted2_in_atomic_rec({0, b}, depth_left - 1);
  } else if (a == 1) {
    out += LaurentPoly::q_power(2) * adjusted2_in_atomic_rec({1, b - 1}, depth_left - 1);
    for (std::int64_t k = 1; k <= b; ++k) out.add_term({1 + k, b - k}, LaurentPoly::q_power(k));
  } else {
    out += LaurentPoly::q_power(4) * adjusted2_in_atomic_rec({0, b - 2}, depth_left - 1);
    for (std::int64_t k = 2; k <= b; ++k) out.add_term({k, b - k}, LaurentPoly::q_power(k));
  }
  return memo.emplace(lam, std::move(out)).first->second;
}

}  // namespace

Combination adjusted_step_down(int k, Weight lam) {
  require_layer(k, 5, "adjusted_step_down");
  require_dominant(lam, "adjusted_step_down");
  Combination out = Combination::single(adj(k + 1), lam);
  if (x_set_member(k, lam)) out.add_term(lam - gamma(k), LaurentPoly::monomial(-1, 1));
  return out;
}

Combination adjusted_expand_up(int k, Weight lam) {
  require_layer(k, 5, "adjusted_expand_up");
  require_dominant(lam, "adjusted_expand_up");
  Combination out(adj(k));
  std::int64_t power = 0;
  for (Weight current = lam;; current = current - gamma(k)) {
    out.add_term(current, LaurentPoly::q_power(power++));
    if (!x_set_member(k, current)) break;
  }
  require_positive(out, "adjusted_expand_up");
  return out;
}

Combination adjusted_in_canonical(int k, Weight lam) {
  require_layer(k, 6, "adjusted_in_canonical");
  require_dominant(lam, "adjusted_in_canonical");
  Combination out(BasisLabel::canonical());
  for (const HeightSet set : HeightSet::all()) {
    if (!set.empty() && set.min() < k) continue;
    if (!x_I_member(set, lam)) continue;
    const Weight target = lam - set.gamma_sum();
    if (!target.is_dominant())
      throw InternalError("adjusted_in_canonical: " + lam.to_string() + " - Gamma" + set.to_string() + " not dominant");
    const int size = set.size();
    out.add_term(target, LaurentPoly::monomial(size % 2 == 0 ? 1 : -1, size));
  }
  return out;
}

Combination adjusted2_in_atomic(Weight lam) {
  require_dominant(lam, "adjusted2_in_atomic");
  Combination out = adjusted2_in_atomic_rec(lam, lam.a + lam.b);
  require_positive(out, "adjusted2_in_atomic");
  return out;
}

Combination atomic_second(Weight lam) {
  require_dominant(lam, "atomic_second");
  Combination current = Combination::single(adj(6), lam);
  for (int k = 5; k >= 2; --k) current = substitute(current, adj(k), [k](Weight w) { return adjusted_expand_up(k, w); });
  Combination result = substitute(current, BasisLabel::atomic(), adjusted2_in_atomic);
  detail::require_atomic_shape(result, lam, "atomic_second");
  return detail::debug_check_exponents(result);
}

}  // namespace g2
