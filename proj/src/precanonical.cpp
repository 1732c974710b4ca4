#include "g2atomic/precanonical.hpp"

#include <map>

#include "internal.hpp"

namespace g2 {

namespace {

BasisLabel pre(int level) { return BasisLabel::precanonical(level); }

void require_level(int level, int lo, int hi, const char* who) {
  if (level < lo || level > hi)
    throw DomainError(std::string(who) + ": level " + std::to_string(level) + " outside [" + std::to_string(lo) + "," +
                      std::to_string(hi) + "]");
}

LaurentPoly signed_q_power(int sign, std::int64_t k) { return LaurentPoly::monomial(sign, k); }

// One link of the step_up chain: N^{level+1}_lam = N^level_lam + sign q^k N^{level+1}_next.
struct ChainLink {
  int sign;
  std::int64_t q_exp;
  Weight next;
};

std::optional<ChainLink> step_up_link(int level, Weight lam) {
  const auto [a, b] = lam;
  switch (level) {
    case 5:
      if (b >= 1) return ChainLink{1, 1, {a, b - 1}};
      return std::nullopt;
    case 4:
      if (a >= 3) return ChainLink{1, 1, {a - 3, b + 1}};
      if (a == 2) return std::nullopt;
      if (a == 1) return ChainLink{-1, 1, {0, b}};
      if (b >= 1) return ChainLink{-1, 1, {1, b - 1}};
      return std::nullopt;
    case 3:
      if (a >= 1) return ChainLink{1, 1, {a - 1, b}};
      if (b >= 2) return ChainLink{1, 2, {2, b - 2}};
      return std::nullopt;
    case 2:
      if (b >= 1) return ChainLink{1, 1, {a + 1, b - 1}};
      return std::nullopt;
    default:
      throw DomainError("step_up: level must lie in [2,5]");
  }
}

}  // namespace

namespace detail {

std::atomic<std::uint64_t>& memo_epoch() {
  static std::atomic<std::uint64_t> epoch{0};
  return epoch;
}

void require_atomic_shape(const Combination& x, Weight lam, const char* who) {
  if (x.coeff(lam) != LaurentPoly::constant(1))
    throw InternalError(std::string(who) + ": coefficient at " + lam.to_string() + " is not 1");
  for (const auto& [mu, p] : x.terms()) {
    if (!p.is_nonnegative())
      throw InternalError(std::string(who) + ": negative coefficient at " + mu.to_string() + " for " + lam.to_string());
    if (!dominance_leq(mu, lam))
      throw InternalError(std::string(who) + ": support weight " + mu.to_string() + " not below " + lam.to_string());
  }
}

}  // namespace detail

Combination tilde_h(Weight w) {
  const SignedDominant straightened = dominant_rep(w);
  if (straightened.is_singular()) return Combination(BasisLabel::canonical());
  return Combination::single(BasisLabel::canonical(), straightened.rep(), LaurentPoly::constant(straightened.sign()));
}

Combination defn_precanonical(int level, Weight lam) {
  require_level(level, 2, 6, "defn_precanonical");
  require_dominant(lam, "defn_precanonical");
  const auto roots = roots_of_height_at_least(level);
  Combination out(BasisLabel::canonical());
  const unsigned subsets = 1u << roots.size();
  for (unsigned mask = 0; mask < subsets; ++mask) {
    Weight shifted = lam;
    int size = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if ((mask >> j) & 1u) {
        shifted = shifted - roots[j];
        ++size;
      }
    }
    out += signed_q_power(size % 2 == 0 ? 1 : -1, size) * tilde_h(shifted);
  }
  return detail::debug_check_exponents(out);
}

Combination inverse_step(int level, Weight lam) {
  require_level(level, 2, 5, "inverse_step");
  require_dominant(lam, "inverse_step");
  const auto [a, b] = lam;
  Combination out = Combination::single(pre(level + 1), lam);
  const auto subtract = [&](std::int64_t k, Weight w) { out.add_term(w, signed_q_power(-1, k)); };
  const auto add = [&](std::int64_t k, Weight w) { out.add_term(w, signed_q_power(1, k)); };
  switch (level) {
    case 5:
      if (b >= 1) subtract(1, {a, b - 1});
      break;
    case 4:
      if (a >= 3)
        subtract(1, {a - 3, b + 1});
      else if (a == 1)
        add(1, {0, b});
      else if (a == 0 && b >= 1)
        add(1, {1, b - 1});
      break;
    case 3:
      if (a >= 1)
        subtract(1, {a - 1, b});
      else if (b >= 2)
        subtract(2, {2, b - 2});
      break;
    case 2:
      if (b >= 1) subtract(1, {a + 1, b - 1});
      break;
  }
  return out;
}

Combination step_up(int level, Weight lam) {
  require_level(level, 2, 5, "step_up");
  require_dominant(lam, "step_up");
  // Each link lowers 2b + [a=1] at level 4, b at levels 5 and 2, and a + 2b
  // at level 3, so the chain is shorter than this bound.
  const std::int64_t max_links = 4 * (lam.a + lam.b) + 8;
  Combination out(pre(level));
  LaurentPoly factor = LaurentPoly::constant(1);
  Weight current = lam;
  for (std::int64_t links = 0;; ++links) {
    if (links > max_links) throw InternalError("step_up: recursion depth guard tripped at " + lam.to_string());
    out.add_term(current, factor);
    const auto link = step_up_link(level, current);
    if (!link) break;
    factor = factor.scale_qpow(link->q_exp, link->sign);
    current = link->next;
  }
  return out;
}

Combination closed_form_n6_in_n5(Weight lam) {
  require_dominant(lam, "closed_form_n6_in_n5");
  Combination out(pre(5));
  for (std::int64_t i = 0; i <= lam.b; ++i) out.add_term({lam.a, lam.b - i}, LaurentPoly::q_power(i));
  return out;
}

Combination closed_form_n3_in_n2(Weight lam) {
  require_dominant(lam, "closed_form_n3_in_n2");
  Combination out(pre(2));
  for (std::int64_t i = 0; i <= lam.b; ++i) out.add_term({lam.a + i, lam.b - i}, LaurentPoly::q_power(i));
  return out;
}

MixedExpansion closed_form_n5_in_n4(Weight lam) {
  require_dominant(lam, "closed_form_n5_in_n4");
  const auto [a, b] = lam;
  const std::int64_t m = a / 3;
  const std::int64_t r = a % 3;
  MixedExpansion out;
  const std::int64_t last = (r == 1) ? m - 1 : m;
  for (std::int64_t i = 0; i <= last; ++i) out.level4.add_term({a - 3 * i, b + i}, LaurentPoly::q_power(i));
  if (r == 0) {
    for (std::int64_t i = 1; i <= m + b; ++i) out.level3.add_term({1, m + b - i}, signed_q_power(-1, m + 2 * i - 1));
  } else if (r == 1) {
    for (std::int64_t i = 0; i <= m + b; ++i) out.level3.add_term({1, m + b - i}, LaurentPoly::q_power(m + 2 * i));
  }
  return out;
}

Combination closed_form_n4_in_n3(Weight lam) {
  require_dominant(lam, "closed_form_n4_in_n3");
  const auto [a, b] = lam;
  const std::int64_t m = b / 2;
  Combination out(pre(3));
  for (std::int64_t i = 0; i <= a; ++i) out.add_term({a - i, b}, LaurentPoly::q_power(i));
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::int64_t base = a + 4 * i - 2;
    const std::int64_t row = b - 2 * i;
    out.add_term({2, row}, LaurentPoly::q_power(base));
    out.add_term({1, row}, LaurentPoly::q_power(base + 1));
    out.add_term({0, row}, LaurentPoly::q_power(base + 2));
  }
  return out;
}

Combination closed_form_n5_axis_atomic(std::int64_t m) {
  if (m < 0) throw DomainError("closed_form_n5_axis_atomic: m must be non-negative");
  const std::int64_t top = 2 * m;
  Combination out(BasisLabel::atomic());
  for (std::int64_t i = 0; i <= m; ++i) out.add_term({0, top - 2 * i}, LaurentPoly::q_power(4 * i));
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = 1; j <= top - 2 * i + 1; ++j)
      out.add_term({j + 1, top - 2 * i - j + 1}, LaurentPoly::q_power(4 * i - 3 + j));
  return out;
}

void reset_memo_caches() { detail::memo_epoch().fetch_add(1, std::memory_order_acq_rel); }

Combination atomic(Weight lam) {
  require_dominant(lam, "atomic");
  thread_local detail::WeightMemo memo_slot;
  auto& memo = memo_slot.get();
  if (const auto it = memo.find(lam); it != memo.end()) return it->second;

  Combination current = Combination::single(pre(6), lam);
  for (int level = 5; level >= 2; --level)
    current = substitute(current, pre(level), [level](Weight w) { return step_up(level, w); });
  Combination result = current.relabeled(BasisLabel::atomic());
  detail::require_atomic_shape(result, lam, "atomic");
  detail::debug_check_exponents(result);
  return memo.emplace(lam, std::move(result)).first->second;
}

}  // namespace g2
