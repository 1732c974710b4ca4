#pragma once

// Helpers shared by the basis-change translation units. Not installed.

#include <atomic>
#include <cassert>
#include <cstdint>
#include <map>

#include "g2atomic/combo.hpp"

namespace g2::detail {

/// Public basis changes only ever produce polynomials in q, never q^-1.
inline const Combination& debug_check_exponents(const Combination& x) {
#ifndef NDEBUG
  for (const auto& [w, p] : x.terms()) assert(!p.trailing_degree() || *p.trailing_degree() >= 0);
#endif
  return x;
}

/// Enforces the shape of an atomic decomposition of Hbar_lam: coefficients
/// in N[q], coefficient 1 at lam, support inside {mu <= lam}.
void require_atomic_shape(const Combination& x, Weight lam, const char* who);

/// Bumped by reset_memo_caches(); each thread drops its memo when it sees
/// a newer value.
std::atomic<std::uint64_t>& memo_epoch();

/// Per-thread memo keyed by weight that honours memo_epoch().
class WeightMemo {
public:
  std::map<Weight, Combination>& get() {
    const std::uint64_t now = memo_epoch().load(std::memory_order_acquire);
    if (now != epoch_) {
      table_.clear();
      epoch_ = now;
    }
    return table_;
  }

private:
  std::uint64_t epoch_ = 0;
  std::map<Weight, Combination> table_;
};

}  // namespace g2::detail
