#pragma once

/**
 * @file sweep.hpp
 * @brief Batch kernels over boxes of dominant weights.
 *
 * Every kernel has a serial reference path and an OpenMP path. Both fill
 * the same pre-sized, index-addressed result slots and reduce in index
 * order, so their outputs are identical for any thread count.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "g2atomic/checks.hpp"
#include "g2atomic/combo.hpp"

namespace g2 {

enum class Execution { Serial, Parallel };

enum class AtomicRoute { Precanonical, Adjusted };

/// Dominant weights (a,b) with a <= max_a and b <= max_b, row-major in a.
std::vector<Weight> dominant_box(std::int64_t max_a, std::int64_t max_b);

/// Atomic expansion of every weight in `weights`, by the chosen route.
std::vector<Combination> atomic_table(std::span<const Weight> weights, AtomicRoute route, Execution exec);

struct InvariantTally {
  std::string name;
  std::string module;
  std::size_t cases = 0;     // weights for which the identity applied
  std::size_t failures = 0;
  std::string first_failure;
};

struct SweepReport {
  std::int64_t max_a = 0;
  std::int64_t max_b = 0;
  std::vector<InvariantTally> invariants;

  [[nodiscard]] bool passed() const;
};

/// Runs every check in all_checks() (or the given subset) for every weight
/// in the box.
SweepReport run_invariant_sweep(std::int64_t max_a, std::int64_t max_b, Execution exec);
SweepReport run_invariant_sweep(std::int64_t max_a, std::int64_t max_b, std::span<const NamedCheck> checks,
                                Execution exec);

}  // namespace g2
