#include "g2atomic/sweep.hpp"

#include <exception>
#include <optional>

#include "g2atomic/adjusted.hpp"
#include "g2atomic/precanonical.hpp"

namespace g2 {

namespace {

// Runs body(i) for i in [0, n). Exceptions thrown inside the OpenMP region
// are captured and rethrown after it, first by index.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<Weight> dominant_box(std::int64_t max_a, std::int64_t max_b) {
  if (max_a < 0 || max_b < 0) throw DomainError("dominant_box: bounds must be non-negative");
  std::vector<Weight> out;
  out.reserve(static_cast<std::size_t>((max_a + 1) * (max_b + 1)));
  for (std::int64_t a = 0; a <= max_a; ++a)
    for (std::int64_t b = 0; b <= max_b; ++b) out.push_back({a, b});
  return out;
}

std::vector<Combination> atomic_table(std::span<const Weight> weights, AtomicRoute route, Execution exec) {
  std::vector<std::optional<Combination>> slots(weights.size());
  for_each_index(weights.size(), exec, [&](std::size_t i) {
    slots[i] = route == AtomicRoute::Precanonical ? atomic(weights[i]) : atomic_second(weights[i]);
  });
  std::vector<Combination> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

bool SweepReport::passed() const {
  for (const InvariantTally& t : invariants)
    if (t.failures != 0) return false;
  return true;
}

SweepReport run_invariant_sweep(std::int64_t max_a, std::int64_t max_b, Execution exec) {
  return run_invariant_sweep(max_a, max_b, all_checks(), exec);
}

SweepReport run_invariant_sweep(std::int64_t max_a, std::int64_t max_b, std::span<const NamedCheck> checks,
                                Execution exec) {
  const std::vector<Weight> weights = dominant_box(max_a, max_b);
  std::vector<std::vector<CheckOutcome>> outcomes(weights.size());
  for_each_index(weights.size(), exec, [&](std::size_t i) {
    outcomes[i].reserve(checks.size());
    for (const NamedCheck& check : checks) outcomes[i].push_back(check.fn(weights[i]));
  });

  SweepReport report{max_a, max_b, {}};
  for (const NamedCheck& check : checks) report.invariants.push_back({check.name, check.module, 0, 0, {}});
  for (const auto& row : outcomes) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      InvariantTally& tally = report.invariants[j];
      if (!row[j].applicable) continue;
      ++tally.cases;
      if (row[j].passed) continue;
      if (tally.failures++ == 0) tally.first_failure = row[j].detail;
    }
  }
  return report;
}

}  // namespace g2
