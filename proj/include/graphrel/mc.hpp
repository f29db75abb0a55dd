#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "graphrel/graph.hpp"

namespace graphrel {

// Trials are drawn in fixed-size batches, each seeded from (seed, batch
// index), so results do not depend on the worker count.
inline constexpr std::uint64_t kTrialsPerBatch = 4096;

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;  // sqrt(mean (1 - mean) / trials)
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
};

// Each trial keeps every edge independently with probability p and scores
// 1 when at most k components remain. Throws std::invalid_argument for p
// outside [0, 1], k < 1 or trials == 0.
McEstimate estimate(const SimpleGraph& g, int k, const mpq_class& p, std::uint64_t trials, std::uint64_t seed,
                    int workers = 1);

struct CrossCheckResult {
  bool pass = false;
  McEstimate estimate;
  mpq_class exact;
  double sigma = 0.0;       // scale used for the test
  double deviation = 0.0;   // |mean - exact| / sigma, 0 when both vanish
};

// Compares the estimate with `exact` (computed from the N-table when not
// given). The scale is the larger of the sample standard error and the
// standard error implied by the exact value, so single-trial checks are
// vacuous rather than degenerate.
CrossCheckResult cross_check(const SimpleGraph& g, int k, const mpq_class& p, std::uint64_t trials,
                             std::uint64_t seed, double tolerance_sigmas,
                             const std::optional<mpq_class>& exact = std::nullopt, int workers = 1);

}  // namespace graphrel
