#pragma once

#include <cstdint>
#include <vector>

#include "gaprec/rational.hpp"
#include "gaprec/recurrence.hpp"
#include "gaprec/semigroup.hpp"
#include "gaprec/series.hpp"

namespace gaprec {

/// Name of the pseudorandom generator family recorded in output metadata.
inline constexpr const char* kRngFamily = "splitmix64";

/// Configuration of an increasing random walk X_t = X_{t-1} + a_i taken with
/// probability p_i, started at 0. A walk stops once it passes max_state:
/// states are visited in strictly increasing order, so nothing at or below
/// max_state can be reached afterwards.
struct WalkConfig {
  NumericalSemigroup semigroup;
  WeightVector probabilities;  // exact, strictly positive, sums to 1
  std::int64_t num_walks = 0;
  std::int64_t max_state = 0;
  std::uint64_t seed = 0;
};

/// Per-state visit tallies for states 0..max_state. Hit counts are exact
/// integers; estimates and standard errors are display-only floats.
struct VisitEstimate {
  std::vector<std::int64_t> hit_counts;
  std::int64_t num_walks = 0;
  std::uint64_t seed = 0;

  double estimate(std::size_t k) const;
  double standard_error(std::size_t k) const;
};

/// Scales the weights by their exact sum; the result sums to exactly 1.
WeightVector normalize_weights(const WeightVector& w);

/// Exact probability of ever visiting each state 0..degree: the recurrence
/// solution under the normalized weights. Zero exactly on the gaps.
SequenceWindow exact_visit_probabilities(const NumericalSemigroup& s, const WeightVector& p,
                                         std::int64_t degree);

/// Distribution of the walk position after exactly t steps, truncated at the
/// given degree; the t-th power of the one-step generating polynomial.
PowerSeries step_distribution(const NumericalSemigroup& s, const WeightVector& p, std::int64_t t,
                              std::int64_t degree);

/// Runs config.num_walks independent walks and tallies visits per state.
/// Walk i draws from a SplitMix64 stream seeded with sub_seed(seed, i);
/// workers own disjoint index ranges and merge tallies by addition, so the
/// result is identical for any worker count. workers = 0 picks the machine
/// parallelism.
VisitEstimate simulate(const WalkConfig& config, unsigned workers = 0);

}  // namespace gaprec
