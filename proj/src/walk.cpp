#include "gaprec/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "gaprec/rng.hpp"

namespace gaprec {
namespace {

void check_probability(const NumericalSemigroup& s, const WeightVector& p) {
  check_alignment(s, p);
  Rational sum(0);
  for (const Rational& x : p.values()) sum += x;
  if (sum != 1) throw ProbabilityNotNormalized(to_string(sum));
}

// Step chooser on exact integer thresholds: probabilities n_i/d_i become
// integer weights on the common denominator L = lcm(d_i), and a uniform draw
// from [0, L) is mapped through the cumulative weights. No floating point,
// so gap states are unreachable with certainty, not merely high probability.
class StepSampler {
 public:
  StepSampler(const std::vector<std::int64_t>& gens, const WeightVector& p) : steps_(gens) {
    Int denom(1);
    for (const Rational& x : p.values()) denom = boost::multiprecision::lcm(denom, denominator(x));
    Int running(0);
    for (const Rational& x : p.values()) {
      running += numerator(x) * (denom / denominator(x));
      cumulative_.push_back(running);
    }
    total_ = denom;  // cumulative_.back() == denom exactly, since sum(p) = 1
    if (total_ <= std::numeric_limits<std::uint64_t>::max()) {
      small_total_ = total_.convert_to<std::uint64_t>();
      for (const Int& c : cumulative_) small_cumulative_.push_back(c.convert_to<std::uint64_t>());
    }
  }

  std::int64_t step(SplitMix64& rng) const {
    if (small_total_ != 0) {
      const std::uint64_t r = uniform_below(rng, small_total_);
      for (std::size_t i = 0;; ++i) {
        if (r < small_cumulative_[i]) return steps_[i];
      }
    }
    const Int r = wide_uniform(rng);
    for (std::size_t i = 0;; ++i) {
      if (r < cumulative_[i]) return steps_[i];
    }
  }

 private:
  Int wide_uniform(SplitMix64& rng) const {
    const unsigned bits = boost::multiprecision::msb(total_) + 1;
    const unsigned words = (bits + 63) / 64;
    const Int mask = (Int(1) << bits) - 1;
    for (;;) {
      Int value(0);
      for (unsigned i = 0; i < words; ++i) value = (value << 64) | rng.next();
      value &= mask;
      if (value < total_) return value;
    }
  }

  std::vector<std::int64_t> steps_;
  std::vector<Int> cumulative_;
  Int total_;
  std::uint64_t small_total_ = 0;
  std::vector<std::uint64_t> small_cumulative_;
};

void run_walks(const StepSampler& sampler, const WalkConfig& config, std::int64_t first,
               std::int64_t last, std::vector<std::int64_t>& hits) {
  for (std::int64_t i = first; i < last; ++i) {
    SplitMix64 rng(sub_seed(config.seed, static_cast<std::uint64_t>(i)));
    std::int64_t state = 0;
    while (state <= config.max_state) {
      ++hits[static_cast<std::size_t>(state)];
      state += sampler.step(rng);
    }
  }
}

}  // namespace

double VisitEstimate::estimate(std::size_t k) const {
  return static_cast<double>(hit_counts[k]) / static_cast<double>(num_walks);
}

double VisitEstimate::standard_error(std::size_t k) const {
  const double p = estimate(k);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(num_walks));
}

WeightVector normalize_weights(const WeightVector& w) {
  if (w.size() == 0) throw LengthMismatch(0, 1);
  Rational sum(0);
  for (const Rational& x : w.values()) sum += x;
  std::vector<Rational> scaled;
  scaled.reserve(w.size());
  for (const Rational& x : w.values()) scaled.push_back(x / sum);
  return WeightVector(std::move(scaled));
}

SequenceWindow exact_visit_probabilities(const NumericalSemigroup& s, const WeightVector& p,
                                         std::int64_t degree) {
  check_probability(s, p);
  return run_recurrence(s, p, degree);
}

PowerSeries step_distribution(const NumericalSemigroup& s, const WeightVector& p, std::int64_t t,
                              std::int64_t degree) {
  check_probability(s, p);
  return step_power(s, p, t, degree);
}

VisitEstimate simulate(const WalkConfig& config, unsigned workers) {
  check_probability(config.semigroup, config.probabilities);
  if (config.num_walks < 1) throw Error("num_walks must be at least 1");
  if (config.max_state < 1) throw Error("max_state must be at least 1");

  const StepSampler sampler(config.semigroup.generators().elements(), config.probabilities);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::int64_t>(workers, config.num_walks));

  VisitEstimate result;
  result.num_walks = config.num_walks;
  result.seed = config.seed;
  result.hit_counts.assign(static_cast<std::size_t>(config.max_state) + 1, 0);

  if (workers == 1) {
    run_walks(sampler, config, 0, config.num_walks, result.hit_counts);
    return result;
  }

  std::vector<std::vector<std::int64_t>> partial(
      workers, std::vector<std::int64_t>(result.hit_counts.size(), 0));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (config.num_walks + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const std::int64_t first = std::min<std::int64_t>(t * chunk, config.num_walks);
    const std::int64_t last = std::min<std::int64_t>(first + chunk, config.num_walks);
    pool.emplace_back(run_walks, std::cref(sampler), std::cref(config), first, last,
                      std::ref(partial[t]));
  }
  for (auto& th : pool) th.join();
  for (const auto& local : partial) {
    for (std::size_t k = 0; k < local.size(); ++k) result.hit_counts[k] += local[k];
  }
  return result;
}

}  // namespace gaprec
