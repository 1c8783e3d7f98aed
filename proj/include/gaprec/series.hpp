#pragma once

#include <cstdint>
#include <vector>

#include "gaprec/rational.hpp"
#include "gaprec/recurrence.hpp"
#include "gaprec/semigroup.hpp"

namespace gaprec {

/// Truncated formal power series: coefficients for degrees 0..D.
struct PowerSeries {
  std::vector<Rational> coefficients;

  std::int64_t truncation_degree() const {
    return static_cast<std::int64_t>(coefficients.size()) - 1;
  }
};

/// Schoolbook product of two series, truncated at the given degree.
PowerSeries multiply_truncated(const PowerSeries& a, const PowerSeries& b, std::int64_t degree);

/// Reciprocal of a series with nonzero constant term, truncated at the given
/// degree, via the long-division coefficient recursion. This is the second,
/// dense code path that cross-checks the sparse recurrence evaluation; it
/// shares no arithmetic with run_recurrence.
PowerSeries invert_truncated(const PowerSeries& series, std::int64_t degree);

/// The one-step polynomial w_1 z^{a_1} + ... + w_N z^{a_N}.
PowerSeries step_polynomial(const NumericalSemigroup& s, const WeightVector& w,
                            std::int64_t degree);

/// Power-series expansion of 1 / (1 - step polynomial) through the given
/// degree, computed by series inversion.
PowerSeries generating_series(const NumericalSemigroup& s, const WeightVector& w,
                              std::int64_t degree);

/// t-th power of the step polynomial (1 for t = 0), by iterated truncated
/// multiplication. Nonzero coefficients sit exactly at degrees expressible
/// as a sum of t generators.
PowerSeries step_power(const NumericalSemigroup& s, const WeightVector& w, std::int64_t t,
                       std::int64_t degree);

/// Sum of step powers for t = 0..floor(D / a_1); higher powers start past
/// the truncation degree. Telescopes to the generating series.
PowerSeries step_power_sum(const NumericalSemigroup& s, const WeightVector& w,
                           std::int64_t degree);

}  // namespace gaprec
