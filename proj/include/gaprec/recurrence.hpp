#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gaprec/rational.hpp"
#include "gaprec/semigroup.hpp"

namespace gaprec {

/// Strictly positive rational weights, aligned index-by-index with a
/// generator set. Positivity is enforced at construction; alignment with a
/// particular semigroup is checked by the operations that take both.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> values);

  static WeightVector ones(std::size_t n);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<Rational> values_;
};

/// An order-M recurrence g_k + alpha_1 g_{k-1} + ... + alpha_M g_{k-M} = 0.
/// Built from a semigroup and weights: alpha_j = -w_i when j equals the i-th
/// generator and 0 elsewhere, so alpha_M = -w_N != 0 and the order is exactly
/// the largest generator. Both the dense alpha vector (the coordinates
/// emitted in output) and the sparse (generator, weight) form used for
/// evaluation are kept.
struct RecurrenceSpec {
  std::int64_t order = 0;
  std::vector<Rational> alphas;                           // alpha_1 .. alpha_M
  std::vector<std::pair<std::int64_t, Rational>> terms;   // (a_i, w_i)
};

/// Window g_0..g_D of the recurrence solution with g_0 = 1 and every index
/// below zero treated as 0.
struct SequenceWindow {
  std::vector<Rational> values;
  std::int64_t truncation_degree = 0;
};

/// Monic characteristic polynomial y^M + alpha_1 y^{M-1} + ... + alpha_M,
/// stored by descending power.
struct CharPoly {
  std::vector<Rational> coefficients;

  std::int64_t degree() const { return static_cast<std::int64_t>(coefficients.size()) - 1; }
  Rational eval(const Rational& y) const;
};

RecurrenceSpec build_recurrence(const NumericalSemigroup& s, const WeightVector& w);

/// Re-generates the same semigroup with beta appended as a redundant
/// generator, raising the recurrence order to beta. Requires beta in S and
/// beta strictly above the current largest generator; the element set (and
/// hence the gap set) is unchanged.
std::pair<NumericalSemigroup, WeightVector> pad_order(const NumericalSemigroup& s,
                                                      const WeightVector& w, std::int64_t beta,
                                                      const Rational& beta_weight);

/// Evaluates g_k = w_1 g_{k-a_1} + ... + w_N g_{k-a_N} for k = 1..degree
/// under exact rational arithmetic.
SequenceWindow run_recurrence(const NumericalSemigroup& s, const WeightVector& w,
                              std::int64_t degree);

/// Indices k <= D with g_k exactly zero.
std::vector<std::int64_t> zero_set(const SequenceWindow& window);

/// Outcome of checking that the recurrence solution vanishes precisely on
/// the gap set.
struct VanishingReport {
  SequenceWindow window;
  std::vector<std::int64_t> zeros;
  std::vector<std::int64_t> gaps_in_range;
  bool matches = false;
};

/// Runs the recurrence to the given degree and compares its zero set with
/// the sieve's gap set. Throws TruncationTooSmall when the window cannot
/// cover every gap.
VanishingReport verify_vanishing(const NumericalSemigroup& s, const WeightVector& w,
                                 std::int64_t degree);

CharPoly characteristic_polynomial(const RecurrenceSpec& rec);

/// Default window: Frobenius number + twice the largest generator, or twice
/// the largest generator when there are no gaps. Covers every gap plus a
/// margin showing no zeros occur past the Frobenius number.
std::int64_t default_truncation(const NumericalSemigroup& s);

/// Throws LengthMismatch unless the weights align with the generators.
void check_alignment(const NumericalSemigroup& s, const WeightVector& w);

}  // namespace gaprec
