#include "gaprec/recurrence.hpp"

#include <algorithm>

namespace gaprec {

WeightVector::WeightVector(std::vector<Rational> values) : values_(std::move(values)) {
  for (const Rational& w : values_) {
    if (w <= 0) throw NonPositiveWeight(to_string(w));
  }
}

WeightVector WeightVector::ones(std::size_t n) {
  return WeightVector(std::vector<Rational>(n, Rational(1)));
}

void check_alignment(const NumericalSemigroup& s, const WeightVector& w) {
  if (w.size() != s.generators().count()) {
    throw LengthMismatch(w.size(), s.generators().count());
  }
}

RecurrenceSpec build_recurrence(const NumericalSemigroup& s, const WeightVector& w) {
  check_alignment(s, w);
  const auto& gens = s.generators().elements();
  RecurrenceSpec rec;
  rec.order = s.generators().largest();
  rec.alphas.assign(static_cast<std::size_t>(rec.order), Rational(0));
  rec.terms.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    rec.alphas[static_cast<std::size_t>(gens[i] - 1)] = -w[i];
    rec.terms.emplace_back(gens[i], w[i]);
  }
  return rec;
}

std::pair<NumericalSemigroup, WeightVector> pad_order(const NumericalSemigroup& s,
                                                      const WeightVector& w, std::int64_t beta,
                                                      const Rational& beta_weight) {
  check_alignment(s, w);
  if (beta_weight <= 0) throw NonPositiveWeight(to_string(beta_weight));
  if (beta <= s.generators().largest()) throw BetaNotGreater(beta, s.generators().largest());
  if (!s.contains(beta)) throw BetaNotInSemigroup(beta);

  std::vector<std::int64_t> gens = s.generators().elements();
  gens.push_back(beta);
  std::vector<Rational> weights = w.values();
  weights.push_back(beta_weight);
  return {new_semigroup(std::move(gens)), WeightVector(std::move(weights))};
}

SequenceWindow run_recurrence(const NumericalSemigroup& s, const WeightVector& w,
                              std::int64_t degree) {
  check_alignment(s, w);
  if (degree < 0) throw Error("truncation degree must be non-negative");
  const auto& gens = s.generators().elements();

  SequenceWindow window;
  window.truncation_degree = degree;
  window.values.reserve(static_cast<std::size_t>(degree) + 1);
  window.values.emplace_back(1);
  for (std::int64_t k = 1; k <= degree; ++k) {
    Rational acc(0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] > k) break;  // indices below zero contribute nothing
      acc += w[i] * window.values[static_cast<std::size_t>(k - gens[i])];
    }
    window.values.push_back(std::move(acc));
  }
  return window;
}

std::vector<std::int64_t> zero_set(const SequenceWindow& window) {
  std::vector<std::int64_t> zeros;
  for (std::size_t k = 0; k < window.values.size(); ++k) {
    if (window.values[k] == 0) zeros.push_back(static_cast<std::int64_t>(k));
  }
  return zeros;
}

VanishingReport verify_vanishing(const NumericalSemigroup& s, const WeightVector& w,
                                 std::int64_t degree) {
  if (auto fr = s.frobenius(); fr && degree < *fr) throw TruncationTooSmall(degree, *fr);

  VanishingReport report;
  report.window = run_recurrence(s, w, degree);
  report.zeros = zero_set(report.window);
  for (std::int64_t gap : s.gaps().values) {
    if (gap <= degree) report.gaps_in_range.push_back(gap);
  }
  report.matches = report.zeros == report.gaps_in_range;
  return report;
}

Rational CharPoly::eval(const Rational& y) const {
  Rational acc(0);
  for (const Rational& c : coefficients) acc = acc * y + c;
  return acc;
}

CharPoly characteristic_polynomial(const RecurrenceSpec& rec) {
  CharPoly poly;
  poly.coefficients.reserve(rec.alphas.size() + 1);
  poly.coefficients.emplace_back(1);
  poly.coefficients.insert(poly.coefficients.end(), rec.alphas.begin(), rec.alphas.end());
  return poly;
}

std::int64_t default_truncation(const NumericalSemigroup& s) {
  std::int64_t margin = 2 * s.generators().largest();
  if (auto fr = s.frobenius()) return *fr + margin;
  return margin;
}

}  // namespace gaprec
