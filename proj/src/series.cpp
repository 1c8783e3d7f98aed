#include "gaprec/series.hpp"

#include <algorithm>

namespace gaprec {
namespace {

PowerSeries zero_series(std::int64_t degree) {
  PowerSeries s;
  s.coefficients.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  return s;
}

void check_degree(std::int64_t degree) {
  if (degree < 0) throw Error("truncation degree must be non-negative");
}

}  // namespace

PowerSeries multiply_truncated(const PowerSeries& a, const PowerSeries& b, std::int64_t degree) {
  check_degree(degree);
  PowerSeries out = zero_series(degree);
  const std::int64_t da = std::min(a.truncation_degree(), degree);
  for (std::int64_t i = 0; i <= da; ++i) {
    const Rational& ai = a.coefficients[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    const std::int64_t db = std::min(b.truncation_degree(), degree - i);
    for (std::int64_t j = 0; j <= db; ++j) {
      const Rational& bj = b.coefficients[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      out.coefficients[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return out;
}

PowerSeries invert_truncated(const PowerSeries& series, std::int64_t degree) {
  check_degree(degree);
  if (series.coefficients.empty() || series.coefficients[0] == 0) {
    throw Error("series with zero constant term has no reciprocal");
  }
  const Rational& b0 = series.coefficients[0];
  PowerSeries out = zero_series(degree);
  out.coefficients[0] = Rational(1) / b0;
  for (std::int64_t k = 1; k <= degree; ++k) {
    Rational acc(0);
    const std::int64_t reach = std::min(k, series.truncation_degree());
    for (std::int64_t j = 1; j <= reach; ++j) {
      const Rational& bj = series.coefficients[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      acc += bj * out.coefficients[static_cast<std::size_t>(k - j)];
    }
    out.coefficients[static_cast<std::size_t>(k)] = -acc / b0;
  }
  return out;
}

PowerSeries step_polynomial(const NumericalSemigroup& s, const WeightVector& w,
                            std::int64_t degree) {
  check_alignment(s, w);
  check_degree(degree);
  PowerSeries out = zero_series(degree);
  const auto& gens = s.generators().elements();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] <= degree) out.coefficients[static_cast<std::size_t>(gens[i])] = w[i];
  }
  return out;
}

PowerSeries generating_series(const NumericalSemigroup& s, const WeightVector& w,
                              std::int64_t degree) {
  PowerSeries denom = step_polynomial(s, w, degree);
  for (auto& c : denom.coefficients) c = -c;
  denom.coefficients[0] += 1;  // 1 - F_1(z)
  return invert_truncated(denom, degree);
}

PowerSeries step_power(const NumericalSemigroup& s, const WeightVector& w, std::int64_t t,
                       std::int64_t degree) {
  check_alignment(s, w);
  check_degree(degree);
  if (t < 0) throw Error("step count must be non-negative");
  PowerSeries base = step_polynomial(s, w, degree);
  PowerSeries acc = zero_series(degree);
  acc.coefficients[0] = 1;
  for (std::int64_t i = 0; i < t; ++i) acc = multiply_truncated(acc, base, degree);
  return acc;
}

PowerSeries step_power_sum(const NumericalSemigroup& s, const WeightVector& w,
                           std::int64_t degree) {
  check_alignment(s, w);
  check_degree(degree);
  PowerSeries base = step_polynomial(s, w, degree);
  PowerSeries power = zero_series(degree);
  power.coefficients[0] = 1;
  PowerSeries total = power;
  const std::int64_t last = degree / s.generators().smallest();
  for (std::int64_t t = 1; t <= last; ++t) {
    power = multiply_truncated(power, base, degree);
    for (std::size_t k = 0; k < total.coefficients.size(); ++k) {
      total.coefficients[k] += power.coefficients[k];
    }
  }
  return total;
}

}  // namespace gaprec
