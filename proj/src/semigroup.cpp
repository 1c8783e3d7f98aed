#include "gaprec/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gaprec {
namespace {

// Hard cap on the sieve length. The scan stops long before this for sane
// inputs (the Frobenius number of a gcd-1 set is below a_1*a_N), so the cap
// only guards against generator pairs too large to sieve at all.
constexpr std::int64_t kMaxSieveLength = 1'000'000'000;

std::int64_t collective_gcd(const std::vector<std::int64_t>& values) {
  std::int64_t g = 0;
  for (std::int64_t v : values) g = std::gcd(g, v);
  return g;
}

void check_raw(const std::vector<std::int64_t>& raw) {
  if (raw.empty()) throw EmptyGenerators();
  for (std::int64_t v : raw) {
    if (v < 1) throw NonPositiveGenerator(v);
  }
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<std::int64_t> raw) {
  check_raw(raw);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::int64_t g = collective_gcd(raw);
  if (g != 1) throw GcdNotOne(g);
  elements_ = std::move(raw);
}

NumericalSemigroup::NumericalSemigroup(GeneratorSet generators)
    : generators_(std::move(generators)) {
  const auto& a = generators_.elements();
  const std::int64_t a1 = generators_.smallest();
  const std::int64_t aN = generators_.largest();
  if (a1 > (kMaxSieveLength - aN) / aN) {
    throw Error("generators too large: membership sieve would exceed " +
                std::to_string(kMaxSieveLength) + " entries");
  }
  const std::int64_t cap = a1 * aN + aN;

  membership_.push_back(true);  // 0 is the empty combination
  std::int64_t run = 1;         // consecutive members ending at the current index
  std::int64_t k = 0;
  while (run < a1 && k < cap) {
    ++k;
    bool member = false;
    for (std::int64_t gen : a) {
      if (gen > k) break;
      if (membership_[static_cast<std::size_t>(k - gen)]) {
        member = true;
        break;
      }
    }
    membership_.push_back(member);
    if (member) {
      ++run;
    } else {
      run = 0;
      gaps_.values.push_back(k);
    }
  }
  assert(run >= a1);  // the stop rule fires below the cap whenever gcd = 1

  if (!gaps_.values.empty()) frobenius_ = gaps_.values.back();
}

bool NumericalSemigroup::contains(std::int64_t k) const {
  if (k < 0) return false;
  if (k <= sieve_bound()) return membership_[static_cast<std::size_t>(k)];
  return true;  // the sieve extends past the last gap
}

NumericalSemigroup new_semigroup(std::vector<std::int64_t> raw) {
  return NumericalSemigroup(GeneratorSet(std::move(raw)));
}

std::vector<std::int64_t> reduce_gcd(const std::vector<std::int64_t>& raw) {
  check_raw(raw);
  std::int64_t g = collective_gcd(raw);
  std::vector<std::int64_t> reduced;
  reduced.reserve(raw.size());
  for (std::int64_t v : raw) reduced.push_back(v / g);
  return reduced;
}

}  // namespace gaprec
