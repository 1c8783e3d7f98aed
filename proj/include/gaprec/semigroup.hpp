#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gaprec/errors.hpp"

namespace gaprec {

/// Validated generator tuple a_1 < a_2 < ... < a_N: strictly positive,
/// strictly increasing (duplicates are dropped on construction) and with
/// collective gcd 1. Redundant generators are deliberately kept; several
/// results here depend on non-minimal generating sets being allowed.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<std::int64_t> raw);

  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t count() const { return elements_.size(); }
  std::int64_t smallest() const { return elements_.front(); }
  std::int64_t largest() const { return elements_.back(); }

 private:
  std::vector<std::int64_t> elements_;
};

/// Sorted finite list of positive integers outside the semigroup.
/// When nonempty, its maximum is the Frobenius number.
struct GapSet {
  std::vector<std::int64_t> values;

  bool empty() const { return values.empty(); }
};

/// A finitely generated numerical semigroup with a precomputed membership
/// sieve. The sieve scans upward and stops once a_1 consecutive members have
/// been seen: past that point every integer is a member (closure under +a_1),
/// so the table is complete for all gap queries. Immutable after
/// construction; safe to share across threads.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(GeneratorSet generators);

  const GeneratorSet& generators() const { return generators_; }

  /// True iff k is a non-negative integer combination of the generators.
  bool contains(std::int64_t k) const;

  const GapSet& gaps() const { return gaps_; }

  /// Largest gap; empty when there are no gaps (the semigroup <1>).
  std::optional<std::int64_t> frobenius() const { return frobenius_; }

  /// Largest index covered by the membership table.
  std::int64_t sieve_bound() const { return static_cast<std::int64_t>(membership_.size()) - 1; }

  const std::vector<bool>& membership() const { return membership_; }

 private:
  GeneratorSet generators_;
  std::vector<bool> membership_;
  std::optional<std::int64_t> frobenius_;
  GapSet gaps_;
};

/// Builds the semigroup generated by raw (sorted, deduplicated).
/// Throws EmptyGenerators, NonPositiveGenerator or GcdNotOne.
NumericalSemigroup new_semigroup(std::vector<std::int64_t> raw);

/// Divides every element by the collective gcd; the result has gcd 1.
/// Order and multiplicity of the input list are preserved.
std::vector<std::int64_t> reduce_gcd(const std::vector<std::int64_t>& raw);

}  // namespace gaprec
