#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gaprec {

/// Base class for every validation failure raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyGenerators final : Error {
  EmptyGenerators() : Error("generator list is empty") {}
};

struct NonPositiveGenerator final : Error {
  explicit NonPositiveGenerator(std::int64_t v)
      : Error("generator " + std::to_string(v) + " is not a positive integer"), value(v) {}
  std::int64_t value;
};

struct GcdNotOne final : Error {
  explicit GcdNotOne(std::int64_t g)
      : Error("generators have gcd " + std::to_string(g) + "; divide it out with reduce_gcd"),
        gcd(g) {}
  std::int64_t gcd;
};

struct LengthMismatch final : Error {
  LengthMismatch(std::size_t weights, std::size_t generators)
      : Error("weight vector has " + std::to_string(weights) + " entries but there are " +
              std::to_string(generators) + " generators") {}
};

struct NonPositiveWeight final : Error {
  explicit NonPositiveWeight(const std::string& w)
      : Error("weight " + w + " is not strictly positive") {}
};

struct BetaNotInSemigroup final : Error {
  explicit BetaNotInSemigroup(std::int64_t b)
      : Error("padding element " + std::to_string(b) + " is not in the semigroup") {}
};

struct BetaNotGreater final : Error {
  BetaNotGreater(std::int64_t b, std::int64_t largest)
      : Error("padding element " + std::to_string(b) + " must exceed the largest generator " +
              std::to_string(largest)) {}
};

struct TruncationTooSmall final : Error {
  TruncationTooSmall(std::int64_t d, std::int64_t frobenius)
      : Error("truncation degree " + std::to_string(d) + " is below the Frobenius number " +
              std::to_string(frobenius)) {}
};

struct ProbabilityNotNormalized final : Error {
  explicit ProbabilityNotNormalized(const std::string& sum)
      : Error("step probabilities sum to " + sum + ", expected exactly 1") {}
};

struct InvalidQuery final : Error {
  explicit InvalidQuery(const std::string& why) : Error("invalid query: " + why) {}
};

}  // namespace gaprec
