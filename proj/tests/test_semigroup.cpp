#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gaprec/semigroup.hpp"
#include "test_support.hpp"

using namespace gaprec;
using I64 = std::vector<std::int64_t>;

TEST_CASE("construction computes gaps and frobenius") {
  NumericalSemigroup s = new_semigroup({3, 5});
  CHECK(s.gaps().values == I64{1, 2, 4, 7});
  REQUIRE(s.frobenius().has_value());
  CHECK(*s.frobenius() == 7);
  CHECK(*s.frobenius() == 3 * 5 - 3 - 5);  // Sylvester cross-check

  NumericalSemigroup trivial = new_semigroup({1});
  CHECK(trivial.gaps().values.empty());
  CHECK(!trivial.frobenius().has_value());

  NumericalSemigroup two_three = new_semigroup({2, 3});
  CHECK(two_three.gaps().values == I64{1});
  CHECK(*two_three.frobenius() == 1);
}

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(new_semigroup({}), EmptyGenerators);
  CHECK_THROWS_AS(new_semigroup({3, 0}), NonPositiveGenerator);
  CHECK_THROWS_AS(new_semigroup({3, -5}), NonPositiveGenerator);
  try {
    new_semigroup({4, 6});
    FAIL("expected GcdNotOne");
  } catch (const GcdNotOne& e) {
    CHECK(e.gcd == 2);
  }
}

TEST_CASE("generators are sorted and deduplicated, redundant ones kept") {
  NumericalSemigroup s = new_semigroup({5, 3, 5, 6});
  CHECK(s.generators().elements() == I64{3, 5, 6});  // 6 = 3+3 is redundant but retained
  CHECK(s.gaps().values == I64{1, 2, 4, 7});
}

TEST_CASE("reduce_gcd divides out the collective gcd") {
  CHECK(reduce_gcd({4, 6}) == I64{2, 3});
  CHECK(reduce_gcd({3, 5}) == I64{3, 5});
  CHECK(reduce_gcd({10}) == I64{1});
  CHECK(reduce_gcd({6, 4}) == I64{3, 2});  // order preserved
  CHECK_THROWS_AS(reduce_gcd({}), EmptyGenerators);
  CHECK_THROWS_AS(reduce_gcd({0}), NonPositiveGenerator);
}

TEST_CASE("contains handles members, gaps and indices past the sieve") {
  NumericalSemigroup s = new_semigroup({3, 5});
  CHECK(s.contains(8));   // 3 + 5
  CHECK(!s.contains(7));  // the Frobenius number
  CHECK(s.contains(0));
  CHECK(!s.contains(-1));
  for (std::int64_t k = *s.frobenius() + 1; k <= s.sieve_bound() + 50; ++k) CHECK(s.contains(k));

  NumericalSemigroup trivial = new_semigroup({1});
  for (std::int64_t k = 0; k <= 20; ++k) CHECK(trivial.contains(k));
}

TEST_CASE("membership matches the naive multiplicity oracle") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 12; ++trial) {
    auto gens = testing::random_generators(rng, 4, 20);
    NumericalSemigroup s = new_semigroup(gens);
    testing::NaiveMembership oracle(gens);
    for (std::int64_t k = 0; k <= 200; ++k) {
      CAPTURE(k);
      CHECK(s.contains(k) == oracle.representable(k));
    }
  }
}

TEST_CASE("gaps agree with contains over the sieve window") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = testing::random_generators(rng);
    NumericalSemigroup s = new_semigroup(gens);
    const std::int64_t top = s.frobenius().value_or(0) + s.generators().largest();
    std::vector<std::int64_t> from_contains;
    for (std::int64_t k = 1; k <= top; ++k) {
      if (!s.contains(k)) from_contains.push_back(k);
    }
    CHECK(from_contains == s.gaps().values);
  }
}

TEST_CASE("two coprime generators obey the Sylvester formula") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 20) {
    std::int64_t a = 2 + static_cast<std::int64_t>(rng() % 38);
    std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 38);
    if (a == b || std::gcd(a, b) != 1) continue;
    NumericalSemigroup s = new_semigroup({a, b});
    REQUIRE(s.frobenius().has_value());
    CHECK(*s.frobenius() == a * b - a - b);
    ++checked;
  }
}

TEST_CASE("appending a member leaves the gap set unchanged") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    auto gens = testing::random_generators(rng);
    NumericalSemigroup s = new_semigroup(gens);
    // pick some member beyond the largest generator
    std::int64_t beta = s.generators().largest() +
                        1 + static_cast<std::int64_t>(rng() % 40);
    while (!s.contains(beta)) ++beta;
    auto extended = gens;
    extended.push_back(beta);
    NumericalSemigroup padded = new_semigroup(extended);
    CHECK(padded.gaps().values == s.gaps().values);
    CHECK(padded.frobenius() == s.frobenius());
  }
}

TEST_CASE("sieve stops only after a full run of members") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = testing::random_generators(rng, 4, 20);
    NumericalSemigroup s = new_semigroup(gens);
    const std::int64_t a1 = s.generators().smallest();
    const std::int64_t bound = s.sieve_bound();
    // the final a_1 table entries are all members, and everything past the
    // bound is a member too (checked against the naive oracle)
    for (std::int64_t k = bound - a1 + 1; k <= bound; ++k) CHECK(s.membership()[k]);
    testing::NaiveMembership oracle(gens);
    for (std::int64_t k = bound + 1; k <= bound + 30; ++k) CHECK(oracle.representable(k));
  }
}
