#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaprec/witness.hpp"
#include "test_support.hpp"

using namespace gaprec;
using I64 = std::vector<std::int64_t>;

TEST_CASE("the gap set of <3,5> is witnessed without padding") {
  WitnessSearchResult res = find_witness(make_query(5, {1, 2, 4, 7}));
  REQUIRE(res.found());
  const WitnessCertificate& cert = *res.certificate;
  CHECK(cert.generators == I64{3, 5});
  CHECK(!cert.pad_beta.has_value());
  CHECK(cert.recurrence.order == 5);
  CHECK(cert.verified_zero_set == I64{1, 2, 4, 7});
  CHECK(cert.dimension_lower_bound == 2);
  CHECK(cert.frobenius_threshold == 7);
  CHECK(certify(cert).ok);
}

TEST_CASE("a low-order target set is reached by padding") {
  WitnessSearchResult res = find_witness(make_query(5, {1}));
  REQUIRE(res.found());
  const WitnessCertificate& cert = *res.certificate;
  CHECK(cert.generators == I64{2, 3, 5});
  REQUIRE(cert.pad_beta.has_value());
  CHECK(*cert.pad_beta == 5);
  CHECK(cert.recurrence.order == 5);
  CHECK(cert.recurrence.alphas.back() != 0);
  CHECK(cert.verified_zero_set == I64{1});
  CHECK(cert.dimension_lower_bound == 2);  // <2,3> before padding
  CHECK(certify(cert).ok);
}

TEST_CASE("the search reports failure when no gcd-1 witness fits") {
  WitnessSearchResult res = find_witness(make_query(3, {1, 2}));
  CHECK(!res.found());
  CHECK(res.failure_reason.find("search failure") != std::string::npos);
  CHECK(res.failure_reason.find("gcd") != std::string::npos);
}

TEST_CASE("queries are validated") {
  CHECK_THROWS_AS(make_query(0, {1}), InvalidQuery);
  CHECK_THROWS_AS(make_query(5, {}), InvalidQuery);
  CHECK_THROWS_AS(make_query(5, {1, 0}), InvalidQuery);
  PairQuery q = make_query(5, {4, 1, 4, 2});
  CHECK(q.target_set == I64{1, 2, 4});
}

TEST_CASE("certify rejects tampered certificates") {
  WitnessCertificate cert = *find_witness(make_query(5, {1, 2, 4, 7})).certificate;

  SUBCASE("a target point inside the semigroup") {
    cert.query.target_set = {1, 2, 3};
    CertifyResult r = certify(cert);
    CHECK(!r.ok);
    REQUIRE(!r.failures.empty());
  }
  SUBCASE("a mismatched order") {
    cert.query.order = 4;
    CHECK(!certify(cert).ok);
  }
  SUBCASE("an edited zero set") {
    cert.verified_zero_set.push_back(9);
    CHECK(!certify(cert).ok);
  }
  SUBCASE("an inflated dimension bound") {
    cert.dimension_lower_bound = 3;
    CHECK(!certify(cert).ok);
  }
  SUBCASE("a wrong threshold") {
    cert.frobenius_threshold = 6;
    CHECK(!certify(cert).ok);
  }
  SUBCASE("foreign recurrence coefficients") {
    cert.recurrence.alphas[0] = Rational(-1);
    CHECK(!certify(cert).ok);
  }
}

TEST_CASE("every found certificate certifies") {
  std::mt19937_64 rng(2718);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t order = 1 + static_cast<std::int64_t>(rng() % 24);
    std::set<std::int64_t> targets;
    const int size = 1 + static_cast<int>(rng() % 4);
    while (static_cast<int>(targets.size()) < size) {
      targets.insert(1 + static_cast<std::int64_t>(rng() % (order + 5)));
    }
    PairQuery q = make_query(order, {targets.begin(), targets.end()});
    WitnessSearchResult res = find_witness(q);
    if (!res.found()) continue;
    ++found;
    CertifyResult check = certify(*res.certificate);
    CAPTURE(order);
    CHECK(check.ok);
    // the target set sits inside the verified zero set
    for (std::int64_t x : q.target_set) {
      CHECK(std::binary_search(res.certificate->verified_zero_set.begin(),
                               res.certificate->verified_zero_set.end(), x));
    }
  }
  CHECK(found > 10);  // the family is not degenerate
}

TEST_CASE("gap sets of random semigroups are witnessed at padded orders") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 6; ++trial) {
    NumericalSemigroup s = new_semigroup(testing::random_generators(rng, 4, 25));
    if (s.gaps().empty()) continue;  // <1> has nothing to witness
    const std::int64_t top = s.frobenius().value_or(0) + 3 * s.generators().largest();
    int tested = 0;
    for (std::int64_t beta = s.generators().largest() + 1; beta <= top && tested < 8; ++beta) {
      if (!s.contains(beta)) continue;
      ++tested;
      WitnessSearchResult res = find_witness(PairQuery{beta, s.gaps().values});
      CAPTURE(beta);
      REQUIRE(res.found());
      CHECK(res.certificate->recurrence.order == beta);
      CHECK(res.certificate->verified_zero_set == s.gaps().values);
      CHECK(certify(*res.certificate).ok);
    }
  }
}

TEST_CASE("orders above both the threshold and the largest generator always work") {
  // above the Frobenius number every integer is in the semigroup, so any
  // order from max(frobenius, a_N - 1) + 1 on is witnessed; below a_N the
  // construction has no room for its own generators
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 5; ++trial) {
    NumericalSemigroup s = new_semigroup(testing::random_generators(rng, 3, 18));
    if (s.gaps().empty()) continue;
    const std::int64_t fr = *s.frobenius();
    const std::int64_t start = std::max(fr, s.generators().largest() - 1) + 1;
    for (std::int64_t beta = start; beta <= start + 10; ++beta) {
      WitnessSearchResult res = find_witness(PairQuery{beta, s.gaps().values});
      CAPTURE(beta);
      REQUIRE(res.found());
      CHECK(res.certificate->frobenius_threshold == fr);
    }
  }
}
