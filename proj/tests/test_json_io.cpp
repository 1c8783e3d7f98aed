#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaprec/json_io.hpp"

using namespace gaprec;

TEST_CASE("rational strings round-trip") {
  std::vector<Rational> values{Rational(0), Rational(7), Rational(-3, 4), Rational(22, 7)};
  CHECK(strings_to_rationals(rationals_to_strings(values)) == values);
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("certificates survive a JSON round-trip") {
  WitnessCertificate cert = *find_witness(make_query(5, {1})).certificate;
  OrderedJson j = certificate_to_json(cert);
  WitnessCertificate back = certificate_from_json(j);

  CHECK(back.query.order == cert.query.order);
  CHECK(back.query.target_set == cert.query.target_set);
  CHECK(back.generators == cert.generators);
  CHECK(back.pad_beta == cert.pad_beta);
  CHECK(back.weights.values() == cert.weights.values());
  CHECK(back.recurrence.order == cert.recurrence.order);
  CHECK(back.recurrence.alphas == cert.recurrence.alphas);
  CHECK(back.verified_zero_set == cert.verified_zero_set);
  CHECK(back.dimension_lower_bound == cert.dimension_lower_bound);
  CHECK(back.frobenius_threshold == cert.frobenius_threshold);
  CHECK(certify(back).ok);
}

TEST_CASE("a certificate inside a CLI document is unwrapped") {
  WitnessCertificate cert = *find_witness(make_query(5, {1, 2, 4, 7})).certificate;
  OrderedJson doc;
  doc["command"] = "witness";
  doc["result"] = OrderedJson{{"found", true}, {"certificate", certificate_to_json(cert)}};
  WitnessCertificate back = certificate_from_json(doc);
  CHECK(back.generators == cert.generators);
  CHECK(certify(back).ok);
}

TEST_CASE("malformed certificates are rejected with an error") {
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse("{}")), Error);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse("[1,2]")), Error);

  OrderedJson j = certificate_to_json(*find_witness(make_query(5, {1})).certificate);
  j.erase("weights");
  CHECK_THROWS_AS(certificate_from_json(j), Error);

  OrderedJson bad = certificate_to_json(*find_witness(make_query(5, {1})).certificate);
  bad["weights"] = std::vector<std::string>{"1", "x", "1"};
  CHECK_THROWS_AS(certificate_from_json(bad), Error);
}

TEST_CASE("a certificate with an emptied recurrence is refused, not crashed on") {
  OrderedJson j = certificate_to_json(*find_witness(make_query(5, {1})).certificate);
  j["recurrence"] = OrderedJson{{"order", 0}, {"alpha", std::vector<std::string>{}}};
  CertifyResult r = certify(certificate_from_json(j));
  CHECK(!r.ok);
}
