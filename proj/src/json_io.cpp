#include "gaprec/json_io.hpp"

#include "gaprec/errors.hpp"

namespace gaprec {
namespace {

const nlohmann::json& unwrap(const nlohmann::json& doc) {
  if (doc.contains("result") && doc["result"].is_object() &&
      doc["result"].contains("certificate")) {
    return doc["result"]["certificate"];
  }
  if (doc.contains("certificate")) return doc["certificate"];
  return doc;
}

template <typename T>
T field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name)) throw Error(std::string("certificate is missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("certificate field '") + name + "' has the wrong type");
  }
}

}  // namespace

std::vector<std::string> rationals_to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> strings_to_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_rational(t));
  return out;
}

OrderedJson certificate_to_json(const WitnessCertificate& cert) {
  OrderedJson j;
  j["order"] = cert.query.order;
  j["target_set"] = cert.query.target_set;
  j["generators"] = cert.generators;
  if (cert.pad_beta) {
    j["pad_beta"] = *cert.pad_beta;
  } else {
    j["pad_beta"] = nullptr;
  }
  j["weights"] = rationals_to_strings(cert.weights.values());
  j["recurrence"] = OrderedJson{{"order", cert.recurrence.order},
                                {"alpha", rationals_to_strings(cert.recurrence.alphas)}};
  j["verified_zero_set"] = cert.verified_zero_set;
  j["dimension_lower_bound"] = cert.dimension_lower_bound;
  j["frobenius_threshold"] = cert.frobenius_threshold;
  return j;
}

WitnessCertificate certificate_from_json(const nlohmann::json& doc) {
  const nlohmann::json& j = unwrap(doc);
  if (!j.is_object()) throw Error("certificate JSON must be an object");

  PairQuery query;
  query.order = field<std::int64_t>(j, "order");
  query.target_set = field<std::vector<std::int64_t>>(j, "target_set");

  const nlohmann::json& rec = j.contains("recurrence") ? j.at("recurrence") : nlohmann::json();
  if (!rec.is_object()) throw Error("certificate is missing field 'recurrence'");

  std::vector<Rational> weights = strings_to_rationals(field<std::vector<std::string>>(j, "weights"));
  std::vector<std::int64_t> generators = field<std::vector<std::int64_t>>(j, "generators");

  RecurrenceSpec spec;
  spec.order = field<std::int64_t>(rec, "order");
  spec.alphas = strings_to_rationals(field<std::vector<std::string>>(rec, "alpha"));
  if (generators.size() == weights.size()) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      spec.terms.emplace_back(generators[i], weights[i]);
    }
  }

  std::optional<std::int64_t> pad_beta;
  if (j.contains("pad_beta") && !j.at("pad_beta").is_null()) {
    pad_beta = field<std::int64_t>(j, "pad_beta");
  }

  return WitnessCertificate{std::move(query),
                            std::move(generators),
                            pad_beta,
                            WeightVector(std::move(weights)),
                            std::move(spec),
                            field<std::vector<std::int64_t>>(j, "verified_zero_set"),
                            field<std::int64_t>(j, "dimension_lower_bound"),
                            field<std::int64_t>(j, "frobenius_threshold")};
}

}  // namespace gaprec
