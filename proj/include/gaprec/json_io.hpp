#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "gaprec/rational.hpp"
#include "gaprec/witness.hpp"

namespace gaprec {

using OrderedJson = nlohmann::ordered_json;

std::vector<std::string> rationals_to_strings(const std::vector<Rational>& values);
std::vector<Rational> strings_to_rationals(const std::vector<std::string>& texts);

OrderedJson certificate_to_json(const WitnessCertificate& cert);

/// Rebuilds a certificate from its JSON form. Accepts either the bare
/// certificate object or a whole CLI output document wrapping one, so
/// `witness` output can be piped straight into `certify`.
WitnessCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace gaprec
