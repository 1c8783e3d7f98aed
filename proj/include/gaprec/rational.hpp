#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gaprec {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical rendering used in every serialized output: "p/q", or bare "p"
/// when the denominator is 1. The denominator is always positive.
std::string to_string(const Rational& value);

/// Inverse of to_string. Accepts "p", "p/q" and a leading sign.
/// Throws Error on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace gaprec
