#include "gaprec/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "gaprec/errors.hpp"

namespace gaprec {

std::string to_string(const Rational& value) { return value.str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty string is not a rational");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw Error("'" + text + "' is not a rational; expected p or p/q");
    }
  }
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw Error("'" + text + "' is not a rational; expected p or p/q");
  }
}

}  // namespace gaprec
