#include "affsch/rational.hpp"

#include "affsch/errors.hpp"

#include <cctype>

namespace affsch {

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_canonical_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_canonical_integer(num, true) || num == "-0") {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(std::string(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_canonical_integer(den, false) || den == "0" || den == "1") {
    throw ParseError("malformed denominator in '" + std::string(text) + "'");
  }
  const Rational q = Rational(std::string(num)) / Rational(std::string(den));
  if (to_string(q) != text) throw ParseError("rational '" + std::string(text) + "' not in lowest terms");
  return q;
}

}  // namespace affsch
