#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace affsch {

/// Exact rational coefficients (GMP mpq, always kept in lowest terms).
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// "p" for integers, "p/q" otherwise; q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& q);

/// Strict inverse of to_string: rejects non-reduced fractions, "+", spaces
/// and zero denominators so that parse/format is a bijection on canonical text.
Rational parse_rational(std::string_view text);

}  // namespace affsch
