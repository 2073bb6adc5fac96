#pragma once

// JSON encodings shared by the library and the CLI.
//
//   Laurent polynomial: object {"<exponent>": "<p/q>", ...}, exponents in
//                       increasing order, zero coefficients omitted.
//   Laurent matrix:     array of rows, each an array of polynomials.
//   Window:             array of integers [w(1), ..., w(n)].
//   Rational matrix:    array of rows of rational strings.

#include "affsch/affine_weyl.hpp"
#include "affsch/laurent.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace affsch {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& j);

Json to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const Json& j);

Json to_json(const AffinePermutation& w);
AffinePermutation window_from_json(const Json& j);

Json rational_matrix_to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const Json& j);

/// Compact serialisation; parse_matrix(dump_matrix(m)) == m and
/// dump_matrix(parse_matrix(s)) == s for canonical s.
std::string dump_matrix(const LaurentMatrix& m);
LaurentMatrix parse_matrix(std::string_view text);

}  // namespace affsch
