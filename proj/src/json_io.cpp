#include "affsch/json_io.hpp"

#include "affsch/errors.hpp"

#include <charconv>
#include <map>

namespace affsch {

namespace {

Index parse_exponent(const std::string& key) {
  Index e = 0;
  const auto* first = key.data();
  const auto* last = key.data() + key.size();
  const auto [ptr, ec] = std::from_chars(first, last, e);
  if (ec != std::errc() || ptr != last || key.empty() || std::to_string(e) != key) {
    throw ParseError("malformed exponent key '" + key + "'");
  }
  return e;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

}  // namespace

Json to_json(const LaurentPoly& f) {
  Json j = Json::object();
  for (const auto& [e, c] : f.terms()) j[std::to_string(e)] = to_string(c);
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  require(j.is_object(), "polynomial must be a JSON object");
  std::map<Index, Rational> terms;
  Index previous = 0;
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    const Index e = parse_exponent(key);
    require(first || e > previous, "polynomial exponents must be strictly increasing");
    require(value.is_string(), "coefficient must be a string");
    const Rational c = parse_rational(value.get<std::string>());
    require(c != 0, "zero coefficients must be omitted");
    terms.emplace(e, c);
    previous = e;
    first = false;
  }
  return LaurentPoly::from_map(terms);
}

Json to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

LaurentMatrix matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  LaurentMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    require(row.is_array() && static_cast<Eigen::Index>(row.size()) == n, "matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = poly_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json to_json(const AffinePermutation& w) {
  Json a = Json::array();
  for (Index v : w.window()) a.push_back(v);
  return a;
}

AffinePermutation window_from_json(const Json& j) {
  require(j.is_array(), "window must be an array of integers");
  std::vector<Index> win;
  for (const auto& v : j) {
    require(v.is_number_integer(), "window entries must be integers");
    win.push_back(v.get<Index>());
  }
  return AffinePermutation(std::move(win));
}

Json rational_matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "rational matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  require(j[0].is_array() && !j[0].empty(), "rational matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  RationalMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    require(row.is_array() && static_cast<Eigen::Index>(row.size()) == cols, "ragged rational matrix");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& v = row[static_cast<std::size_t>(k)];
      require(v.is_string(), "rational entries must be strings");
      m(i, k) = parse_rational(v.get<std::string>());
    }
  }
  return m;
}

std::string dump_matrix(const LaurentMatrix& m) { return to_json(m).dump(); }

LaurentMatrix parse_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return matrix_from_json(j);
}

}  // namespace affsch
