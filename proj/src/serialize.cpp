#include "wrlab/serialize.hpp"

#include <fstream>

namespace wrlab {

Json matrix_to_json(const ExactMatrix& m) {
  const Integer k = matrix_radicand(m);
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      entries.push_back({rational_to_string(m(i, j).rational_part()),
                         rational_to_string(m(i, j).radical_coeff())});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"radicand", k.str()}, {"entries", entries}};
}

namespace {

Integer radicand_field(const Json& j) {
  if (!j.contains("radicand")) return Integer(0);
  const Json& k = j.at("radicand");
  if (k.is_number_integer()) return Integer(k.get<long long>());
  if (k.is_string()) return Integer(k.get<std::string>());
  throw DomainError("matrix radicand must be an integer");
}

QuadScalar entry_value(const Json& e, const Integer& k) {
  auto rational = [](const Json& x) {
    if (x.is_number_integer()) return Rational(x.get<long long>());
    if (x.is_string()) return parse_rational(x.get<std::string>());
    throw DomainError("matrix entry parts must be integers or \"p/q\" strings");
  };
  if (e.is_array()) {
    if (e.size() != 2) throw DomainError("matrix entries are [x, y] pairs");
    const Rational y = rational(e[1]);
    if (y != 0 && k <= 0) throw DomainError("irrational entry needs a positive radicand");
    return QuadScalar(rational(e[0]), y, y == 0 ? Integer(0) : k);
  }
  if (e.is_number_integer()) return QuadScalar(Integer(e.get<long long>()));
  if (e.is_string()) return QuadScalar::parse(e.get<std::string>());
  throw DomainError("unsupported matrix entry " + e.dump());
}

}  // namespace

ExactMatrix matrix_from_json(const Json& j) {
  try {
    const long rows = j.at("rows").get<long>();
    const long cols = j.at("cols").get<long>();
    const Json& entries = j.at("entries");
    if (rows <= 0 || cols <= 0) throw DomainError("matrix dimensions must be positive");
    if (!entries.is_array() || static_cast<long>(entries.size()) != rows * cols)
      throw DomainError("expected " + std::to_string(rows * cols) + " row-major entries");
    const Integer k = radicand_field(j);
    ExactMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
      for (long c = 0; c < cols; ++c) m(i, c) = entry_value(entries[i * cols + c], k);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed matrix JSON: ") + e.what());
  }
}

ExactMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return matrix_from_json(Json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

Json exact_json(const QuadScalar& v) {
  return {{"exact", v.to_string()}, {"float", format_significant(qs_to_float(v, 128), 20)}};
}

Json svp_report_to_json(const SvpReport& r) {
  Json minimal = Json::array();
  for (const Coeffs& c : r.minimal_coeffs) minimal.push_back(c);
  return {{"lambda1_sq", exact_json(r.lambda1_sq)},
          {"kissing", r.kissing},
          {"is_wr", r.is_wr},
          {"is_gwr", r.is_gwr},
          {"minimal_vectors", minimal}};
}

}  // namespace wrlab
