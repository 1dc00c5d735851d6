#pragma once

// JSON forms shared by the CLI and file inputs.
//
// Matrix: {"rows": n, "cols": m, "radicand": k, "entries": [[x, y], ...]}
// with the row-major entries x + y*sqrt(k) given as rational strings "p/q".

#include <string>

#include <json.hpp>

#include "wrlab/svp.hpp"

namespace wrlab {

using Json = nlohmann::json;

// UndecidableError if entries live in different quadratic fields.
Json matrix_to_json(const ExactMatrix& m);
// Entries may also be bare integers or strings in QuadScalar::parse syntax,
// in which case the radicand field is optional. DomainError when malformed.
ExactMatrix matrix_from_json(const Json& j);
ExactMatrix read_matrix_file(const std::string& path);

// Exact string plus a 20-digit decimal.
Json exact_json(const QuadScalar& v);
Json svp_report_to_json(const SvpReport& r);

}  // namespace wrlab
