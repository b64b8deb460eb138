#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "reptile/algebra/algebraic_real.hpp"
#include "reptile/algebra/golden.hpp"
#include "reptile/algebra/linalg.hpp"
#include "reptile/fiedler/cos_matrix.hpp"
#include "reptile/fiedler/fiedler.hpp"
#include "reptile/hill/hill.hpp"
#include "reptile/simplex/simplex.hpp"

namespace reptile {

using Json = nlohmann::ordered_json;

/// Malformed input: a message plus an optional 1-based line and column in the source text.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses JSON text, reporting syntax errors with line and column.
Json parse_json_text(const std::string& text);

Json rational_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// {"minpoly": [c0, c1, ...], "interval": ["a", "b"]}; rationals are written as strings.
Json algebraic_json(const AlgebraicReal& x);
/// Accepts a minpoly object, a number, or a string in rational or radical shorthand ("sqrt(2)/2", "phi - 1").
AlgebraicReal algebraic_from_json(const Json& j);

Json golden_json(const GoldenNumber& x);
GoldenNumber golden_from_json(const Json& j);
/// {"terms": [[[e_s, e_t, e_u, e_lambda], a, b], ...]} for sum (a + b phi) s^e_s t^e_t u^e_u lambda^e_lambda.
Json golden_poly_json(const GoldenPoly& p);
GoldenPoly golden_poly_from_json(const Json& j);

/// {"dim", "mode": "exact" | "certified_float", "vertices", optional "metric", optional "radius"}.
Json simplex_json(const Simplex& s);
Simplex simplex_from_json(const Json& j);

/// {"dim": d, "cos": [[...], ...]} with the full symmetric matrix.
Json cos_matrix_json(const CosMatrix& m);
CosMatrix cos_matrix_from_json(const Json& j);

Json verdict_json(const RealizabilityVerdict& v);
Json subdivision_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);
Json reptile_report_json(const ReptileReport& r);
Json grow_result_json(const GrowResult& g);

}  // namespace reptile
