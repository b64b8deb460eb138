#include "reptile/io/json.hpp"

#include <cmath>

#include "reptile/io/radical.hpp"

namespace reptile {

InputError::InputError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                                  : message),
      line_(line),
      column_(column) {}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw InputError("invalid JSON: " + what, line, column);
  }
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  bad("expected an integer, got " + j.dump());
}

Json rat_vector_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  RatVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace

Json rational_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      bad("malformed rational " + j.dump());
    }
  }
  if (j.is_number_float()) return Rational(j.get<double>());
  bad("expected a rational, got " + j.dump());
}

Json algebraic_json(const AlgebraicReal& x) {
  Json poly = Json::array();
  for (const auto& c : x.minpoly().coefficients()) poly.push_back(integer_json(c));
  return Json{{"minpoly", poly}, {"interval", Json::array({rational_json(x.interval().lo), rational_json(x.interval().hi)})}};
}

AlgebraicReal algebraic_from_json(const Json& j) {
  if (j.is_number_integer()) return AlgebraicReal(Rational(j.get<long>()));
  if (j.is_number_float()) bad("floating-point entries are not exact; write them as strings such as \"0.25\"");
  if (j.is_string()) return parse_radical(j.get<std::string>());
  if (j.is_object()) {
    std::vector<Integer> coeffs;
    for (const auto& c : field(j, "minpoly")) coeffs.push_back(integer_from_json(c));
    const Json& iv = field(j, "interval");
    if (!iv.is_array() || iv.size() != 2) bad("interval must be [lo, hi]");
    const Interval interval{rational_from_json(iv[0]), rational_from_json(iv[1])};
    if (interval.lo > interval.hi) bad("interval endpoints out of order");
    try {
      return AlgebraicReal::from_polynomial_root(IntPolynomial(coeffs), interval);
    } catch (const std::exception& e) {
      bad(std::string("invalid algebraic number: ") + e.what());
    }
  }
  bad("expected a number, a radical expression or a minpoly object, got " + j.dump());
}

Json golden_json(const GoldenNumber& x) { return Json::array({rational_json(x.a), rational_json(x.b)}); }

GoldenNumber golden_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("golden number must be [a, b]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json golden_poly_json(const GoldenPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back(Json::array({Json(m), rational_json(c.a), rational_json(c.b)}));
  return Json{{"terms", terms}};
}

GoldenPoly golden_poly_from_json(const Json& j) {
  GoldenPoly out;
  for (const auto& term : field(j, "terms")) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_array() || term[0].size() != GoldenPoly::kVars)
      bad("malformed polynomial term " + term.dump());
    GoldenPoly mono(GoldenNumber(rational_from_json(term[1]), rational_from_json(term[2])));
    for (int v = 0; v < GoldenPoly::kVars; ++v)
      mono = mono * pow(GoldenPoly::var(static_cast<GoldenPoly::Var>(v)), term[0][static_cast<std::size_t>(v)].get<int>());
    out = out + mono;
  }
  return out;
}

Json simplex_json(const Simplex& s) {
  Json out{{"dim", s.dim()}};
  if (s.is_exact()) {
    out["mode"] = "exact";
    Json verts = Json::array();
    for (const auto& v : s.vertices()) verts.push_back(rat_vector_json(v));
    out["vertices"] = verts;
    if (s.metric()) {
      Json rows = Json::array();
      for (const auto& row : *s.metric()) rows.push_back(rat_vector_json(row));
      out["metric"] = rows;
    }
  } else {
    out["mode"] = "certified_float";
    out["vertices"] = s.approx_vertices();
    out["radius"] = s.radius();
  }
  return out;
}

Simplex simplex_from_json(const Json& j) {
  const std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : "exact";
  const Json& verts = field(j, "vertices");
  if (!verts.is_array()) bad("vertices must be an array");
  Simplex result = [&] {
    if (mode == "exact") {
      std::vector<RatVector> v;
      for (const auto& p : verts) v.push_back(rat_vector_from_json(p));
      std::optional<RatMatrix> metric;
      if (j.contains("metric")) {
        RatMatrix m;
        for (const auto& row : j.at("metric")) m.push_back(rat_vector_from_json(row));
        metric = m;
      }
      return Simplex::exact(v, metric);
    }
    if (mode == "certified_float") {
      std::vector<std::vector<double>> v;
      for (const auto& p : verts) {
        std::vector<double> row;
        for (const auto& x : p) {
          if (!x.is_number()) bad("float vertices must be numbers");
          row.push_back(x.get<double>());
        }
        v.push_back(row);
      }
      return Simplex::certified(v, j.contains("radius") ? j.at("radius").get<double>() : 0.0);
    }
    bad("unknown simplex mode \"" + mode + "\"");
  }();
  if (j.contains("dim") && j.at("dim").get<int>() != result.dim()) bad("dim does not match the vertices");
  return result;
}

Json cos_matrix_json(const CosMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.is_rational() ? rational_json(*x.rational()) : algebraic_json(x));
    rows.push_back(r);
  }
  return Json{{"dim", m.dim}, {"cos", rows}};
}

CosMatrix cos_matrix_from_json(const Json& j) {
  CosMatrix m;
  m.dim = field(j, "dim").get<int>();
  const Json& rows = field(j, "cos");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(m.dim + 1))
    bad("cos must have dim + 1 rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) bad("cos must be a square matrix");
    std::vector<AlgebraicReal> r;
    for (const auto& x : row) r.push_back(algebraic_from_json(x));
    m.entries.push_back(r);
  }
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return m;
}

Json verdict_json(const RealizabilityVerdict& v) {
  Json out{{"valid", v.valid}, {"field", v.field}, {"failure", to_string(v.failure)}, {"detail", v.detail}};
  out["char_poly"] = v.char_poly;
  if (!v.surd_kernel.empty()) {
    Json k = Json::array();
    for (const auto& z : v.surd_kernel) k.push_back(z.to_string());
    out["kernel"] = k;
  } else if (!v.kernel.empty()) {
    Json k = Json::array();
    for (const auto& z : v.kernel) k.push_back(z.is_rational() ? rational_json(*z.rational()) : algebraic_json(z));
    out["kernel"] = k;
  }
  if (!v.kernel_approx.empty()) out["kernel_normalized"] = v.kernel_approx;
  return out;
}

Json subdivision_json(const Subdivision& s) {
  Json pieces = Json::array();
  for (const auto& p : s.pieces) pieces.push_back(simplex_json(p));
  Json out{{"m", s.m}, {"ratio", rational_json(s.ratio)}, {"parent", simplex_json(s.parent)}, {"pieces", pieces}};
  if (!s.cells.empty()) {
    Json cells = Json::array();
    for (const auto& c : s.cells) cells.push_back(Json{{"offset", c.offset}, {"order", c.order}});
    out["cells"] = cells;
  }
  return out;
}

Subdivision subdivision_from_json(const Json& j) {
  Subdivision s{simplex_from_json(field(j, "parent")), {}, field(j, "m").get<int>(), Rational(0), {}};
  if (s.m < 2) bad("m must be at least 2");
  s.ratio = j.contains("ratio") ? rational_from_json(j.at("ratio")) : make_rational(1, s.m);
  for (const auto& p : field(j, "pieces")) s.pieces.push_back(simplex_from_json(p));
  if (j.contains("cells"))
    for (const auto& c : j.at("cells"))
      s.cells.push_back({c.at("offset").get<std::vector<int>>(), c.at("order").get<std::vector<int>>()});
  return s;
}

namespace {

Json check_json(const ReptileCheck& c) {
  Json out{{"ok", c.ok}, {"detail", c.detail}};
  if (!c.witness.empty()) out["witness"] = c.witness;
  return out;
}

}  // namespace

Json reptile_report_json(const ReptileReport& r) {
  Json out{{"all_ok", r.all_ok()},
           {"exact", r.exact},
           {"pieces", r.pieces},
           {"volume", check_json(r.volume)},
           {"similarity", check_json(r.similarity)},
           {"congruence", check_json(r.congruence)},
           {"disjointness", check_json(r.disjointness)},
           {"union", check_json(r.union_cover)},
           {"measured_ratio", r.measured_ratio},
           {"chirality", Json{{"proper", r.proper}, {"mirrored", r.mirrored}}},
           {"separation", Json{{"box", r.separated_by_box}, {"facet", r.separated_by_facet}, {"clipping", r.separated_by_clipping}}}};
  if (!r.overlap_point.empty()) out["overlap_point"] = r.overlap_point;
  return out;
}

Json grow_result_json(const GrowResult& g) {
  Json out{{"generations", g.generations},
           {"m", g.m},
           {"cells", g.cells},
           {"truncated", g.truncated},
           {"volume_ok", g.volume_ok},
           {"adjacency", Json{{"shared_facets", g.shared_facets}, {"boundary_facets", g.boundary_facets}}},
           {"sampled_disjointness", Json{{"pairs", g.sampled_pairs}, {"ok", g.sampled_disjoint}, {"sampled", true}}}};
  if (!g.failing_pair.empty()) out["sampled_disjointness"]["failing_pair"] = g.failing_pair;
  return out;
}

}  // namespace reptile
