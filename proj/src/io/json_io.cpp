#include "mvse/io/json_io.hpp"

#include <sstream>

#include "mvse/core/errors.hpp"

namespace mvse::io {

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump(), 10);
  throw ParseError("io", "rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("io", "expected an array of rationals");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r) data.push_back(to_json(m.row_vector(r)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("data")) throw ParseError("io", "matrix JSON needs a \"data\" array");
  const auto& data = j.at("data");
  if (!data.is_array()) throw ParseError("io", "matrix \"data\" must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : data) rows.push_back(vector_from_json(r));
  const Index nrows = rows.size();
  const Index ncols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != ncols) throw ShapeError("io", "matrix rows have different lengths");
  }
  if (j.contains("rows") && j.at("rows").get<Index>() != nrows) {
    throw ShapeError("io", "declared row count does not match the data");
  }
  if (j.contains("cols") && j.at("cols").get<Index>() != ncols && nrows > 0) {
    throw ShapeError("io", "declared column count does not match the data");
  }
  if (nrows == 0 && j.contains("cols")) return Matrix(0, j.at("cols").get<Index>());
  return Matrix::from_rows(rows);
}

Matrix matrix_from_csv(std::string_view text) {
  std::vector<Vector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    Vector row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Json zonotope_to_json(const Zonotope& z) {
  Json gens = Json::array();
  for (const auto& g : z.generators()) gens.push_back(to_json(g));
  return Json{{"d", z.dim()}, {"generators", std::move(gens)}};
}

Zonotope zonotope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators")) throw ParseError("io", "zonotope JSON needs \"generators\"");
  std::vector<Vector> gens;
  for (const auto& g : j.at("generators")) gens.push_back(vector_from_json(g));
  Index d = 0;
  if (j.contains("d")) {
    d = j.at("d").get<Index>();
  } else if (!gens.empty()) {
    d = gens.front().size();
  }
  return Zonotope(d, std::move(gens));
}

Json lattice_to_json(const Lattice& l) {
  return Json{{"basis", matrix_to_json(l.basis())}, {"determinant", to_json(l.determinant())}};
}

Lattice lattice_from_json(const Json& j) {
  if (j.is_object() && j.contains("basis")) return Lattice::make(matrix_from_json(j.at("basis")));
  return Lattice::make(matrix_from_json(j));
}

Json subset_to_json(const Subset& s) {
  Json out = Json::array();
  for (Index i : s) out.push_back(i + 1);
  return out;
}

Subset subset_from_json(const Json& j) {
  Subset s;
  for (const auto& x : j) {
    const auto v = x.get<long long>();
    if (v < 1) throw ParseError("io", "indices are 1-based");
    s.push_back(static_cast<Index>(v - 1));
  }
  return s;
}

Json plucker_to_json(const PluckerVector& p) {
  Json subs = Json::array();
  for (const auto& s : subsets(p.m, p.d)) subs.push_back(subset_to_json(s));
  return Json{{"m", p.m}, {"d", p.d}, {"subsets", std::move(subs)}, {"values", to_json(p.values)}};
}

Json witness_to_json(const TUWitness& w) {
  return Json{{"C", matrix_to_json(w.basis_change)},
              {"a", to_json(w.generator_scales)},
              {"tau", matrix_to_json(w.tu_matrix)},
              {"generators", zonotope_to_json(w.canonical)}};
}

Json refusal_to_json(const Refusal& r) {
  Json out{{"reason", r.reason}};
  if (r.entry) out["entry"] = Json::array({r.entry->first + 1, r.entry->second + 1});
  if (r.violation) {
    out["violation"] = Json{{"rows", subset_to_json(r.violation->rows)},
                            {"cols", subset_to_json(r.violation->cols)},
                            {"det", to_json(r.violation->det)}};
  }
  return out;
}

Json gomory_to_json(const GomoryCertificate& c, const Matrix& d) {
  return Json{{"x_hat", subset_to_json(c.x_hat)},
              {"p_hat", subset_to_json(c.p_hat)},
              {"minors", to_json(gomory_minors(d, c))}};
}

Json classification_to_json(const HexagonClassification& c) {
  Json verts = Json::array();
  for (const auto& v : c.ordered_vertices) verts.push_back(to_json(v));
  return Json{{"kind", to_string(c.kind)}, {"vertices", std::move(verts)}};
}

Json hexagon_report_to_json(const HexagonReport& r) {
  Json bc = Json::array();
  for (const auto& [b, c] : r.b_c_rows) bc.push_back(Json::array({to_json(b), to_json(c)}));
  return Json{{"circuit", subset_to_json(r.circuit)},
              {"basis_rows", subset_to_json(r.basis_rows)},
              {"circuit_row", r.circuit_row + 1},
              {"circuit_coefficients", to_json(r.circuit_coefficients)},
              {"row_order", subset_to_json(r.row_order)},
              {"normalized_matrix", matrix_to_json(r.normalized_matrix)},
              {"basis_pair", Json::array({to_json(r.basis_pair.first), to_json(r.basis_pair.second)})},
              {"b_c_rows", std::move(bc)},
              {"checks", Json{{"abs_b_le_1", r.b_bounded},
                              {"abs_c_le_1", r.c_bounded},
                              {"abs_b_minus_c_le_1", r.difference_bounded}}},
              {"ball", classification_to_json(r.ball)}};
}

Json verdict_to_json(const TileVerdict& v) {
  Json out{{"passed", v.passed},
           {"samples_tested", v.samples_tested},
           {"discarded", v.discarded},
           {"trace_digest", v.trace_digest}};
  if (v.failure_point) {
    out["failure_point"] = to_json(*v.failure_point);
    out["failure_count"] = v.failure_count;
  }
  return out;
}

Json bm_to_json(const BMBound& b) {
  return Json{{"upper_bound", to_json(b.upper_bound)},
              {"exact", b.exact},
              {"directions", b.directions},
              {"witnesses", Json{{"max_ratio", to_json(b.max_ratio)},
                                 {"max_ratio_direction", to_json(b.max_ratio_direction)},
                                 {"min_ratio", to_json(b.min_ratio)},
                                 {"min_ratio_direction", to_json(b.min_ratio_direction)}}}};
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("io", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace mvse::io
