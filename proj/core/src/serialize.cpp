#include "blades/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include <nlohmann/json.hpp>

namespace blades {

using ordered_json = nlohmann::ordered_json;

double round_12sig(double x) {
  if (x == 0.0) return 0.0;
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

double round_4dec(double x) { return round_12sig(std::round(x * 1e4) / 1e4); }

double to_degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

ordered_json scalar_to_value(const Scalar& s) {
  if (s.backend() == Backend::Float) {
    return ordered_json::array({round_12sig(s.re()), round_12sig(s.im())});
  }
  const GaussianRational& q = s.exact_value();
  return ordered_json::array({to_string(q.re), to_string(q.im)});
}

ordered_json matrix_to_value(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_value(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Scalar scalar_from_value(const ordered_json& v, Field f, Backend b) {
  if (!v.is_array() || v.size() != 2) throw parse_error("scalar must be a [re, im] pair");
  auto part = [&](const ordered_json& x) -> Rational {
    if (x.is_string()) return rational_from_string(x.get<std::string>());
    if (x.is_number()) return rational_from_double(x.get<double>());
    throw parse_error("scalar parts must be numbers or rational strings");
  };
  Rational re = part(v[0]);
  Rational im = part(v[1]);
  if (f == Field::Real && sgn(im) != 0) {
    throw parse_error("real scalar with nonzero imaginary part");
  }
  if (b == Backend::Exact) {
    return f == Field::Real ? Scalar::real(re) : Scalar::complex(re, im);
  }
  return f == Field::Real ? Scalar::real(re.get_d()) : Scalar::complex(re.get_d(), im.get_d());
}

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const Scalar& s) { return scalar_to_value(s).dump(); }

std::string to_json(const Matrix& m) { return matrix_to_value(m).dump(); }

std::string to_json(const Multivector& b) {
  ordered_json out;
  out["dim"] = b.dim();
  out["grade"] = b.grade();
  ordered_json coeffs = ordered_json::object();
  for (const auto& [index, value] : b.coeffs()) coeffs[index.key()] = scalar_to_value(value);
  out["coeffs"] = std::move(coeffs);
  return out.dump();
}

std::string to_json(const AngleReport& r) {
  ordered_json out;
  ordered_json rad = ordered_json::array();
  ordered_json deg = ordered_json::array();
  for (double theta : r.principal) {
    rad.push_back(round_12sig(theta));
    deg.push_back(round_4dec(to_degrees(theta)));
  }
  out["principal_rad"] = std::move(rad);
  out["principal_deg"] = std::move(deg);
  out["disjointness_rad"] = round_12sig(r.disjointness);
  out["disjointness_deg"] = round_4dec(to_degrees(r.disjointness));
  if (r.kahler) {
    out["kahler_rad"] = round_12sig(*r.kahler);
    out["kahler_deg"] = round_4dec(to_degrees(*r.kahler));
  }
  if (r.reality_index) out["reality_index"] = round_12sig(*r.reality_index);
  return out.dump();
}

std::string to_json(const PythagoreanDecomposition& d) {
  ordered_json out;
  out["mode"] = d.mode == PythagoreanMode::RealSquared ? "real_squared" : "complex_linear";
  out["total"] = round_12sig(d.total);
  ordered_json parts = ordered_json::array();
  for (const auto& [index, value] : d.parts) {
    ordered_json part;
    part["I"] = index.key();
    part["value"] = round_12sig(value);
    parts.push_back(std::move(part));
  }
  out["parts"] = std::move(parts);
  return out.dump();
}

Scalar scalar_from_json(const std::string& text, Field f, Backend b) {
  return scalar_from_value(parse_text(text), f, b);
}

Matrix matrix_from_json(const std::string& text, Field f, Backend b) {
  const ordered_json v = parse_text(text);
  if (!v.is_array() || v.empty()) throw parse_error("matrix must be a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : v) {
    if (!row.is_array() || row.empty()) throw parse_error("matrix rows must be nonempty arrays");
    std::vector<Scalar> out_row;
    out_row.reserve(row.size());
    for (const auto& cell : row) out_row.push_back(scalar_from_value(cell, f, b));
    rows.push_back(std::move(out_row));
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const dimension_error& e) {
    throw parse_error(e.what());
  }
}

Multivector multivector_from_json(const std::string& text, Field f, Backend b) {
  const ordered_json v = parse_text(text);
  if (!v.is_object() || !v.contains("dim") || !v.contains("grade") || !v.contains("coeffs")) {
    throw parse_error("multivector needs dim, grade and coeffs");
  }
  if (!v["dim"].is_number_unsigned() || !v["grade"].is_number_unsigned() ||
      !v["coeffs"].is_object()) {
    throw parse_error("malformed multivector");
  }
  const auto dim = v["dim"].get<std::size_t>();
  const auto grade = v["grade"].get<std::size_t>();
  std::map<MultiIndex, Scalar> coeffs;
  for (const auto& [key, value] : v["coeffs"].items()) {
    coeffs.emplace(MultiIndex::parse(key), scalar_from_value(value, f, b));
  }
  try {
    return Multivector(dim, grade, f, b, std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

VectorSetFile vector_set_from_json(const std::string& text, Backend backend) {
  const ordered_json v = parse_text(text);
  if (!v.is_object()) throw parse_error("vector set must be a JSON object");
  if (!v.contains("field") || !v["field"].is_string()) {
    throw parse_error("vector set needs a \"field\" of \"real\" or \"complex\"");
  }
  const std::string field_name = v["field"].get<std::string>();
  VectorSetFile out;
  if (field_name == "real") {
    out.field = Field::Real;
  } else if (field_name == "complex") {
    out.field = Field::Complex;
  } else {
    throw parse_error("unknown field: " + field_name);
  }
  if (!v.contains("dim") || !v["dim"].is_number_unsigned() || v["dim"].get<std::size_t>() == 0) {
    throw parse_error("vector set needs a positive \"dim\"");
  }
  out.dim = v["dim"].get<std::size_t>();
  if (!v.contains("vectors") || !v["vectors"].is_array() || v["vectors"].empty()) {
    throw parse_error("vector set needs a nonempty \"vectors\" array");
  }

  auto real_part = [&](const ordered_json& x) -> Rational {
    if (x.is_string()) return rational_from_string(x.get<std::string>());
    if (x.is_number()) return rational_from_double(x.get<double>());
    throw parse_error("coordinates must be numbers or rational strings");
  };

  for (const auto& coords : v["vectors"]) {
    if (!coords.is_array() || coords.size() != out.dim) {
      throw parse_error("every vector must list exactly dim coordinates");
    }
    std::vector<Scalar> entries;
    entries.reserve(out.dim);
    for (const auto& c : coords) {
      if (out.field == Field::Real) {
        if (c.is_array()) throw parse_error("pair coordinates require a complex field");
        Rational re = real_part(c);
        entries.push_back(backend == Backend::Exact ? Scalar::real(re)
                                                    : Scalar::real(re.get_d()));
      } else {
        if (!c.is_array() || c.size() != 2) {
          throw parse_error("complex coordinates must be [re, im] pairs");
        }
        Rational re = real_part(c[0]);
        Rational im = real_part(c[1]);
        entries.push_back(backend == Backend::Exact
                              ? Scalar::complex(re, im)
                              : Scalar::complex(re.get_d(), im.get_d()));
      }
    }
    out.vectors.emplace_back(std::move(entries));
  }

  if (v.contains("labels")) {
    if (!v["labels"].is_array() || v["labels"].size() != out.vectors.size()) {
      throw parse_error("labels must match the vector count");
    }
    for (const auto& label : v["labels"]) {
      if (!label.is_string()) throw parse_error("labels must be strings");
      out.labels.push_back(label.get<std::string>());
    }
  }
  return out;
}

}  // namespace blades
