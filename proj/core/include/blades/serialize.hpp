#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blades/angles.hpp"
#include "blades/matrix.hpp"
#include "blades/multivector.hpp"
#include "blades/pythagorean.hpp"

namespace blades {

// Floats are rounded to 12 significant digits before serialization so that
// identical inputs always produce byte-identical JSON.
double round_12sig(double x);

// Scalars serialize as [re, im] number pairs (float backend) or
// ["p/q", "r/s"] string pairs (exact backend).
std::string to_json(const Scalar& s);
// Arrays of rows of scalar serializations.
std::string to_json(const Matrix& m);
// { "dim": n, "grade": p, "coeffs": { "1,3": <scalar>, ... } }
std::string to_json(const Multivector& b);
// Radians at full precision plus degrees rounded to 4 decimals.
std::string to_json(const AngleReport& r);
// { "mode": ..., "total": ..., "parts": [ { "I": "1,3", "value": ... } ] }
std::string to_json(const PythagoreanDecomposition& d);

Scalar scalar_from_json(const std::string& text, Field f, Backend b);
Matrix matrix_from_json(const std::string& text, Field f, Backend b);
Multivector multivector_from_json(const std::string& text, Field f, Backend b);

// On-disk vector-set schema: { "field": "real"|"complex", "dim": n,
// "vectors": [coordinate lists], "labels": [...] }. Real coordinates are
// numbers (or "p/q" strings); complex coordinates are [re, im] pairs.
struct VectorSetFile {
  Field field = Field::Real;
  std::size_t dim = 0;
  std::vector<Vector> vectors;
  std::vector<std::string> labels;  // empty when absent
};

// Parses and validates; number literals become exact rationals on the exact
// backend (every JSON double is one). Throws parse_error on malformed input.
VectorSetFile vector_set_from_json(const std::string& text, Backend backend);

}  // namespace blades
