#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "blades/angles.hpp"
#include "blades/gram.hpp"
#include "blades/matrix.hpp"
#include "blades/multivector.hpp"
#include "blades/pythagorean.hpp"
#include "blades/realify.hpp"
#include "blades/scalar.hpp"
#include "blades/serialize.hpp"
#include "blades/subspace.hpp"
#include "blades/vector.hpp"
#include "blades/volume.hpp"

namespace testsupport {

using namespace blades;

inline bool close(double a, double b, double rel = 1e-9, double abs = 1e-12) {
  return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
}

// Deterministic generator for property tests; entries live in [-2, 2] and
// rational entries use small denominators so exact runs stay fast.
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  Rational rational() {
    const int den = uniform_int(1, 8);
    const int num = uniform_int(-2 * den, 2 * den);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Scalar scalar(Field f, Backend b) {
    if (b == Backend::Exact) {
      return f == Field::Real ? Scalar::real(rational()) : Scalar::complex(rational(), rational());
    }
    return f == Field::Real ? Scalar::real(uniform(-2.0, 2.0))
                            : Scalar::complex(uniform(-2.0, 2.0), uniform(-2.0, 2.0));
  }

  Vector vector(std::size_t dim, Field f, Backend b) {
    std::vector<Scalar> entries;
    entries.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) entries.push_back(scalar(f, b));
    return Vector(std::move(entries));
  }

  std::vector<Vector> vectors(std::size_t count, std::size_t dim, Field f, Backend b) {
    std::vector<Vector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(vector(dim, f, b));
    return out;
  }

  Matrix matrix(std::size_t rows, std::size_t cols, Field f, Backend b) {
    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(scalar(f, b));
    return Matrix(rows, cols, std::move(entries));
  }
};

// Independent determinant oracle: signed permutation expansion. Exponential,
// for small instances only.
inline Scalar det_permutation_oracle(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Scalar acc = Scalar::zero(m.field(), m.backend());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Scalar term = Scalar::one(m.field(), m.backend());
    for (std::size_t i = 0; i < n; ++i) term = term * m.at(i, perm[i]);
    acc = inversions % 2 == 0 ? acc + term : acc - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// float-backend copy of an exact value, same field
inline Scalar embed(const Scalar& s) {
  if (s.backend() == Backend::Float) return s;
  return s.field() == Field::Real ? Scalar::real(s.re()) : Scalar::complex(s.re(), s.im());
}

inline Vector embed(const Vector& v) {
  std::vector<Scalar> entries;
  entries.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) entries.push_back(embed(v[i]));
  return Vector(std::move(entries));
}

inline std::vector<Vector> embed(const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  out.reserve(vs.size());
  for (const Vector& v : vs) out.push_back(embed(v));
  return out;
}

inline Matrix embed(const Matrix& m) {
  std::vector<Scalar> entries;
  entries.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(embed(m.at(i, j)));
  }
  return Matrix(m.rows(), m.cols(), std::move(entries));
}

// --- shared fixtures -------------------------------------------------------

// (1+i, 0) and (1, 2i): a nearly totally real pair in C^2.
inline std::vector<Vector> nearly_real_pair(Backend b = Backend::Float) {
  if (b == Backend::Exact) {
    return {Vector::from_complex({GaussianRational{1, 1}, GaussianRational{0, 0}}),
            Vector::from_complex({GaussianRational{1, 0}, GaussianRational{0, 2}})};
  }
  return {Vector::from_complex({{1.0, 1.0}, {0.0, 0.0}}),
          Vector::from_complex({{1.0, 0.0}, {0.0, 2.0}})};
}

// (sqrt(2), 0) and (-i, 2): same real span as nearly_real_pair vector-wise
// rotated within complex lines, with positive real determinant.
inline std::vector<Vector> canonical_orientation_pair() {
  return {Vector::from_complex({{std::sqrt(2.0), 0.0}, {0.0, 0.0}}),
          Vector::from_complex({{0.0, -1.0}, {2.0, 0.0}})};
}

// 5 and 5i in C^1: complex-dependent, real span is the whole plane.
inline std::vector<Vector> holomorphic_pair(Backend b = Backend::Float) {
  if (b == Backend::Exact) {
    return {Vector::from_complex({GaussianRational{5, 0}}),
            Vector::from_complex({GaussianRational{0, 5}})};
  }
  return {Vector::from_complex({{5.0, 0.0}}), Vector::from_complex({{0.0, 5.0}})};
}

// (3, 0) and (0, 2i): spans a totally real plane in C^2.
inline std::vector<Vector> totally_real_pair(Backend b = Backend::Float) {
  if (b == Backend::Exact) {
    return {Vector::from_complex({GaussianRational{3, 0}, GaussianRational{0, 0}}),
            Vector::from_complex({GaussianRational{0, 0}, GaussianRational{0, 2}})};
  }
  return {Vector::from_complex({{3.0, 0.0}, {0.0, 0.0}}),
          Vector::from_complex({{0.0, 0.0}, {0.0, 2.0}})};
}

// u = (2, 0) and v = (4i, 3): demonstrates how rotation inside complex lines
// changes parallelotope heights.
inline std::vector<Vector> height_demo_pair(Backend b = Backend::Float) {
  if (b == Backend::Exact) {
    return {Vector::from_complex({GaussianRational{2, 0}, GaussianRational{0, 0}}),
            Vector::from_complex({GaussianRational{0, 4}, GaussianRational{3, 0}})};
  }
  return {Vector::from_complex({{2.0, 0.0}, {0.0, 0.0}}),
          Vector::from_complex({{0.0, 4.0}, {3.0, 0.0}})};
}

}  // namespace testsupport
