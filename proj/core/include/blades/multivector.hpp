#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blades/matrix.hpp"

namespace blades {

// Strictly increasing 1-based index list naming a basis element e_I of the
// exterior power.
class MultiIndex {
public:
  explicit MultiIndex(std::vector<int> indices);

  std::size_t grade() const { return indices_.size(); }
  int operator[](std::size_t k) const { return indices_[k]; }
  const std::vector<int>& indices() const { return indices_; }
  bool contains(int i) const;

  std::string key() const;  // "1,3" — comma-joined ascending
  static MultiIndex parse(const std::string& key);

  auto operator<=>(const MultiIndex&) const = default;

private:
  std::vector<int> indices_;
};

// All strictly increasing index lists of the given grade in 1..dim, in
// lexicographic order.
std::vector<MultiIndex> all_multi_indices(std::size_t dim, std::size_t grade);

// Grade-p element of the exterior power over R^dim or C^dim, stored sparsely
// on the orthonormal e_I basis. Exact zeros are never stored, so the zero
// multivector is canonical. Immutable.
class Multivector {
public:
  Multivector(std::size_t dim, std::size_t grade, Field f, Backend b);
  Multivector(std::size_t dim, std::size_t grade, Field f, Backend b,
              std::map<MultiIndex, Scalar> coeffs);

  std::size_t dim() const { return dim_; }
  std::size_t grade() const { return grade_; }
  Field field() const { return field_; }
  Backend backend() const { return backend_; }
  const std::map<MultiIndex, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(const MultiIndex& I) const;  // zero when absent

  double norm() const;
  Scalar norm_sq() const;  // real-tagged; exact on the exact backend
  bool is_zero() const;    // no stored coefficients

  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Scalar& s, const Multivector& a);

private:
  std::size_t dim_;
  std::size_t grade_;
  Field field_;
  Backend backend_;
  std::map<MultiIndex, Scalar> coeffs_;
};

// v1 ^ ... ^ vp. Coefficient at I is the minor determinant of M(vs) on rows
// I; the result is zero exactly when the vectors are linearly dependent.
// C-linear for complex vectors, R-linear for real ones.
Multivector blade_from_vectors(std::span<const Vector> vs);

// Graded exterior product: bilinear, associative, and
// wedge(A,B) = (-1)^(pq) wedge(B,A). A grade sum above dim gives the zero
// multivector of that grade.
Multivector wedge(const Multivector& a, const Multivector& b);

// The component of B along e_I, i.e. its orthogonal projection onto the
// coordinate subspace of I.
Multivector coordinate_component(const Multivector& b, const MultiIndex& I);

// <A,B> = sum conj(a_I) b_I over the shared basis.
Scalar mv_inner(const Multivector& a, const Multivector& b);

// The phase lambda in blade(basis_b) = lambda * blade(basis_a), in (-pi, pi].
// Real bases give 0 or pi (the sign of the change of basis). Throws
// subspace_error when the lists span different subspaces and
// degenerate_error when either list is dependent.
double orientation_phase(std::span<const Vector> basis_a, std::span<const Vector> basis_b,
                         const Tolerance& tol = Tolerance::defaults());

struct DetInterpretation {
  Scalar det;                   // the determinant itself
  double modulus = 0.0;         // |det|
  std::optional<double> phase;  // arg det in (-pi, pi]; absent when det = 0
  // Scaling factor of top-dimensional volumes in the underlying real space:
  // |det| for a real matrix (n-volumes), |det|^2 for a complex one
  // (2n-volumes).
  double volume_scale = 0.0;
};

DetInterpretation det_interpret(const Matrix& m,
                                const Tolerance& tol = Tolerance::defaults());

}  // namespace blades
