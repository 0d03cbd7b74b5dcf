#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "blades/scalar.hpp"
#include "blades/vector.hpp"

namespace blades {

// Dense row-major matrix over a Scalar field with homogeneous tags.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(std::span<const Vector> columns);
  static Matrix identity(std::size_t n, Field f, Backend b);
  static Matrix zero(std::size_t rows, std::size_t cols, Field f, Backend b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  Backend backend() const { return backend_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Vector apply(const Vector& v) const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
  Field field_;
  Backend backend_;
};

// Determinant of a square matrix. Float backend: partial-pivot elimination.
// Exact backend: fraction-free (Bareiss) elimination, no rounding.
Scalar det(const Matrix& m);

Matrix conj_transpose(const Matrix& m);

// N = [[A, -B], [B, A]] for real square A, B of equal size; the real block
// matrix whose determinant equals |det(A + iB)|^2.
Matrix block_embed(const Matrix& a, const Matrix& b);

enum class InnerKind { Hermitian, RealPart };

// Pairwise inner product of the chosen kind; RealPart takes Re<u,v> and is
// the inner product of the underlying real space.
Scalar inner_of_kind(const Vector& u, const Vector& v, InnerKind kind);

struct GramSchmidtResult {
  // One slot per input vector. Float backend: orthonormal vectors (zero
  // vector in dependent slots). Exact backend: unnormalized orthogonal
  // residuals, since normalization needs square roots.
  std::vector<Vector> basis;
  std::vector<double> heights;    // residual norms, double embedding
  std::vector<Scalar> heights_sq; // real-tagged; exact on the exact backend
  std::vector<bool> dependent;

  std::size_t rank() const;
  std::vector<Vector> independent() const;
  bool any_dependent() const;
};

// Sequential orthonormalization. heights[k] is the norm of the component of
// vs[k] orthogonal (in the chosen inner product) to the span of the previous
// vectors; a dependent vector yields height 0 and a flag, not an error.
// RealPart coefficients are real, so residuals stay inside the real span.
GramSchmidtResult gram_schmidt(std::span<const Vector> vs, InnerKind kind,
                               const Tolerance& tol = Tolerance::defaults());

// Nonnegative singular values in descending order, length min(rows, cols).
// Their squares are eigenvalues of M^dagger M. Float backend only.
std::vector<double> singular_values(const Matrix& m);

}  // namespace blades
