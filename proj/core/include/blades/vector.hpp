#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "blades/scalar.hpp"

namespace blades {

// Dense column vector over a Scalar field. Entries share one field/backend
// tag, checked at construction; values are immutable afterwards.
class Vector {
public:
  explicit Vector(std::vector<Scalar> entries);

  static Vector zero(std::size_t dim, Field f, Backend b);
  static Vector from_real(const std::vector<double>& xs);
  static Vector from_complex(const std::vector<std::complex<double>>& zs);
  static Vector from_real(std::vector<Rational> xs);
  static Vector from_complex(std::vector<GaussianRational> zs);

  std::size_t dim() const { return entries_.size(); }
  Field field() const { return field_; }
  Backend backend() const { return backend_; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  double norm() const;
  Scalar norm_sq() const;  // real-tagged, exact on the exact backend

  friend Vector operator+(const Vector& u, const Vector& v);
  friend Vector operator-(const Vector& u, const Vector& v);

private:
  std::vector<Scalar> entries_;
  Field field_;
  Backend backend_;
};

// Canonical Hermitian inner product, conjugate-linear in the first entry.
Scalar inner(const Vector& u, const Vector& v);

Vector scale(const Scalar& s, const Vector& v);

// e_i (1-based index) in the given ambient space.
Vector basis_vector(std::size_t dim, std::size_t index, Field f, Backend b);

bool approx_eq(const Vector& u, const Vector& v, const Tolerance& tol);

}  // namespace blades
