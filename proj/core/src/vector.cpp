#include "blades/vector.hpp"

#include <cmath>
#include <utility>

namespace blades {

namespace {

void require_same_shape(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) throw dimension_error("vector dimensions differ");
  if (u.field() != v.field() || u.backend() != v.backend()) {
    throw tag_mismatch_error("vector operands use different tags");
  }
}

}  // namespace

Vector::Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw dimension_error("vector must have positive dimension");
  field_ = entries_.front().field();
  backend_ = entries_.front().backend();
  for (const Scalar& s : entries_) {
    if (s.field() != field_ || s.backend() != backend_) {
      throw tag_mismatch_error("vector entries use mixed tags");
    }
  }
}

Vector Vector::zero(std::size_t dim, Field f, Backend b) {
  return Vector(std::vector<Scalar>(dim, Scalar::zero(f, b)));
}

Vector Vector::from_real(const std::vector<double>& xs) {
  std::vector<Scalar> entries;
  entries.reserve(xs.size());
  for (double x : xs) entries.push_back(Scalar::real(x));
  return Vector(std::move(entries));
}

Vector Vector::from_complex(const std::vector<std::complex<double>>& zs) {
  std::vector<Scalar> entries;
  entries.reserve(zs.size());
  for (auto z : zs) entries.push_back(Scalar::complex(z));
  return Vector(std::move(entries));
}

Vector Vector::from_real(std::vector<Rational> xs) {
  std::vector<Scalar> entries;
  entries.reserve(xs.size());
  for (auto& x : xs) entries.push_back(Scalar::real(std::move(x)));
  return Vector(std::move(entries));
}

Vector Vector::from_complex(std::vector<GaussianRational> zs) {
  std::vector<Scalar> entries;
  entries.reserve(zs.size());
  for (auto& z : zs) entries.push_back(Scalar::complex(std::move(z.re), std::move(z.im)));
  return Vector(std::move(entries));
}

double Vector::norm() const { return std::sqrt(norm_sq().re()); }

Scalar Vector::norm_sq() const {
  Scalar acc = Scalar::zero(Field::Real, backend_);
  for (const Scalar& s : entries_) acc = acc + s.abs2();
  return acc;
}

Vector operator+(const Vector& u, const Vector& v) {
  require_same_shape(u, v);
  std::vector<Scalar> entries;
  entries.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) entries.push_back(u[i] + v[i]);
  return Vector(std::move(entries));
}

Vector operator-(const Vector& u, const Vector& v) {
  require_same_shape(u, v);
  std::vector<Scalar> entries;
  entries.reserve(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) entries.push_back(u[i] - v[i]);
  return Vector(std::move(entries));
}

Scalar inner(const Vector& u, const Vector& v) {
  require_same_shape(u, v);
  Scalar acc = Scalar::zero(u.field(), u.backend());
  for (std::size_t i = 0; i < u.dim(); ++i) acc = acc + u[i].conj() * v[i];
  return acc;
}

Vector scale(const Scalar& s, const Vector& v) {
  std::vector<Scalar> entries;
  entries.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) entries.push_back(s * v[i]);
  return Vector(std::move(entries));
}

Vector basis_vector(std::size_t dim, std::size_t index, Field f, Backend b) {
  if (index < 1 || index > dim) throw dimension_error("basis index out of range");
  std::vector<Scalar> entries(dim, Scalar::zero(f, b));
  entries[index - 1] = Scalar::one(f, b);
  return Vector(std::move(entries));
}

bool approx_eq(const Vector& u, const Vector& v, const Tolerance& tol) {
  if (u.dim() != v.dim()) return false;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (!approx_eq(u[i], v[i], tol)) return false;
  }
  return true;
}

}  // namespace blades
