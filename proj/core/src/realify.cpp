#include "blades/realify.hpp"

#include <utility>
#include <vector>

namespace blades {

Vector realify_vector(const Vector& v) {
  if (v.field() != Field::Complex) {
    throw tag_mismatch_error("realify_vector requires a complex vector");
  }
  std::vector<Scalar> entries;
  entries.reserve(2 * v.dim());
  if (v.backend() == Backend::Float) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      entries.push_back(Scalar::real(v[i].re()));
      entries.push_back(Scalar::real(v[i].im()));
    }
  } else {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      const GaussianRational& z = v[i].exact_value();
      entries.push_back(Scalar::real(z.re));
      entries.push_back(Scalar::real(z.im));
    }
  }
  return Vector(std::move(entries));
}

Vector complex_structure(const Vector& v) {
  if (v.field() != Field::Complex) {
    throw tag_mismatch_error("complex_structure requires a complex vector");
  }
  const Scalar i_unit = v.backend() == Backend::Float
                            ? Scalar::complex(0.0, 1.0)
                            : Scalar::complex(Rational(0), Rational(1));
  return scale(i_unit, v);
}

Scalar real_inner(const Vector& u, const Vector& v) {
  return inner_of_kind(u, v, InnerKind::RealPart);
}

Matrix build_m_real(std::span<const Vector> vs) {
  if (vs.empty()) throw dimension_error("build_m_real needs at least one vector");
  std::vector<Vector> columns;
  columns.reserve(vs.size());
  for (const Vector& v : vs) columns.push_back(realify_vector(v));
  return Matrix::from_columns(columns);
}

}  // namespace blades
