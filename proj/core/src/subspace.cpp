#include "blades/subspace.hpp"

#include <utility>

#include "blades/realify.hpp"

namespace blades {

Subspace::Subspace(SpanKind kind, std::vector<Vector> generators, const Tolerance& tol)
    : kind_(kind), generators_(std::move(generators)) {
  if (generators_.empty()) throw dimension_error("subspace needs at least one generator");
  field_ = generators_.front().field();
  vector_dim_ = generators_.front().dim();
  if (generators_.front().backend() != Backend::Float) {
    throw backend_error("subspaces support the float backend only");
  }
  if (kind_ == SpanKind::ComplexSpan && field_ != Field::Complex) {
    throw tag_mismatch_error("complex span requires complex vectors");
  }
  const InnerKind inner_kind =
      kind_ == SpanKind::ComplexSpan ? InnerKind::Hermitian : InnerKind::RealPart;
  onb_ = gram_schmidt(generators_, inner_kind, tol).independent();
  if (onb_.empty()) throw degenerate_error("generators span only the zero subspace");
}

Subspace Subspace::real_span(std::vector<Vector> generators, const Tolerance& tol) {
  return Subspace(SpanKind::RealSpan, std::move(generators), tol);
}

Subspace Subspace::complex_span(std::vector<Vector> generators, const Tolerance& tol) {
  return Subspace(SpanKind::ComplexSpan, std::move(generators), tol);
}

std::size_t Subspace::ambient_real_dim() const {
  return field_ == Field::Complex ? 2 * vector_dim_ : vector_dim_;
}

Subspace Subspace::image_under_i() const {
  if (!realified()) {
    throw tag_mismatch_error("image_under_i applies to real spans of complex vectors");
  }
  std::vector<Vector> rotated;
  rotated.reserve(onb_.size());
  for (const Vector& v : onb_) rotated.push_back(complex_structure(v));
  return Subspace(SpanKind::RealSpan, std::move(rotated), Tolerance::defaults());
}

bool Subspace::contains(const Vector& v, const Tolerance& tol) const {
  if (v.dim() != vector_dim_ || v.field() != field_) return false;
  const InnerKind inner_kind =
      kind_ == SpanKind::ComplexSpan ? InnerKind::Hermitian : InnerKind::RealPart;
  Vector residual = v;
  for (const Vector& u : onb_) {
    Scalar coeff = inner_of_kind(u, residual, inner_kind);
    if (field_ == Field::Complex) coeff = coeff.as_complex();
    residual = residual - scale(coeff, u);
  }
  return residual.norm() <= tol.abs_eps + tol.rel_eps * (1.0 + v.norm());
}

Multivector Subspace::onb_blade() const {
  if (kind_ == SpanKind::ComplexSpan || field_ == Field::Real) {
    return blade_from_vectors(onb_);
  }
  std::vector<Vector> realified;
  realified.reserve(onb_.size());
  for (const Vector& v : onb_) realified.push_back(realify_vector(v));
  return blade_from_vectors(realified);
}

}  // namespace blades
