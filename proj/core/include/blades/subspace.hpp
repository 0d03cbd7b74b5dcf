#pragma once

#include <cstddef>
#include <vector>

#include "blades/matrix.hpp"
#include "blades/multivector.hpp"

namespace blades {

enum class SpanKind { RealSpan, ComplexSpan };

// A subspace given by a spanning list plus a cached orthonormal basis under
// the matching inner product. Three shapes arise:
//   - real span of real vectors: a subspace of R^m;
//   - real span of complex vectors: a real subspace of the underlying R^2n,
//     where the complex structure still acts (realified() is true);
//   - complex span of complex vectors: a complex subspace of C^n.
// Construction orthonormalizes, so only the float backend is supported.
class Subspace {
public:
  static Subspace real_span(std::vector<Vector> generators,
                            const Tolerance& tol = Tolerance::defaults());
  static Subspace complex_span(std::vector<Vector> generators,
                               const Tolerance& tol = Tolerance::defaults());

  SpanKind kind() const { return kind_; }
  bool realified() const { return kind_ == SpanKind::RealSpan && field_ == Field::Complex; }
  Field vector_field() const { return field_; }
  std::size_t vector_dim() const { return vector_dim_; }
  std::size_t dim() const { return onb_.size(); }
  std::size_t ambient_real_dim() const;

  const std::vector<Vector>& generators() const { return generators_; }
  const std::vector<Vector>& onb() const { return onb_; }

  // i*V: applies the complex structure to the generators. Realified spans
  // only.
  Subspace image_under_i() const;

  // Projection-residual membership test under the subspace's inner product.
  bool contains(const Vector& v, const Tolerance& tol = Tolerance::defaults()) const;

  // Blade of the orthonormal basis, built in the space where this span
  // lives: realified spans wedge the realified vectors in R^2n.
  Multivector onb_blade() const;

private:
  Subspace(SpanKind kind, std::vector<Vector> generators, const Tolerance& tol);

  SpanKind kind_;
  Field field_;
  std::size_t vector_dim_;
  std::vector<Vector> generators_;
  std::vector<Vector> onb_;
};

}  // namespace blades
