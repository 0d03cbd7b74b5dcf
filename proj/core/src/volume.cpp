#include "blades/volume.hpp"

#include <vector>

#include "blades/realify.hpp"

namespace blades {

namespace {

VolumeResult volume_of_real_list(std::span<const Vector> vs, const Tolerance& tol) {
  GramSchmidtResult gs = gram_schmidt(vs, InnerKind::RealPart, tol);
  VolumeResult out;
  out.heights = gs.heights;
  out.degenerate = gs.any_dependent();
  double v = 1.0;
  for (double h : gs.heights) v *= h;
  out.volume = v;
  Scalar v2 = Scalar::one(Field::Real, vs.front().backend());
  for (const Scalar& h2 : gs.heights_sq) v2 = v2 * h2;
  out.volume_sq = v2;
  return out;
}

}  // namespace

VolumeResult volume(std::span<const Vector> vs, const Tolerance& tol) {
  if (vs.empty()) throw dimension_error("volume needs at least one vector");
  if (vs.front().field() == Field::Real) return volume_of_real_list(vs, tol);
  std::vector<Vector> realified;
  realified.reserve(vs.size());
  for (const Vector& v : vs) realified.push_back(realify_vector(v));
  return volume_of_real_list(realified, tol);
}

VolumeResult volume_complex_span(std::span<const Vector> vs, const Tolerance& tol) {
  if (vs.empty()) throw dimension_error("volume_complex_span needs at least one vector");
  std::vector<Vector> doubled;
  doubled.reserve(2 * vs.size());
  for (const Vector& v : vs) {
    if (v.field() != Field::Complex) {
      throw tag_mismatch_error("volume_complex_span requires complex vectors");
    }
    doubled.push_back(v);
    doubled.push_back(complex_structure(v));
  }
  return volume(doubled, tol);
}

}  // namespace blades
