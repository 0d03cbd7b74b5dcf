#pragma once

#include <span>
#include <vector>

#include "blades/matrix.hpp"

namespace blades {

struct VolumeResult {
  // Product of the heights. On the exact backend this and `heights` are
  // double embeddings; square roots never touch exact arithmetic.
  double volume = 0.0;
  // Product of the squared heights; exact on the exact backend.
  Scalar volume_sq = Scalar::real(0.0);
  std::vector<double> heights;
  bool degenerate = false;
};

// Inductive parallelotope volume: V(v1) = ||v1||, then each further vector
// contributes the height of its component orthogonal (in the real inner
// product) to the span of the previous ones. Complex inputs are realified
// first. Computed from heights, not from a Gramian, so the Gramian identity
// stays a genuine cross-check.
VolumeResult volume(std::span<const Vector> vs, const Tolerance& tol = Tolerance::defaults());

// Volume of the parallelotope spanned by (v1, i*v1, ..., vp, i*vp) in the
// underlying real space. Complex input only.
VolumeResult volume_complex_span(std::span<const Vector> vs,
                                 const Tolerance& tol = Tolerance::defaults());

}  // namespace blades
