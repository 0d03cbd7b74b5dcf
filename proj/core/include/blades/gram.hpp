#pragma once

#include <span>

#include "blades/matrix.hpp"

namespace blades {

struct GramResult {
  Matrix gram;    // p x p, Hermitian or symmetric depending on the kind
  Scalar gramian; // det(gram); real-tagged and nonnegative up to round-off
  InnerKind kind;
};

// Gram matrix of pairwise inner products of the chosen kind and its
// determinant. RealPart on complex vectors is the Gram matrix of the
// underlying real space.
GramResult gram(std::span<const Vector> vs, InnerKind kind);

}  // namespace blades
