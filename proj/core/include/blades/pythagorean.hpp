#pragma once

#include <map>
#include <span>

#include "blades/multivector.hpp"

namespace blades {

enum class PythagoreanMode { RealSquared, ComplexLinear };

// Volume of a parallelotope split over its orthogonal projections onto the
// coordinate subspaces [e_I]. Real lists satisfy total^2 = sum of parts^2
// with total = ||B||; complex lists satisfy total = sum of parts with
// total = ||B||^2, the volume of the doubled parallelotope. Parts carry an
// entry for every index set of the grade, zeros included.
struct PythagoreanDecomposition {
  PythagoreanMode mode = PythagoreanMode::RealSquared;
  double total = 0.0;
  std::map<MultiIndex, double> parts;
};

PythagoreanDecomposition decompose(std::span<const Vector> vs);

}  // namespace blades
