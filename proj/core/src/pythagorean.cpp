#include "blades/pythagorean.hpp"

namespace blades {

PythagoreanDecomposition decompose(std::span<const Vector> vs) {
  const Multivector blade = blade_from_vectors(vs);
  const bool complex_case = blade.field() == Field::Complex;

  PythagoreanDecomposition out;
  out.mode = complex_case ? PythagoreanMode::ComplexLinear : PythagoreanMode::RealSquared;
  out.total = complex_case ? blade.norm_sq().re() : blade.norm();
  for (const MultiIndex& index : all_multi_indices(blade.dim(), blade.grade())) {
    const double c = blade.coeff(index).abs();
    out.parts.emplace(index, complex_case ? c * c : c);
  }
  return out;
}

}  // namespace blades
