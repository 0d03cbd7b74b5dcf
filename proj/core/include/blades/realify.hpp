#pragma once

#include <span>

#include "blades/matrix.hpp"
#include "blades/vector.hpp"

namespace blades {

// Dictionary between C^n and the underlying R^2n. The layout is fixed to the
// interleaved order (x1, y1, ..., xn, yn); determinant signs depend on it.

// (x1 + i*y1, ...) -> (x1, y1, ...); norm-preserving. Complex input only.
Vector realify_vector(const Vector& v);

// i*v, the complex structure: a rotation by pi/2 in every complex line.
Vector complex_structure(const Vector& v);

// Re<u,v>, the inner product of the underlying real space; symmetric, and
// equal to the dot product of the realifications.
Scalar real_inner(const Vector& u, const Vector& v);

// The 2n x p real matrix whose column j is realify_vector(vs[j]).
Matrix build_m_real(std::span<const Vector> vs);

}  // namespace blades
