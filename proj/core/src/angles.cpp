#include "blades/angles.hpp"

#include <algorithm>
#include <cmath>

#include "blades/gram.hpp"
#include "blades/realify.hpp"
#include "blades/volume.hpp"

namespace blades {

namespace {

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void require_compatible(const Subspace& v, const Subspace& w) {
  if (v.kind() != w.kind() || v.vector_field() != w.vector_field()) {
    throw tag_mismatch_error("subspaces live in different kinds of span");
  }
  if (v.vector_dim() != w.vector_dim()) {
    throw dimension_error("subspaces live in different ambient spaces");
  }
}

double sin_disjointness(const Subspace& v, const Subspace& w) {
  const Multivector a = v.onb_blade();
  const Multivector b = w.onb_blade();
  const double denom = a.norm() * b.norm();
  if (denom == 0.0) throw degenerate_error("zero blade for a claimed basis");
  return clamp_unit(wedge(a, b).norm() / denom);
}

}  // namespace

std::vector<double> principal_angles(const Subspace& v, const Subspace& w) {
  require_compatible(v, w);
  const InnerKind kind =
      v.kind() == SpanKind::ComplexSpan ? InnerKind::Hermitian : InnerKind::RealPart;
  std::vector<std::vector<Scalar>> rows(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    rows[i].reserve(w.dim());
    for (std::size_t j = 0; j < w.dim(); ++j) {
      rows[i].push_back(inner_of_kind(v.onb()[i], w.onb()[j], kind));
    }
  }
  std::vector<double> sigma = singular_values(Matrix::from_rows(rows));
  std::vector<double> theta;
  theta.reserve(sigma.size());
  for (double s : sigma) theta.push_back(std::acos(clamp_unit(s)));
  std::sort(theta.begin(), theta.end());
  return theta;
}

double disjointness_angle(const Subspace& v, const Subspace& w) {
  require_compatible(v, w);
  return std::asin(sin_disjointness(v, w));
}

double kahler_angle(const Subspace& v) {
  if (!v.realified()) {
    throw tag_mismatch_error("kahler_angle applies to real spans of complex vectors");
  }
  if (v.dim() != 2) throw dimension_error("kahler_angle requires a plane");
  const double c = real_inner(v.onb()[0], complex_structure(v.onb()[1])).re();
  return std::acos(clamp_unit(std::abs(c)));
}

double reality_index(const Subspace& v) {
  if (!v.realified()) {
    throw tag_mismatch_error("reality_index applies to real spans of complex vectors");
  }
  return std::sqrt(sin_disjointness(v, v.image_under_i()));
}

std::string Classification::label() const {
  if (holomorphic) return "holomorphic";
  if (totally_real) return "totally_real";
  if (purely_real) return "purely_real";
  return "generic";
}

Classification classify(const Subspace& v, const Tolerance& tol) {
  if (!v.realified()) {
    throw tag_mismatch_error("classify applies to real spans of complex vectors");
  }
  Classification out;

  out.holomorphic = true;
  for (const Vector& b : v.onb()) {
    if (!v.contains(complex_structure(b), tol)) {
      out.holomorphic = false;
      break;
    }
  }

  out.totally_real = true;
  for (const Vector& bi : v.onb()) {
    const Vector rotated = complex_structure(bi);
    for (const Vector& bj : v.onb()) {
      if (std::abs(real_inner(bj, rotated).re()) > tol.abs_eps + tol.rel_eps) {
        out.totally_real = false;
        break;
      }
    }
    if (!out.totally_real) break;
  }

  out.purely_real =
      out.totally_real || sin_disjointness(v, v.image_under_i()) > tol.abs_eps + tol.rel_eps;
  return out;
}

double RelationCheck::residual() const { return std::abs(lhs - rhs); }

RealityRelations reality_relations_check(std::span<const Vector> vs, const Tolerance& tol) {
  if (vs.empty()) throw dimension_error("reality_relations_check needs vectors");
  const std::size_t p = vs.size();
  const std::size_t n = vs.front().dim();

  const Subspace v = Subspace::real_span({vs.begin(), vs.end()}, tol);
  RealityRelations out;
  out.rho = reality_index(v);

  std::vector<Vector> realified;
  realified.reserve(p);
  for (const Vector& x : vs) realified.push_back(realify_vector(x));

  out.blade_norms = {blade_from_vectors(vs).norm(),
                     blade_from_vectors(realified).norm() * out.rho};
  out.gramians = {gram(vs, InnerKind::Hermitian).gramian.re(),
                  gram(vs, InnerKind::RealPart).gramian.re() * out.rho * out.rho};
  if (p == n) {
    out.determinant = RelationCheck{det(Matrix::from_columns(vs)).abs(),
                                    volume(vs, tol).volume * out.rho};
  }
  return out;
}

AngleReport angle_report(const Subspace& v, const Subspace& w) {
  AngleReport out;
  out.principal = principal_angles(v, w);
  out.disjointness = disjointness_angle(v, w);
  if (v.realified()) {
    out.reality_index = reality_index(v);
    if (v.dim() == 2) out.kahler = kahler_angle(v);
  }
  return out;
}

}  // namespace blades
