#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blades/subspace.hpp"

namespace blades {

// Angle hierarchy between two subspaces. kahler and reality_index apply
// only to real subspaces of a realified complex space (kahler to planes).
struct AngleReport {
  std::vector<double> principal;  // ascending, in [0, pi/2]
  double disjointness = 0.0;
  std::optional<double> kahler;
  std::optional<double> reality_index;
};

// arccos of the singular values of the inner-product matrix of the two
// orthonormal bases; ascending, length min(dim V, dim W).
std::vector<double> principal_angles(const Subspace& v, const Subspace& w);

// asin(||A ^ B|| / (||A|| ||B||)) over blades of the two subspaces, taken
// with the wedge matching where the spans live (R-linear for real spans,
// C-linear for complex ones). 0 iff the subspaces intersect nontrivially,
// pi/2 iff they are orthogonal.
double disjointness_angle(const Subspace& v, const Subspace& w);

// arccos |<v1, i*v2>_R| over an orthonormal basis of a real plane in
// realified space; basis-independent.
double kahler_angle(const Subspace& v);

// rho(V) = sqrt(sin Y(V, iV)): 0 iff V contains a complex subspace, 1 iff V
// is totally real.
double reality_index(const Subspace& v);

struct Classification {
  bool holomorphic = false;
  bool purely_real = false;
  bool totally_real = false;  // implies purely_real

  std::string label() const;
};

Classification classify(const Subspace& v, const Tolerance& tol = Tolerance::defaults());

struct RelationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual() const;
};

// The three identities converting complex quantities of (v1, ..., vp) into
// real ones via the reality index of V = span_R{v1, ..., vp}:
//   blade_norms:  ||v1 ^C ... ^C vp||  =  ||v1 ^R ... ^R vp|| * rho
//   gramians:     |G|                  =  |G_R| * rho^2
//   determinant:  |det M|              =  V(v1, ..., vn) * rho   (p = n only)
struct RealityRelations {
  double rho = 0.0;
  RelationCheck blade_norms;
  RelationCheck gramians;
  std::optional<RelationCheck> determinant;
};

RealityRelations reality_relations_check(std::span<const Vector> vs,
                                         const Tolerance& tol = Tolerance::defaults());

AngleReport angle_report(const Subspace& v, const Subspace& w);

}  // namespace blades
