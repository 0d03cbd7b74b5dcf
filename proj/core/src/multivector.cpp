#include "blades/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace blades {

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1) throw dimension_error("multi-index entries are 1-based");
    if (k > 0 && indices_[k] <= indices_[k - 1]) {
      throw dimension_error("multi-index must be strictly increasing");
    }
  }
}

bool MultiIndex::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::string MultiIndex::key() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k > 0) out << ',';
    out << indices_[k];
  }
  return out.str();
}

MultiIndex MultiIndex::parse(const std::string& key) {
  std::vector<int> indices;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(part, &used);
      if (used != part.size()) throw parse_error("bad multi-index: " + key);
      indices.push_back(value);
    } catch (const std::logic_error&) {
      throw parse_error("bad multi-index: " + key);
    }
  }
  if (indices.empty()) throw parse_error("empty multi-index");
  try {
    return MultiIndex(std::move(indices));
  } catch (const dimension_error&) {
    throw parse_error("bad multi-index: " + key);
  }
}

std::vector<MultiIndex> all_multi_indices(std::size_t dim, std::size_t grade) {
  std::vector<MultiIndex> out;
  if (grade == 0 || grade > dim) return out;
  std::vector<int> current(grade);
  for (std::size_t k = 0; k < grade; ++k) current[k] = static_cast<int>(k + 1);
  while (true) {
    out.emplace_back(current);
    // advance the rightmost index that can still move
    std::size_t k = grade;
    while (k > 0 && current[k - 1] == static_cast<int>(dim - grade + k)) --k;
    if (k == 0) break;
    ++current[k - 1];
    for (std::size_t j = k; j < grade; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

Multivector::Multivector(std::size_t dim, std::size_t grade, Field f, Backend b)
    : dim_(dim), grade_(grade), field_(f), backend_(b) {}

Multivector::Multivector(std::size_t dim, std::size_t grade, Field f, Backend b,
                         std::map<MultiIndex, Scalar> coeffs)
    : dim_(dim), grade_(grade), field_(f), backend_(b), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    const auto& [index, value] = *it;
    if (index.grade() != grade_) throw dimension_error("multivector key grade mismatch");
    if (index[index.grade() - 1] > static_cast<int>(dim_)) {
      throw dimension_error("multivector key exceeds ambient dimension");
    }
    if (value.field() != field_ || value.backend() != backend_) {
      throw tag_mismatch_error("multivector coefficients use mixed tags");
    }
    it = value.is_zero() ? coeffs_.erase(it) : std::next(it);
  }
}

Scalar Multivector::coeff(const MultiIndex& I) const {
  auto it = coeffs_.find(I);
  return it == coeffs_.end() ? Scalar::zero(field_, backend_) : it->second;
}

Scalar Multivector::norm_sq() const {
  Scalar acc = Scalar::zero(Field::Real, backend_);
  for (const auto& [index, value] : coeffs_) acc = acc + value.abs2();
  return acc;
}

double Multivector::norm() const { return std::sqrt(norm_sq().re()); }

bool Multivector::is_zero() const { return coeffs_.empty(); }

namespace {

void require_same_space(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw dimension_error("multivector ambient dimensions differ");
  if (a.field() != b.field() || a.backend() != b.backend()) {
    throw tag_mismatch_error("multivector operands use different tags");
  }
}

}  // namespace

Multivector operator+(const Multivector& a, const Multivector& b) {
  require_same_space(a, b);
  if (a.grade() != b.grade()) throw dimension_error("multivector grades differ");
  std::map<MultiIndex, Scalar> coeffs = a.coeffs();
  for (const auto& [index, value] : b.coeffs()) {
    auto it = coeffs.find(index);
    if (it == coeffs.end()) {
      coeffs.emplace(index, value);
    } else {
      it->second = it->second + value;
    }
  }
  return Multivector(a.dim(), a.grade(), a.field(), a.backend(), std::move(coeffs));
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  Scalar minus_one = Scalar::one(b.field(), b.backend());
  return a + ((-minus_one) * b);
}

Multivector operator*(const Scalar& s, const Multivector& a) {
  if (s.field() != a.field() || s.backend() != a.backend()) {
    throw tag_mismatch_error("scalar and multivector tags differ");
  }
  std::map<MultiIndex, Scalar> coeffs;
  for (const auto& [index, value] : a.coeffs()) coeffs.emplace(index, s * value);
  return Multivector(a.dim(), a.grade(), a.field(), a.backend(), std::move(coeffs));
}

Multivector blade_from_vectors(std::span<const Vector> vs) {
  if (vs.empty()) throw dimension_error("blade needs at least one vector");
  const std::size_t p = vs.size();
  const std::size_t n = vs.front().dim();
  if (p > n) throw dimension_error("blade grade exceeds ambient dimension");
  const Matrix m = Matrix::from_columns(vs);

  std::map<MultiIndex, Scalar> coeffs;
  for (const MultiIndex& I : all_multi_indices(n, p)) {
    std::vector<std::vector<Scalar>> rows(p);
    for (std::size_t r = 0; r < p; ++r) {
      rows[r].reserve(p);
      for (std::size_t c = 0; c < p; ++c) {
        rows[r].push_back(m.at(static_cast<std::size_t>(I[r]) - 1, c));
      }
    }
    coeffs.emplace(I, det(Matrix::from_rows(rows)));
  }
  return Multivector(n, p, m.field(), m.backend(), std::move(coeffs));
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_same_space(a, b);
  const std::size_t grade = a.grade() + b.grade();
  std::map<MultiIndex, Scalar> coeffs;
  if (grade <= a.dim()) {
    for (const auto& [ia, ca] : a.coeffs()) {
      for (const auto& [ib, cb] : b.coeffs()) {
        // merge the two ascending index lists; a shared index kills the term
        std::vector<int> merged;
        merged.reserve(grade);
        int inversions = 0;
        std::size_t x = 0, y = 0;
        bool collision = false;
        while (x < ia.grade() || y < ib.grade()) {
          if (y == ib.grade() || (x < ia.grade() && ia[x] < ib[y])) {
            merged.push_back(ia[x]);
            ++x;
          } else if (x == ia.grade() || ib[y] < ia[x]) {
            // every remaining element of ia jumps over ib[y]
            inversions += static_cast<int>(ia.grade() - x);
            merged.push_back(ib[y]);
            ++y;
          } else {
            collision = true;
            break;
          }
        }
        if (collision) continue;
        Scalar term = ca * cb;
        if (inversions % 2 == 1) term = -term;
        MultiIndex key{std::move(merged)};
        auto it = coeffs.find(key);
        if (it == coeffs.end()) {
          coeffs.emplace(std::move(key), std::move(term));
        } else {
          it->second = it->second + term;
        }
      }
    }
  }
  return Multivector(a.dim(), grade, a.field(), a.backend(), std::move(coeffs));
}

Multivector coordinate_component(const Multivector& b, const MultiIndex& I) {
  if (I.grade() != b.grade()) throw dimension_error("component grade mismatch");
  std::map<MultiIndex, Scalar> coeffs;
  auto it = b.coeffs().find(I);
  if (it != b.coeffs().end()) coeffs.emplace(*it);
  return Multivector(b.dim(), b.grade(), b.field(), b.backend(), std::move(coeffs));
}

Scalar mv_inner(const Multivector& a, const Multivector& b) {
  require_same_space(a, b);
  if (a.grade() != b.grade()) throw dimension_error("multivector grades differ");
  Scalar acc = Scalar::zero(a.field(), a.backend());
  for (const auto& [index, value] : a.coeffs()) {
    auto it = b.coeffs().find(index);
    if (it != b.coeffs().end()) acc = acc + value.conj() * it->second;
  }
  return acc;
}

namespace {

double principal_arg(std::complex<double> z) {
  double phase = std::atan2(z.imag(), z.real());
  if (phase == -std::numbers::pi) phase = std::numbers::pi;
  return phase;
}

}  // namespace

double orientation_phase(std::span<const Vector> basis_a, std::span<const Vector> basis_b,
                         const Tolerance& tol) {
  if (basis_a.empty() || basis_a.size() != basis_b.size()) {
    throw dimension_error("orientation_phase needs equal-size nonempty bases");
  }
  const Multivector blade_a = blade_from_vectors(basis_a);
  const Multivector blade_b = blade_from_vectors(basis_b);

  const double norm_a = blade_a.norm();
  const double norm_b = blade_b.norm();
  double input_scale = 0.0;
  for (const Vector& v : basis_a) input_scale = std::max(input_scale, v.norm());
  for (const Vector& v : basis_b) input_scale = std::max(input_scale, v.norm());
  if (norm_a <= tol.abs_eps * (1.0 + input_scale) || norm_b <= tol.abs_eps * (1.0 + input_scale)) {
    throw degenerate_error("orientation_phase requires independent bases");
  }

  // mutual projection residuals: every vector of one list must lie in the
  // span of the other
  GramSchmidtResult gs = gram_schmidt(basis_a, InnerKind::Hermitian, tol);
  const std::vector<Vector> onb = gs.independent();
  for (const Vector& w : basis_b) {
    Vector residual = w;
    for (const Vector& u : onb) {
      Scalar coeff = inner(u, residual);
      if (residual.backend() == Backend::Exact) coeff = coeff / inner(u, u);
      residual = residual - scale(coeff, u);
    }
    if (residual.norm() > tol.abs_eps + tol.rel_eps * (1.0 + w.norm())) {
      throw subspace_error("bases span different subspaces");
    }
  }

  Scalar denom = blade_a.norm_sq();
  if (blade_a.field() == Field::Complex) denom = denom.as_complex();
  const Scalar lambda = mv_inner(blade_a, blade_b) / denom;
  if (blade_a.field() == Field::Real) {
    return lambda.re() >= 0.0 ? 0.0 : std::numbers::pi;
  }
  return principal_arg(lambda.to_complex());
}

DetInterpretation det_interpret(const Matrix& m, const Tolerance& tol) {
  DetInterpretation out{det(m), 0.0, std::nullopt, 0.0};
  const bool zero = out.det.backend() == Backend::Exact
                        ? out.det.is_zero()
                        : out.det.abs() <= tol.abs_eps;
  out.modulus = zero ? 0.0 : out.det.abs();
  if (m.field() == Field::Real) {
    out.volume_scale = out.modulus;
    if (!zero) out.phase = out.det.re() > 0.0 ? 0.0 : std::numbers::pi;
  } else {
    out.volume_scale = out.modulus * out.modulus;
    if (!zero) out.phase = principal_arg(out.det.to_complex());
  }
  return out;
}

}  // namespace blades
