#include "blades/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace blades {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw dimension_error("matrix must have positive shape");
  if (entries_.size() != rows_ * cols_) throw dimension_error("matrix entry count mismatch");
  field_ = entries_.front().field();
  backend_ = entries_.front().backend();
  for (const Scalar& s : entries_) {
    if (s.field() != field_ || s.backend() != backend_) {
      throw tag_mismatch_error("matrix entries use mixed tags");
    }
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows.front().empty()) throw dimension_error("empty matrix");
  const std::size_t cols = rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw dimension_error("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) throw dimension_error("matrix needs at least one column");
  const std::size_t rows = columns.front().dim();
  for (const Vector& c : columns) {
    if (c.dim() != rows) throw dimension_error("column dimensions differ");
  }
  std::vector<Scalar> entries;
  entries.reserve(rows * columns.size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (const Vector& c : columns) entries.push_back(c[i]);
  }
  return Matrix(rows, columns.size(), std::move(entries));
}

Matrix Matrix::identity(std::size_t n, Field f, Backend b) {
  std::vector<Scalar> entries(n * n, Scalar::zero(f, b));
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Scalar::one(f, b);
  return Matrix(n, n, std::move(entries));
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, Field f, Backend b) {
  return Matrix(rows, cols, std::vector<Scalar>(rows * cols, Scalar::zero(f, b)));
}

Vector Matrix::column(std::size_t j) const {
  std::vector<Scalar> entries;
  entries.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) entries.push_back(at(i, j));
  return Vector(std::move(entries));
}

Vector Matrix::row(std::size_t i) const {
  std::vector<Scalar> entries(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
  return Vector(std::move(entries));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matrix product shape mismatch");
  if (a.field() != b.field() || a.backend() != b.backend()) {
    throw tag_mismatch_error("matrix operands use different tags");
  }
  std::vector<Scalar> entries;
  entries.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero(a.field(), a.backend());
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
      entries.push_back(acc);
    }
  }
  return Matrix(a.rows(), b.cols(), std::move(entries));
}

Vector Matrix::apply(const Vector& v) const {
  if (v.dim() != cols_) throw dimension_error("matrix-vector shape mismatch");
  std::vector<Scalar> entries;
  entries.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = Scalar::zero(field_, backend_);
    for (std::size_t j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[j];
    entries.push_back(acc);
  }
  return Vector(std::move(entries));
}

namespace {

Scalar det_float(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::complex<double>> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).to_complex();
  }
  std::complex<double> result{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(a[i * n + k]);
      if (cand > best) {
        best = cand;
        pivot = i;
      }
    }
    if (best == 0.0) return Scalar::zero(m.field(), Backend::Float);
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      result = -result;
    }
    result *= a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::complex<double> factor = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
    }
  }
  if (m.field() == Field::Real) return Scalar::real(result.real());
  return Scalar::complex(result);
}

GaussianRational gr_mul(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational gr_sub(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational gr_div(const GaussianRational& a, const GaussianRational& b) {
  Rational denom = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

bool gr_zero(const GaussianRational& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

// Bareiss fraction-free elimination; every division is exact, so the final
// pivot is the determinant with no intermediate growth of denominators.
Scalar det_exact(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<GaussianRational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).exact_value();
  }
  int sign = 1;
  GaussianRational prev{Rational(1), Rational(0)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (gr_zero(a[k * n + k])) {
      std::size_t pivot = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!gr_zero(a[i * n + k])) {
          pivot = i;
          break;
        }
      }
      if (pivot == k) return Scalar::zero(m.field(), Backend::Exact);
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        GaussianRational num =
            gr_sub(gr_mul(a[i * n + j], a[k * n + k]), gr_mul(a[i * n + k], a[k * n + j]));
        a[i * n + j] = gr_div(num, prev);
      }
      a[i * n + k] = GaussianRational{Rational(0), Rational(0)};
    }
    prev = a[k * n + k];
  }
  GaussianRational d = a[(n - 1) * n + (n - 1)];
  if (sign < 0) d = GaussianRational{-d.re, -d.im};
  if (m.field() == Field::Real) return Scalar::real(d.re);
  return Scalar::complex(d.re, d.im);
}

}  // namespace

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw dimension_error("determinant requires a square matrix");
  return m.backend() == Backend::Float ? det_float(m) : det_exact(m);
}

Matrix conj_transpose(const Matrix& m) {
  std::vector<Scalar> entries;
  entries.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(m.at(i, j).conj());
  }
  return Matrix(m.cols(), m.rows(), std::move(entries));
}

Matrix block_embed(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw dimension_error("block_embed requires equal square blocks");
  }
  if (a.field() != Field::Real || b.field() != Field::Real) {
    throw tag_mismatch_error("block_embed requires real blocks");
  }
  if (a.backend() != b.backend()) throw tag_mismatch_error("block_embed backend mismatch");
  const std::size_t p = a.rows();
  std::vector<Scalar> entries;
  entries.reserve(4 * p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) entries.push_back(a.at(i, j));
    for (std::size_t j = 0; j < p; ++j) entries.push_back(-b.at(i, j));
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) entries.push_back(b.at(i, j));
    for (std::size_t j = 0; j < p; ++j) entries.push_back(a.at(i, j));
  }
  return Matrix(2 * p, 2 * p, std::move(entries));
}

Scalar inner_of_kind(const Vector& u, const Vector& v, InnerKind kind) {
  Scalar full = inner(u, v);
  if (kind == InnerKind::Hermitian) return full;
  if (full.backend() == Backend::Float) return Scalar::real(full.re());
  return Scalar::real(full.exact_value().re);
}

std::size_t GramSchmidtResult::rank() const {
  std::size_t r = 0;
  for (bool d : dependent) r += d ? 0 : 1;
  return r;
}

std::vector<Vector> GramSchmidtResult::independent() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!dependent[i]) out.push_back(basis[i]);
  }
  return out;
}

bool GramSchmidtResult::any_dependent() const {
  return std::any_of(dependent.begin(), dependent.end(), std::identity{});
}

GramSchmidtResult gram_schmidt(std::span<const Vector> vs, InnerKind kind, const Tolerance& tol) {
  if (vs.empty()) throw dimension_error("gram_schmidt needs at least one vector");
  const std::size_t dim = vs.front().dim();
  const Field field = vs.front().field();
  const Backend backend = vs.front().backend();
  for (const Vector& v : vs) {
    if (v.dim() != dim) throw dimension_error("gram_schmidt vector dimensions differ");
    if (v.field() != field || v.backend() != backend) {
      throw tag_mismatch_error("gram_schmidt vectors use mixed tags");
    }
  }

  double max_norm = 0.0;
  for (const Vector& v : vs) max_norm = std::max(max_norm, v.norm());
  const double zero_height = tol.abs_eps * (1.0 + max_norm);

  GramSchmidtResult out;
  for (const Vector& v : vs) {
    Vector residual = v;
    for (std::size_t k = 0; k < out.basis.size(); ++k) {
      if (out.dependent[k]) continue;
      const Vector& u = out.basis[k];
      Scalar coeff = inner_of_kind(u, residual, kind);
      if (backend == Backend::Exact) {
        // residuals are unnormalized on the exact backend
        coeff = coeff / inner_of_kind(u, u, kind);
      }
      if (field == Field::Complex) coeff = coeff.as_complex();
      residual = residual - scale(coeff, u);
    }
    Scalar h2 = residual.norm_sq();
    if (backend == Backend::Exact) {
      const bool dep = h2.is_zero();
      out.basis.push_back(dep ? Vector::zero(dim, field, backend) : residual);
      out.heights.push_back(dep ? 0.0 : std::sqrt(h2.re()));
      out.heights_sq.push_back(dep ? Scalar::zero(Field::Real, backend) : h2);
      out.dependent.push_back(dep);
    } else {
      const double h = std::sqrt(h2.re());
      if (h < zero_height) {
        out.basis.push_back(Vector::zero(dim, field, backend));
        out.heights.push_back(0.0);
        out.heights_sq.push_back(Scalar::real(0.0));
        out.dependent.push_back(true);
      } else {
        Scalar inv = Scalar::real(1.0 / h);
        if (field == Field::Complex) inv = inv.as_complex();
        out.basis.push_back(scale(inv, residual));
        out.heights.push_back(h);
        out.heights_sq.push_back(Scalar::real(h * h));
        out.dependent.push_back(false);
      }
    }
  }
  return out;
}

namespace {

// Cyclic Jacobi for a dense real symmetric matrix; ample for desk-scale use.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i * n + i]));
  for (double x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    }
    if (std::sqrt(off) <= 1e-15 * scale * n) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= 1e-18 * scale) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

}  // namespace

std::vector<double> singular_values(const Matrix& m) {
  if (m.backend() != Backend::Float) {
    throw backend_error("singular_values supports the float backend only");
  }
  // Work with the smaller of M^dagger M and M M^dagger so the eigenvalue
  // list has exactly min(rows, cols) entries.
  const Matrix h = m.cols() <= m.rows() ? conj_transpose(m) * m : m * conj_transpose(m);
  const std::size_t q = h.rows();

  std::vector<double> eig;
  if (m.field() == Field::Real) {
    std::vector<double> a(q * q);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) a[i * q + j] = h.at(i, j).re();
    }
    eig = symmetric_eigenvalues(std::move(a), q);
  } else {
    // Hermitian A + iB realifies to the symmetric [[A,-B],[B,A]] whose
    // spectrum is that of H with every eigenvalue doubled.
    const std::size_t n2 = 2 * q;
    std::vector<double> a(n2 * n2);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        const double re = h.at(i, j).re();
        const double im = h.at(i, j).im();
        a[i * n2 + j] = re;
        a[i * n2 + (q + j)] = -im;
        a[(q + i) * n2 + j] = im;
        a[(q + i) * n2 + (q + j)] = re;
      }
    }
    std::vector<double> doubled = symmetric_eigenvalues(std::move(a), n2);
    for (std::size_t i = 0; i < n2; i += 2) eig.push_back(doubled[i]);
  }

  std::vector<double> sv;
  sv.reserve(eig.size());
  for (double lambda : eig) sv.push_back(std::sqrt(std::max(lambda, 0.0)));
  return sv;
}

}  // namespace blades
