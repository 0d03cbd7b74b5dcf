#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "blades/errors.hpp"

namespace blades {

enum class Field : std::uint8_t { Real, Complex };
enum class Backend : std::uint8_t { Float, Exact };

// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

// a + b*i with rational a, b. The exact counterpart of std::complex<double>.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Comparison policy: |a - b| <= abs_eps + rel_eps * max(|a|, |b|).
// The exact backend ignores both and compares literal equality.
struct Tolerance {
  double rel_eps = 1e-9;
  double abs_eps = 1e-12;

  static Tolerance defaults() { return {}; }
  static Tolerance exact() { return {0.0, 0.0}; }
};

// A field element of R or C under one of two interchangeable backends:
// double-precision floating point, or exact (Gaussian) rationals. Tags are
// carried at runtime; operations on mixed tags throw tag_mismatch_error.
// Real-tagged scalars keep an exactly-zero imaginary part. Values are
// immutable once constructed.
class Scalar {
public:
  Scalar() : field_(Field::Real), payload_(std::complex<double>{0.0, 0.0}) {}

  static Scalar real(double x) { return Scalar(Field::Real, std::complex<double>{x, 0.0}); }
  static Scalar complex(double re, double im) {
    return Scalar(Field::Complex, std::complex<double>{re, im});
  }
  static Scalar complex(std::complex<double> z) { return Scalar(Field::Complex, z); }
  static Scalar real(Rational x) { return Scalar(Field::Real, GaussianRational{std::move(x), 0}); }
  static Scalar complex(Rational re, Rational im) {
    return Scalar(Field::Complex, GaussianRational{std::move(re), std::move(im)});
  }
  static Scalar zero(Field f, Backend b);
  static Scalar one(Field f, Backend b);

  Field field() const { return field_; }
  Backend backend() const {
    return std::holds_alternative<std::complex<double>>(payload_) ? Backend::Float
                                                                  : Backend::Exact;
  }
  bool is_real_field() const { return field_ == Field::Real; }
  bool is_exact() const { return backend() == Backend::Exact; }

  // Embeddings into double precision (exact values are rounded).
  double re() const;
  double im() const;
  std::complex<double> to_complex() const { return {re(), im()}; }

  // Exact payload access; throws backend_error on the float backend.
  const GaussianRational& exact_value() const;

  Scalar conj() const;
  Scalar abs2() const;  // |z|^2, real-tagged, same backend
  double abs() const;
  bool is_zero() const;

  // Same value re-tagged with the complex field (no-op when already complex).
  Scalar as_complex() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws on zero divisor

  // Literal structural equality (same backend required; real scalars compare
  // equal to complex ones with zero imaginary part).
  friend bool operator==(const Scalar& a, const Scalar& b);

private:
  using Payload = std::variant<std::complex<double>, GaussianRational>;
  Scalar(Field f, Payload p) : field_(f), payload_(std::move(p)) {}

  Field field_;
  Payload payload_;
};

bool approx_eq(const Scalar& a, const Scalar& b, const Tolerance& tol);
bool approx_eq(double a, double b, const Tolerance& tol);

// Parses "p/q" or "p" into a canonical rational; throws parse_error.
Rational rational_from_string(const std::string& text);

// Exact conversion; every finite double is a rational.
Rational rational_from_double(double x);

std::string to_string(const Rational& q);

}  // namespace blades
