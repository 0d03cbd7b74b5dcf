#include "blades/scalar.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace blades {

namespace {

void require_same_tags(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) {
    throw tag_mismatch_error("scalar operands use different backends");
  }
  if (a.field() != b.field()) {
    throw tag_mismatch_error("scalar operands use different fields");
  }
}

}  // namespace

Scalar Scalar::zero(Field f, Backend b) {
  if (b == Backend::Float) {
    return f == Field::Real ? Scalar::real(0.0) : Scalar::complex(0.0, 0.0);
  }
  return f == Field::Real ? Scalar::real(Rational(0)) : Scalar::complex(Rational(0), Rational(0));
}

Scalar Scalar::one(Field f, Backend b) {
  if (b == Backend::Float) {
    return f == Field::Real ? Scalar::real(1.0) : Scalar::complex(1.0, 0.0);
  }
  return f == Field::Real ? Scalar::real(Rational(1)) : Scalar::complex(Rational(1), Rational(0));
}

double Scalar::re() const {
  if (const auto* f = std::get_if<std::complex<double>>(&payload_)) return f->real();
  return std::get<GaussianRational>(payload_).re.get_d();
}

double Scalar::im() const {
  if (const auto* f = std::get_if<std::complex<double>>(&payload_)) return f->imag();
  return std::get<GaussianRational>(payload_).im.get_d();
}

const GaussianRational& Scalar::exact_value() const {
  if (const auto* q = std::get_if<GaussianRational>(&payload_)) return *q;
  throw backend_error("exact_value() requires the exact backend");
}

Scalar Scalar::conj() const {
  if (const auto* f = std::get_if<std::complex<double>>(&payload_)) {
    return Scalar(field_, std::conj(*f));
  }
  const auto& q = std::get<GaussianRational>(payload_);
  return Scalar(field_, GaussianRational{q.re, -q.im});
}

Scalar Scalar::abs2() const {
  if (const auto* f = std::get_if<std::complex<double>>(&payload_)) {
    return Scalar(Field::Real, std::complex<double>{std::norm(*f), 0.0});
  }
  const auto& q = std::get<GaussianRational>(payload_);
  return Scalar(Field::Real, GaussianRational{q.re * q.re + q.im * q.im, 0});
}

double Scalar::abs() const {
  if (const auto* f = std::get_if<std::complex<double>>(&payload_)) return std::abs(*f);
  const auto& q = std::get<GaussianRational>(payload_);
  return std::hypot(q.re.get_d(), q.im.get_d());
}

bool Scalar::is_zero() const {
  if (const auto* f = std::get_if<std::complex<double>>(&payload_)) {
    return f->real() == 0.0 && f->imag() == 0.0;
  }
  const auto& q = std::get<GaussianRational>(payload_);
  return sgn(q.re) == 0 && sgn(q.im) == 0;
}

Scalar Scalar::as_complex() const {
  Scalar out = *this;
  out.field_ = Field::Complex;
  return out;
}

Scalar Scalar::operator-() const {
  if (const auto* f = std::get_if<std::complex<double>>(&payload_)) return Scalar(field_, -*f);
  const auto& q = std::get<GaussianRational>(payload_);
  return Scalar(field_, GaussianRational{-q.re, -q.im});
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_tags(a, b);
  if (const auto* fa = std::get_if<std::complex<double>>(&a.payload_)) {
    return Scalar(a.field_, *fa + std::get<std::complex<double>>(b.payload_));
  }
  const auto& qa = std::get<GaussianRational>(a.payload_);
  const auto& qb = std::get<GaussianRational>(b.payload_);
  return Scalar(a.field_, GaussianRational{qa.re + qb.re, qa.im + qb.im});
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_tags(a, b);
  if (const auto* fa = std::get_if<std::complex<double>>(&a.payload_)) {
    return Scalar(a.field_, *fa * std::get<std::complex<double>>(b.payload_));
  }
  const auto& qa = std::get<GaussianRational>(a.payload_);
  const auto& qb = std::get<GaussianRational>(b.payload_);
  return Scalar(a.field_, GaussianRational{qa.re * qb.re - qa.im * qb.im,
                                           qa.re * qb.im + qa.im * qb.re});
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_tags(a, b);
  if (b.is_zero()) throw std::domain_error("scalar division by zero");
  if (const auto* fa = std::get_if<std::complex<double>>(&a.payload_)) {
    return Scalar(a.field_, *fa / std::get<std::complex<double>>(b.payload_));
  }
  const auto& qa = std::get<GaussianRational>(a.payload_);
  const auto& qb = std::get<GaussianRational>(b.payload_);
  Rational denom = qb.re * qb.re + qb.im * qb.im;
  return Scalar(a.field_, GaussianRational{(qa.re * qb.re + qa.im * qb.im) / denom,
                                           (qa.im * qb.re - qa.re * qb.im) / denom});
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) return false;
  if (const auto* fa = std::get_if<std::complex<double>>(&a.payload_)) {
    return *fa == std::get<std::complex<double>>(b.payload_);
  }
  return std::get<GaussianRational>(a.payload_) == std::get<GaussianRational>(b.payload_);
}

bool approx_eq(double a, double b, const Tolerance& tol) {
  return std::abs(a - b) <= tol.abs_eps + tol.rel_eps * std::max(std::abs(a), std::abs(b));
}

bool approx_eq(const Scalar& a, const Scalar& b, const Tolerance& tol) {
  if (a.backend() != b.backend()) {
    throw tag_mismatch_error("approx_eq operands use different backends");
  }
  if (a.backend() == Backend::Exact) return a == b;
  const double diff = std::abs(a.to_complex() - b.to_complex());
  return diff <= tol.abs_eps + tol.rel_eps * std::max(a.abs(), b.abs());
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw parse_error("bad rational literal: " + text);
    }
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw parse_error("bad rational literal: " + text);
  }
  if (sgn(q.get_den()) == 0) throw parse_error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw parse_error("non-finite value is not rational");
  return Rational(x);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace blades
