#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cliffgrp {

using Rational = mpq_class;

/// Exact scalar of the coefficient field: a rational with an optional
/// Gaussian (imaginary) part. Real algebras simply never grow a nonzero
/// imaginary part, so one type serves both fields.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by intent
  Scalar(Rational re) : re_(std::move(re)), im_(0) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar from_fraction(long num, long den);
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws on division by zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form: "3", "-3/2", "1/2+1/3i", "2i", "1-2i", "0".
  std::string to_string() const;

 private:
  Rational re_, im_;
};

/// num/den as an exact rational; den must be nonzero.
Rational make_rational(long num, long den);

std::string rational_to_string(const Rational& q);

}  // namespace cliffgrp
