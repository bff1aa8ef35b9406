#include "cliffgrp/scalar.hpp"

#include <stdexcept>

namespace cliffgrp {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Scalar Scalar::from_fraction(long num, long den) {
  return Scalar(make_rational(num, den));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm == 0) throw std::domain_error("division by zero scalar");
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  if (im_ == 0) return rational_to_string(re_);
  std::string im_part = rational_to_string(im_) + "i";
  if (re_ == 0) return im_part;
  std::string out = rational_to_string(re_);
  if (im_ > 0) out += "+";
  return out + im_part;
}

}  // namespace cliffgrp
