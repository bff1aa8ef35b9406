#pragma once

#include <cstdint>
#include <string>

namespace cliffgrp {

enum class Field : std::uint8_t { Real, Complex };

/// Maximum number of generators accepted by Signature. Default 8; may be
/// raised to 10 (exact 2^n linear algebra gets expensive past that).
int max_dimension();
void set_max_dimension(int n);

/// Algebra signature (p,q,r): p generators squaring to +e, q to -e, r to 0,
/// in that index order (1..p positive, p+1..p+q negative, rest null).
/// Complex signatures are normalized to (p+q, 0, r) at construction; the
/// normalization is recorded and visible through complex_normalized().
class Signature {
 public:
  Signature(int p, int q, int r, Field field = Field::Real);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }
  int n() const { return p_ + q_ + r_; }
  Field field() const { return field_; }
  bool complex_normalized() const { return normalized_; }

  std::size_t dim() const { return std::size_t{1} << n(); }

  /// Square of generator a (1-based): +1, -1 or 0.
  int metric(int a) const;

  std::uint32_t full_mask() const { return (std::uint32_t{1} << n()) - 1; }
  std::uint32_t null_mask() const;

  /// "p,q,r" (no field tag).
  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.field_ == b.field_;
  }
  friend bool operator!=(const Signature& a, const Signature& b) {
    return !(a == b);
  }

 private:
  int p_, q_, r_;
  Field field_;
  bool normalized_ = false;
};

}  // namespace cliffgrp
