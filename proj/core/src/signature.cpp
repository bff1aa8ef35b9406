#include "cliffgrp/signature.hpp"

#include <stdexcept>

namespace cliffgrp {

namespace {
int g_max_dimension = 8;
}

int max_dimension() { return g_max_dimension; }

void set_max_dimension(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("dimension cap must be in [1,10]");
  g_max_dimension = n;
}

Signature::Signature(int p, int q, int r, Field field)
    : p_(p), q_(q), r_(r), field_(field) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("negative signature count");
  if (n() < 1) throw std::invalid_argument("signature needs at least one generator");
  if (n() > max_dimension())
    throw std::invalid_argument("signature exceeds the dimension cap (see set_max_dimension)");
  if (field_ == Field::Complex && q_ != 0) {
    p_ += q_;
    q_ = 0;
    normalized_ = true;
  }
}

int Signature::metric(int a) const {
  if (a < 1 || a > n()) throw std::out_of_range("generator index out of range");
  if (a <= p_) return 1;
  if (a <= p_ + q_) return -1;
  return 0;
}

std::uint32_t Signature::null_mask() const {
  std::uint32_t nonnull = (std::uint32_t{1} << (p_ + q_)) - 1;
  return full_mask() & ~nonnull;
}

std::string Signature::to_string() const {
  return std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_);
}

}  // namespace cliffgrp
