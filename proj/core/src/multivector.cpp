#include "cliffgrp/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffgrp {

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  std::uint32_t m = mask;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Blade Blade::from_indices(const std::vector<int>& idx, const Signature& sig) {
  Blade b;
  int prev = 0;
  for (int a : idx) {
    if (a < 1 || a > sig.n()) throw std::out_of_range("blade index out of range");
    if (a <= prev) throw std::invalid_argument("blade indices must be strictly increasing");
    prev = a;
    b.mask |= std::uint32_t{1} << (a - 1);
  }
  return b;
}

std::string Blade::to_string() const {
  if (mask == 0) return "e";
  auto idx = indices();
  bool single_digit = idx.back() <= 9;
  std::string out = "e";
  if (single_digit) {
    for (int a : idx) out += static_cast<char>('0' + a);
    return out;
  }
  out += "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out + "]";
}

std::vector<Blade> blade_order(const Signature& sig) {
  std::vector<Blade> order;
  order.reserve(sig.dim());
  for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) order.push_back(Blade{m});
  std::sort(order.begin(), order.end(), BladeLess{});
  return order;
}

std::size_t blade_index(const Signature& sig, Blade b) {
  // Count blades preceding b in (grade, mask) order.
  std::size_t idx = 0;
  int g = b.grade();
  for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) {
    Blade o{m};
    int og = o.grade();
    if (og < g || (og == g && m < b.mask)) ++idx;
  }
  return idx;
}

int conjugation_sign(Conjugation kind, int grade) {
  int k = grade & 3;
  switch (kind) {
    case Conjugation::GradeInvolution:
      return (k & 1) ? -1 : 1;
    case Conjugation::Reversion:
      return (k == 2 || k == 3) ? -1 : 1;
    case Conjugation::CliffordConjugation:
      return (k == 1 || k == 2) ? -1 : 1;
  }
  return 1;
}

std::pair<int, Blade> blade_product(Blade a, Blade b, const Signature& sig) {
  if ((a.mask | b.mask) > sig.full_mask())
    throw std::out_of_range("blade not valid for signature");
  // Transpositions needed to interleave b into a.
  std::uint32_t x = a.mask >> 1;
  int swaps = 0;
  while (x) {
    swaps += std::popcount(x & b.mask);
    x >>= 1;
  }
  int sign = (swaps & 1) ? -1 : 1;
  // Metric contraction over repeated generators.
  std::uint32_t shared = a.mask & b.mask;
  while (shared) {
    int i = std::countr_zero(shared);
    sign *= sig.metric(i + 1);
    shared &= shared - 1;
  }
  return {sign, Blade{a.mask ^ b.mask}};
}

Multivector Multivector::identity(const Signature& sig) {
  return basis_blade(sig, Blade{0});
}

Multivector Multivector::basis_blade(const Signature& sig, Blade b, Scalar c) {
  Multivector u(sig);
  u.add_term(b, c);
  return u;
}

Multivector Multivector::generator(const Signature& sig, int a) {
  if (a < 1 || a > sig.n()) throw std::out_of_range("generator index out of range");
  return basis_blade(sig, Blade{std::uint32_t{1} << (a - 1)});
}

Scalar Multivector::coefficient(Blade b) const {
  auto it = coef_.find(b);
  return it == coef_.end() ? Scalar(0) : it->second;
}

void Multivector::add_term(Blade b, const Scalar& c) {
  if (c.is_zero()) return;
  if (b.mask > sig_.full_mask()) throw std::out_of_range("blade not valid for signature");
  auto [it, inserted] = coef_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coef_.erase(it);
  }
}

void Multivector::check_same_signature(const Multivector& o) const {
  if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
}

Multivector Multivector::operator-() const {
  Multivector out(sig_);
  for (const auto& [b, c] : coef_) out.coef_.emplace(b, -c);
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same_signature(o);
  for (const auto& [b, c] : o.coef_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same_signature(o);
  for (const auto& [b, c] : o.coef_) add_term(b, -c);
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  a.check_same_signature(b);
  Multivector out(a.sig_);
  for (const auto& [ba, ca] : a.coef_) {
    for (const auto& [bb, cb] : b.coef_) {
      auto [sign, blade] = blade_product(ba, bb, a.sig_);
      if (sign == 0) continue;
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(blade, c);
    }
  }
  return out;
}

Multivector operator*(const Scalar& c, const Multivector& a) {
  Multivector out(a.signature());
  if (c.is_zero()) return out;
  for (const auto& [b, v] : a.terms()) out.add_term(b, c * v);
  return out;
}

Multivector Multivector::conjugate(Conjugation kind) const {
  Multivector out(sig_);
  for (const auto& [b, c] : coef_) {
    int s = conjugation_sign(kind, b.grade());
    out.coef_.emplace(b, s < 0 ? -c : c);
  }
  return out;
}

Multivector Multivector::project_grade(int k) const {
  Multivector out(sig_);
  for (const auto& [b, c] : coef_)
    if (b.grade() == k) out.coef_.emplace(b, c);
  return out;
}

Multivector Multivector::project_parity(int l) const {
  if (l != 0 && l != 1) throw std::invalid_argument("parity must be 0 or 1");
  Multivector out(sig_);
  for (const auto& [b, c] : coef_)
    if ((b.grade() & 1) == l) out.coef_.emplace(b, c);
  return out;
}

Multivector Multivector::project_qtype(int k) const {
  if (k < 0 || k > 3) throw std::invalid_argument("quaternion type must be 0..3");
  Multivector out(sig_);
  for (const auto& [b, c] : coef_)
    if ((b.grade() & 3) == k) out.coef_.emplace(b, c);
  return out;
}

bool Multivector::is_scalar_plus_null_ideal() const {
  std::uint32_t null = sig_.null_mask();
  for (const auto& [b, c] : coef_)
    if (b.mask != 0 && (b.mask & null) == 0) return false;
  return true;
}

Multivector commutator(const Multivector& u, const Multivector& v) {
  return u * v - v * u;
}

Multivector norm_function(NormKind kind, const Multivector& u) {
  Multivector rev = u.reversion();
  if (kind == NormKind::Chi) rev = rev.grade_involution();
  return rev * u;
}

}  // namespace cliffgrp
