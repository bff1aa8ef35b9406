#include "cliffgrp/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffgrp {

Subspace::Subspace(Signature sig, std::vector<Blade> blades)
    : sig_(std::move(sig)), blades_(std::move(blades)) {
  for (Blade b : blades_)
    if (b.mask > sig_.full_mask()) throw std::out_of_range("blade not valid for signature");
  std::sort(blades_.begin(), blades_.end(), BladeLess{});
  blades_.erase(std::unique(blades_.begin(), blades_.end()), blades_.end());
}

bool Subspace::contains(Blade b) const {
  return std::binary_search(blades_.begin(), blades_.end(), b, BladeLess{});
}

bool Subspace::contains(const Multivector& u) const {
  if (u.signature() != sig_) throw std::invalid_argument("signature mismatch");
  for (const auto& [b, c] : u.terms())
    if (!contains(b)) return false;
  return true;
}

Subspace Subspace::unite(const Subspace& o) const {
  if (o.sig_ != sig_) throw std::invalid_argument("signature mismatch");
  std::vector<Blade> all = blades_;
  all.insert(all.end(), o.blades_.begin(), o.blades_.end());
  return Subspace(sig_, std::move(all));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.sig_ != sig_) throw std::invalid_argument("signature mismatch");
  std::vector<Blade> kept;
  for (Blade b : blades_)
    if (o.contains(b)) kept.push_back(b);
  return Subspace(sig_, std::move(kept));
}

Subspace Subspace::even_part() const {
  std::vector<Blade> kept;
  for (Blade b : blades_)
    if ((b.grade() & 1) == 0) kept.push_back(b);
  return Subspace(sig_, std::move(kept));
}

Subspace Subspace::whole_algebra(const Signature& sig) {
  return Subspace(sig, blade_order(sig));
}

nlohmann::json Subspace::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (Blade b : blades_) arr.push_back(b.indices());
  return arr;
}

SubspaceDescriptor::Primitive SubspaceDescriptor::lambda_parity(int l) {
  if (l != 0 && l != 1) throw std::invalid_argument("parity must be 0 or 1");
  return {Primitive::Kind::LambdaParity, 0, l};
}

SubspaceDescriptor::Primitive SubspaceDescriptor::lambda_qtype(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("quaternion type must be 0..3");
  return {Primitive::Kind::LambdaQType, k, 0};
}

SubspaceDescriptor::Primitive SubspaceDescriptor::qtype(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("quaternion type must be 0..3");
  return {Primitive::Kind::QType, k, 0};
}

SubspaceDescriptor::Primitive SubspaceDescriptor::parity(int l) {
  if (l != 0 && l != 1) throw std::invalid_argument("parity must be 0 or 1");
  return {Primitive::Kind::Parity, 0, l};
}

namespace {

bool primitive_matches(const SubspaceDescriptor::Primitive& p, Blade b,
                       const Signature& sig) {
  using Kind = SubspaceDescriptor::Primitive::Kind;
  const std::uint32_t null = sig.null_mask();
  const bool in_lambda = (b.mask & ~null) == 0;
  const int g = b.grade();
  switch (p.kind) {
    case Kind::Grade:
      return g == p.k;
    case Kind::LambdaGrade:
      return in_lambda && g == p.k;
    case Kind::LambdaParity:
      return in_lambda && (g & 1) == p.l;
    case Kind::LambdaQType:
      return in_lambda && (g & 3) == p.k;
    case Kind::QType:
      return (g & 3) == p.k;
    case Kind::Parity:
      return (g & 1) == p.l;
    case Kind::Pseudoscalar:
      return b.mask == sig.full_mask();
    case Kind::Product:
      return std::popcount(b.mask & ~null) == p.k &&
             std::popcount(b.mask & null) == p.l;
  }
  return false;
}

}  // namespace

Subspace expand(const SubspaceDescriptor& desc, const Signature& sig) {
  std::vector<Blade> blades;
  for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) {
    Blade b{m};
    for (const auto& p : desc.parts())
      if (primitive_matches(p, b, sig)) {
        blades.push_back(b);
        break;
      }
  }
  return Subspace(sig, std::move(blades));
}

}  // namespace cliffgrp
