#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffgrp/multivector.hpp"

namespace cliffgrp {

/// A graded linear subspace represented by the set of basis blades that
/// span it, kept deduplicated and in canonical (grade, mask) order.
class Subspace {
 public:
  explicit Subspace(Signature sig) : sig_(std::move(sig)) {}
  Subspace(Signature sig, std::vector<Blade> blades);

  const Signature& signature() const { return sig_; }
  const std::vector<Blade>& blades() const { return blades_; }
  std::size_t dim() const { return blades_.size(); }
  bool empty() const { return blades_.empty(); }

  bool contains(Blade b) const;
  /// True iff every nonzero coefficient of u sits on a blade of the span.
  bool contains(const Multivector& u) const;

  Subspace unite(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  Subspace even_part() const;

  static Subspace whole_algebra(const Signature& sig);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.sig_ == b.sig_ && a.blades_ == b.blades_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Sorted list of multi-index arrays, e.g. [[],[1],[1,2]].
  nlohmann::json to_json() const;

 private:
  Signature sig_;
  std::vector<Blade> blades_;
};

/// Formal direct sum of blade-span primitives. Grade arguments outside the
/// valid range expand to the empty set, mirroring G^k = {0} for k < 0 or
/// k > n; structurally invalid arguments (parity not in {0,1}, type not in
/// 0..3) are rejected at construction.
class SubspaceDescriptor {
 public:
  struct Primitive {
    enum class Kind {
      Grade,         // G^k, all blades of grade k
      LambdaGrade,   // Lambda^k, null blades of grade k
      LambdaParity,  // Lambda^(l)
      LambdaQType,   // Lambda^kbar, null blades of grade = k mod 4
      QType,         // G^kbar
      Parity,        // G^(l)
      Pseudoscalar,  // G^n
      Product,       // {G^k_{p,q} Lambda^l}, k non-null with l null factors
    };
    Kind kind;
    int k = 0;
    int l = 0;
  };

  SubspaceDescriptor() = default;
  SubspaceDescriptor(std::initializer_list<Primitive> parts) : parts_(parts) {}

  static Primitive grade(int k) { return {Primitive::Kind::Grade, k, 0}; }
  static Primitive lambda_grade(int k) { return {Primitive::Kind::LambdaGrade, k, 0}; }
  static Primitive lambda_parity(int l);
  static Primitive lambda_qtype(int k);
  static Primitive qtype(int k);
  static Primitive parity(int l);
  static Primitive pseudoscalar() { return {Primitive::Kind::Pseudoscalar, 0, 0}; }
  static Primitive product(int k, int l) { return {Primitive::Kind::Product, k, l}; }

  SubspaceDescriptor& add(Primitive p) {
    parts_.push_back(p);
    return *this;
  }
  const std::vector<Primitive>& parts() const { return parts_; }

 private:
  std::vector<Primitive> parts_;
};

Subspace expand(const SubspaceDescriptor& desc, const Signature& sig);

}  // namespace cliffgrp
