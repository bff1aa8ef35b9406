#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cliffgrp/scalar.hpp"
#include "cliffgrp/signature.hpp"

namespace cliffgrp {

/// Basis blade e_A as a bit mask over generators: bit a-1 set means the
/// generator e_a participates. Mask 0 is the identity element e.
struct Blade {
  std::uint32_t mask = 0;

  int grade() const { return std::popcount(mask); }
  bool contains(int a) const { return (mask >> (a - 1)) & 1u; }

  /// 1-based generator indices in increasing order.
  std::vector<int> indices() const;
  static Blade from_indices(const std::vector<int>& idx, const Signature& sig);

  /// "e", "e12", "e[1,10]" depending on index size.
  std::string to_string() const;

  friend auto operator<=>(const Blade&, const Blade&) = default;
};

/// Ordering used everywhere a dense coefficient vector appears: blades
/// sorted by (grade, mask). Subspace equality and JSON output rely on it.
struct BladeLess {
  bool operator()(const Blade& a, const Blade& b) const {
    int ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga < gb;
    return a.mask < b.mask;
  }
};

/// All 2^n blades of the signature in canonical (grade, mask) order.
std::vector<Blade> blade_order(const Signature& sig);

/// Position of a blade within blade_order.
std::size_t blade_index(const Signature& sig, Blade b);

enum class Conjugation { GradeInvolution, Reversion, CliffordConjugation };

/// Per-grade sign of the conjugation: (-1)^k, (-1)^{k(k-1)/2}, or their product.
int conjugation_sign(Conjugation kind, int grade);

/// Product of two basis blades: returns (c, e_{A xor B}) with c in {+1,-1,0}.
/// The coefficient is 0 exactly when the blades share a null generator.
std::pair<int, Blade> blade_product(Blade a, Blade b, const Signature& sig);

enum class NormKind { Psi, Chi };

class Multivector {
 public:
  explicit Multivector(Signature sig) : sig_(std::move(sig)) {}

  static Multivector zero(const Signature& sig) { return Multivector(sig); }
  static Multivector identity(const Signature& sig);
  static Multivector basis_blade(const Signature& sig, Blade b, Scalar c = Scalar(1));
  static Multivector generator(const Signature& sig, int a);

  const Signature& signature() const { return sig_; }
  const std::map<Blade, Scalar, BladeLess>& terms() const { return coef_; }

  bool is_zero() const { return coef_.empty(); }
  Scalar coefficient(Blade b) const;
  Scalar scalar_part() const { return coefficient(Blade{0}); }

  /// Adds c * e_b, dropping the term if it cancels to zero.
  void add_term(Blade b, const Scalar& c);

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Scalar& c, const Multivector& a);

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.coef_ == b.coef_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  Multivector conjugate(Conjugation kind) const;
  Multivector grade_involution() const { return conjugate(Conjugation::GradeInvolution); }
  Multivector reversion() const { return conjugate(Conjugation::Reversion); }
  Multivector clifford_conjugation() const { return conjugate(Conjugation::CliffordConjugation); }

  Multivector project_grade(int k) const;
  Multivector project_parity(int l) const;
  Multivector project_qtype(int k) const;

  /// True when every term lies on a blade with at least one null generator
  /// plus possibly a scalar part; such elements are unit-plus-nilpotent.
  bool is_scalar_plus_null_ideal() const;

 private:
  void check_same_signature(const Multivector& o) const;

  Signature sig_;
  std::map<Blade, Scalar, BladeLess> coef_;
};

Multivector commutator(const Multivector& u, const Multivector& v);

/// psi(T) = reverse(T) * T ; chi(T) = gradeinv(reverse(T)) * T.
Multivector norm_function(NormKind kind, const Multivector& u);

}  // namespace cliffgrp
