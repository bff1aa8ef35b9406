#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cliffgrp/group.hpp"
#include "cliffgrp/linalg.hpp"
#include "cliffgrp/subspace.hpp"

namespace cliffgrp {

struct NotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form Lie algebra of a Q-family group, selected by the group, the
/// residue of n mod 4, and whether the signature is fully degenerate.
/// Accepts GroupTag::Q and GroupTag::QCheck.
Subspace table1_algebra(GroupId g, const Signature& sig);

/// Tangent space at the identity obtained by differentiating the norm
/// conditions: X + reverse(X) and X + cliffordconj(X) both land in the
/// group's centralizer set. Solved as an exact linear system with a
/// blade-span assertion.
Subspace tangent_oracle(GroupId g, const Signature& sig);

/// True iff the blade span is closed under the commutator.
bool closure_check(const Subspace& s);

/// Structure constants of a Lie algebra over the rationals. Complex
/// subspaces are realified first (each basis element contributes itself and
/// its i-multiple), so fingerprints always compare over the reals.
struct StructureConstants {
  int dim = 0;
  // entry (i,j) holds the expansion of [x_i, x_j]
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> bracket;

  static StructureConstants zero(int dim);
  void add_bracket(int i, int j, int k, const Rational& c);  // also sets (j,i)
  std::vector<Rational> apply_bracket(const std::vector<Rational>& u,
                                      const std::vector<Rational>& v) const;

  static StructureConstants from_subspace(const Subspace& s);
  static StructureConstants direct_sum(const std::vector<StructureConstants>& parts);
};

struct LieFingerprint {
  int dim = 0;
  int center_dim = 0;
  std::vector<int> derived_dims;  // dims of successive derived algebras
  bool nilpotent = false;
  bool solvable = false;
  Inertia killing;

  friend bool operator==(const LieFingerprint&, const LieFingerprint&) = default;
  nlohmann::json to_json() const;
};

LieFingerprint fingerprint(const StructureConstants& sc);
/// Requires closure; throws NotClosed otherwise.
LieFingerprint fingerprint(const Subspace& s);

/// Named reference algebras: gl1, gl1C, heis3, heis4, p11, su2, sl2C.
/// Complex ones are realified. A list is a direct sum.
StructureConstants reference_algebra(const std::string& name);
LieFingerprint reference_fingerprint(const std::vector<std::string>& names);

enum class ExpCheck { Member, NotMember, Skipped };

/// If x is nilpotent, exponentiates it exactly (the series terminates) and
/// reports membership of exp(x) in the group; otherwise Skipped.
ExpCheck nilpotent_exp_check(const Multivector& x, GroupId g);

/// The dimension formulas attached to the closed-form algebras, evaluated
/// in integer arithmetic (the cosine factor comes from its period-8 table).
struct DimFormulas {
  int n = 0, r = 0;
  long qtype2 = 0;               // dim of the grade = 2 mod 4 part
  long pseudoscalar = 1;
  std::vector<long> grade_pq;    // dim G^k_{p,q} for k = 0..p+q
  std::vector<long> lambda_k;    // dim Lambda^k for k = 0..n
  long lambda_odd = 0;           // dim Lambda^(1)
  long lambda_qtype0 = 0;        // dim Lambda^0bar

  nlohmann::json to_json() const;
};
DimFormulas dim_formulas(const Signature& sig);

/// 2^{n/2} cos(pi n / 4), an integer for every n >= 0.
long cos_quarter_scaled(int n);
long qtype2_dim(int n);
long lambda_qtype0_dim(int r);
long binomial(int a, int b);

}  // namespace cliffgrp
