#pragma once

#include <stdexcept>

#include "cliffgrp/subspace.hpp"

namespace cliffgrp {

/// Raised when a linear-solve centralizer or tangent space is not a span of
/// basis blades. Every set in scope is a blade span, so this firing means a
/// structural assumption was falsified, not a user error.
struct NonMonomialSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Subspace grade_subspace(int m, const Signature& sig);
Subspace qtype_subspace(int k, const Signature& sig);
Subspace parity_subspace(int l, const Signature& sig);

/// Solves X V = V X (or hat(X) V = V X when twisted) over all basis blades
/// V of S as an exact linear system in the 2^n coefficients of X. Asserts
/// the solution space is a blade span.
Subspace bruteforce_centralizer(const Subspace& s, bool twisted, const Signature& sig);

/// Centralizer of the fixed-grade subspace G^m. Closed forms cover
/// m in {1,2,3,4} untwisted and m in {1,2,3} twisted; anything else falls
/// back to the brute-force solver.
Subspace closed_form_centralizer(int m, bool twisted, const Signature& sig);

/// Even part of the closed-form Z^4 (the set called <Z^4>_(0)).
Subspace closed_form_even_z4(const Signature& sig);

/// Centralizer of the quaternion-type subspace G^kbar. Untwisted:
/// Z^kbar = Z^k for k = 1,2,3 and Z^0bar = Z^4. Twisted: same for k = 1,2,3
/// and the twisted type-0 centralizer is <Z^4>_(0).
Subspace closed_form_type_centralizer(int k, bool twisted, const Signature& sig);

Subspace bruteforce_type_centralizer(int k, bool twisted, const Signature& sig);

}  // namespace cliffgrp
