#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffgrp/group.hpp"
#include "cliffgrp/sample.hpp"

namespace cliffgrp {

/// Which family of stabilizer/norm equalities to exercise: the plain one
/// (Q^kbar vs the ad-stabilizer) or the twisted one.
enum class TheoremFamily { Q, QCheck };

struct EquivalenceReport {
  GroupId group;
  Signature sig;
  int samples = 0;
  int agreements = 0;
  struct Counterexample {
    Multivector element;
    bool definition_verdict;
    bool norm_verdict;
  };
  std::optional<Counterexample> counterexample;

  bool passed() const { return agreements == samples; }
  nlohmann::json to_json() const;
};

/// Samples invertible elements (mixed strategies) and asserts the
/// stabilizer verdict equals the norm verdict for type k.
EquivalenceReport verify_equivalence(TheoremFamily family, int k, const Signature& sig,
                                     int n_samples, std::uint64_t seed);

struct CheckResult {
  std::string name;
  int relevant = 0;    // samples for which the premise held
  int violations = 0;
  std::optional<Multivector> counterexample;
  bool passed() const { return violations == 0; }
};

struct SuiteReport {
  std::string suite;
  Signature sig = Signature(1, 0, 0);
  int samples = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Inclusion and coincidence checks between the group families: the
/// stabilizer-chain inclusions, the P-family and A/B-family connections,
/// the Clifford/Lipschitz biconditionals for n <= 4, and the full
/// low-dimension coincidence chains for n = 1, 2.
SuiteReport verify_inclusions(const Signature& sig, int n_samples, std::uint64_t seed);

/// Kernel membership acts trivially: twisted action for even Grassmann
/// units, plain action for central units, parity-split action for Grassmann
/// units; plus the converse on generic samples.
SuiteReport verify_kernels(const Signature& sig, int n_samples, std::uint64_t seed);

/// Closed-form centralizers against the brute-force oracle for every grade
/// m = 0..n, twisted and untwisted, plus the type-centralizer identities.
SuiteReport verify_centralizers(const Signature& sig);

}  // namespace cliffgrp
