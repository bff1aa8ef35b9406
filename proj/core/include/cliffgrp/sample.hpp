#pragma once

#include <cstdint>
#include <stdexcept>

#include "cliffgrp/multivector.hpp"
#include "cliffgrp/subspace.hpp"

namespace cliffgrp {

/// Raised when a strategy cannot produce an invertible element within the
/// retry cap (64 attempts), e.g. products of invertible vectors in a fully
/// degenerate algebra.
struct SamplingExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// splitmix64; self-contained so sampled streams are stable across
/// platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi], deterministic.
  int range(int lo, int hi);
  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

enum class SampleStrategy {
  Generic,         // small-integer coefficients, rejection on singularity
  EvenOdd,         // parity-pure units
  LambdaUnits,     // Grassmann-part units (nonzero scalar plus null blades)
  VectorProducts,  // products of invertible grade-1 vectors
  NilpotentExp,    // e + N with N supported on null-touching blades
};

inline constexpr int kSampleRetryCap = 64;

Multivector sample_invertible(const Signature& sig, SampleStrategy strategy,
                              std::uint64_t seed);

/// Mixed-strategy stream: 40% Generic and 15% each structured strategy by
/// index position. The per-index seed is derived from (master_seed, index),
/// so the stream is order independent. Strategies that are impossible in
/// the signature fall back to Generic for that index.
Multivector mixed_sample(const Signature& sig, std::uint64_t master_seed, int index);

/// Invertible element supported on the given blade span, by rejection.
Multivector sample_invertible_in(const Subspace& s, std::uint64_t seed);

/// Element supported on the given blade span, not necessarily invertible.
Multivector sample_in(const Subspace& s, std::uint64_t seed);

}  // namespace cliffgrp
