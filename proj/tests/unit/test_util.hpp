#pragma once

#include <vector>

#include <cliffgrp/multivector.hpp>
#include <cliffgrp/sample.hpp>

namespace test_util {

using namespace cliffgrp;

/// Random multivector with small integer coefficients, not necessarily
/// invertible; the workhorse for algebraic property tests.
inline Multivector random_multivector(const Signature& sig, Rng& rng, int max_terms = 5) {
  Multivector u(sig);
  int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t mask = static_cast<std::uint32_t>(rng.range(0, static_cast<int>(sig.full_mask())));
    int c = rng.range(-3, 3);
    if (c != 0) u.add_term(Blade{mask}, Scalar(c));
  }
  return u;
}

inline std::vector<Signature> all_signatures(int max_n, Field field = Field::Real) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q) {
        if (field == Field::Complex && q != 0) continue;
        out.emplace_back(p, q, n - p - q, field);
      }
  return out;
}

}  // namespace test_util
