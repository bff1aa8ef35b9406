#include "cliffgrp/sample.hpp"

#include <algorithm>

#include "cliffgrp/linalg.hpp"

namespace cliffgrp {

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  Rng r(master ^ (0xA24BAED4963EE407ull * (index + 1)));
  return r.next();
}

namespace {

Scalar random_coeff(Rng& rng, const Signature& sig) {
  auto nonzero = [&rng]() {
    int v = rng.range(-3, 2);
    return Rational(v >= 0 ? v + 1 : v);  // skip zero
  };
  if (sig.field() == Field::Complex && rng.range(0, 3) == 0)
    return Scalar(Rational(rng.range(-2, 2)), nonzero());
  return Scalar(nonzero());
}

Multivector random_on(const std::vector<Blade>& pool, int terms, Rng& rng,
                      const Signature& sig) {
  Multivector u(sig);
  for (int t = 0; t < terms; ++t) {
    Blade b = pool[static_cast<std::size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
    u.add_term(b, random_coeff(rng, sig));
  }
  return u;
}

std::vector<Blade> blades_matching(const Signature& sig, auto&& pred) {
  std::vector<Blade> out;
  for (std::uint32_t m = 0; m <= sig.full_mask(); ++m)
    if (pred(Blade{m})) out.push_back(Blade{m});
  return out;
}

Multivector sample_generic(const Signature& sig, Rng& rng) {
  auto pool = blades_matching(sig, [](Blade) { return true; });
  for (int attempt = 0; attempt < kSampleRetryCap; ++attempt) {
    int terms = rng.range(1, std::min<int>(static_cast<int>(sig.dim()), 6));
    Multivector u = random_on(pool, terms, rng, sig);
    if (rng.coin() && u.scalar_part().is_zero())
      u.add_term(Blade{0}, random_coeff(rng, sig));
    if (is_invertible(u)) return u;
  }
  throw SamplingExhausted("no invertible generic element found");
}

Multivector sample_even_odd(const Signature& sig, Rng& rng) {
  for (int attempt = 0; attempt < kSampleRetryCap; ++attempt) {
    int parity = rng.coin() ? 1 : 0;
    auto pool = blades_matching(sig, [&](Blade b) { return (b.grade() & 1) == parity; });
    if (pool.empty()) continue;
    int terms = rng.range(1, std::min<int>(static_cast<int>(pool.size()), 4));
    Multivector u = random_on(pool, terms, rng, sig);
    if (parity == 0 && u.scalar_part().is_zero() && rng.coin())
      u.add_term(Blade{0}, random_coeff(rng, sig));
    if (is_invertible(u)) return u;
  }
  throw SamplingExhausted("no parity-pure unit found");
}

Multivector sample_lambda_units(const Signature& sig, Rng& rng) {
  const std::uint32_t null = sig.null_mask();
  auto pool = blades_matching(sig, [&](Blade b) { return (b.mask & ~null) == 0; });
  int terms = rng.range(0, std::min<int>(static_cast<int>(pool.size()), 4));
  Multivector u = random_on(pool, terms, rng, sig);
  if (u.scalar_part().is_zero()) u.add_term(Blade{0}, random_coeff(rng, sig));
  return u;  // nonzero scalar plus nilpotent, always invertible
}

Multivector sample_vector_products(const Signature& sig, Rng& rng) {
  if (sig.p() + sig.q() == 0)
    throw SamplingExhausted("no invertible vectors in a fully degenerate algebra");
  int factors = rng.range(1, std::min(sig.n(), 3));
  Multivector out = Multivector::identity(sig);
  for (int f = 0; f < factors; ++f) {
    bool found = false;
    for (int attempt = 0; attempt < kSampleRetryCap && !found; ++attempt) {
      Multivector v(sig);
      for (int a = 1; a <= sig.n(); ++a) {
        int c = rng.range(-3, 3);
        if (c != 0) v.add_term(Blade{std::uint32_t{1} << (a - 1)}, Scalar(c));
      }
      Multivector sq = v * v;  // a scalar for any grade-1 vector
      if (!sq.is_zero()) {
        out = out * v;
        found = true;
      }
    }
    if (!found) throw SamplingExhausted("no invertible vector found");
  }
  return out;
}

Multivector sample_nilpotent_exp(const Signature& sig, Rng& rng) {
  const std::uint32_t null = sig.null_mask();
  auto pool = blades_matching(
      sig, [&](Blade b) { return b.mask != 0 && (b.mask & null) != 0; });
  if (pool.empty())
    throw SamplingExhausted("no null-touching blades in this signature");
  int terms = rng.range(1, std::min<int>(static_cast<int>(pool.size()), 4));
  Multivector u = random_on(pool, terms, rng, sig);
  u.add_term(Blade{0}, Scalar(1));
  return u;  // e + nilpotent
}

}  // namespace

Multivector sample_invertible(const Signature& sig, SampleStrategy strategy,
                              std::uint64_t seed) {
  Rng rng(seed);
  switch (strategy) {
    case SampleStrategy::Generic: return sample_generic(sig, rng);
    case SampleStrategy::EvenOdd: return sample_even_odd(sig, rng);
    case SampleStrategy::LambdaUnits: return sample_lambda_units(sig, rng);
    case SampleStrategy::VectorProducts: return sample_vector_products(sig, rng);
    case SampleStrategy::NilpotentExp: return sample_nilpotent_exp(sig, rng);
  }
  throw std::logic_error("unknown sampling strategy");
}

Multivector mixed_sample(const Signature& sig, std::uint64_t master_seed, int index) {
  // 8/20 Generic, 3/20 each structured strategy.
  static constexpr SampleStrategy kMix[20] = {
      SampleStrategy::Generic,        SampleStrategy::Generic,
      SampleStrategy::Generic,        SampleStrategy::Generic,
      SampleStrategy::Generic,        SampleStrategy::Generic,
      SampleStrategy::Generic,        SampleStrategy::Generic,
      SampleStrategy::EvenOdd,        SampleStrategy::EvenOdd,
      SampleStrategy::EvenOdd,        SampleStrategy::LambdaUnits,
      SampleStrategy::LambdaUnits,    SampleStrategy::LambdaUnits,
      SampleStrategy::VectorProducts, SampleStrategy::VectorProducts,
      SampleStrategy::VectorProducts, SampleStrategy::NilpotentExp,
      SampleStrategy::NilpotentExp,   SampleStrategy::NilpotentExp,
  };
  std::uint64_t seed = mix_seed(master_seed, static_cast<std::uint64_t>(index));
  try {
    return sample_invertible(sig, kMix[index % 20], seed);
  } catch (const SamplingExhausted&) {
    return sample_invertible(sig, SampleStrategy::Generic, seed);
  }
}

Multivector sample_in(const Subspace& s, std::uint64_t seed) {
  Rng rng(seed);
  const Signature& sig = s.signature();
  if (s.empty()) return Multivector::zero(sig);
  int terms = rng.range(1, std::min<int>(static_cast<int>(s.dim()), 5));
  return random_on(s.blades(), terms, rng, sig);
}

Multivector sample_invertible_in(const Subspace& s, std::uint64_t seed) {
  Rng rng(seed);
  const Signature& sig = s.signature();
  if (s.empty()) throw SamplingExhausted("empty subspace has no units");
  for (int attempt = 0; attempt < kSampleRetryCap; ++attempt) {
    int terms = rng.range(1, std::max(1, std::min<int>(static_cast<int>(s.dim()), 5)));
    Multivector u = random_on(s.blades(), terms, rng, sig);
    if (s.contains(Blade{0}) && u.scalar_part().is_zero() && rng.coin())
      u.add_term(Blade{0}, random_coeff(rng, sig));
    if (is_invertible(u)) return u;
  }
  throw SamplingExhausted("no invertible element found in the subspace");
}

}  // namespace cliffgrp
