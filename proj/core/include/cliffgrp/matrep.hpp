#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cliffgrp/linalg.hpp"
#include "cliffgrp/multivector.hpp"

namespace cliffgrp {

/// Finite-dimensional matrix model of an algebra: generator images satisfy
/// the defining anticommutation relations (checked at construction), blade
/// images are the ordered products of generator images.
class MatrixRep {
 public:
  static MatrixRep from_generators(Signature source, std::size_t target_dim,
                                   Field entry_field, std::vector<Matrix> generators);

  const Signature& source() const { return source_; }
  std::size_t target_dim() const { return d_; }
  Field entry_field() const { return field_; }

  const Matrix& generator_image(int a) const;
  const Matrix& blade_image(Blade b) const;

  /// Linear extension: sum of coefficient times blade image.
  Matrix apply(const Multivector& u) const;

  /// Multiplicativity over all basis blade pairs plus faithfulness.
  bool homomorphism_check() const;
  /// Linear independence of all 2^n blade images.
  bool faithful() const;

  /// Test hook: flips the sign of one generator image without revalidating.
  MatrixRep corrupted(int generator) const;

 private:
  MatrixRep(Signature source, std::size_t d, Field field)
      : source_(std::move(source)), d_(d), field_(field) {}

  Signature source_;
  std::size_t d_;
  Field field_;
  std::vector<Matrix> blade_images_;  // indexed by blade mask
};

enum class FixedRep { Lambda1_Mat2, Lambda2_Mat4, G011_Mat2C };

/// The three tabulated low-dimensional models.
MatrixRep fixed_rep(FixedRep name);

/// Embedding of a degenerate algebra into the non-degenerate one with r
/// extra plus-minus generator pairs: a null generator maps to half the sum
/// of a fresh positive and a fresh negative generator, everything else maps
/// to itself. Target index layout: source positives, then the fresh
/// positives, then source negatives, then the fresh negatives.
struct CjwEmbedding {
  Signature source;
  Signature target;
  std::vector<Multivector> generator_images;  // one per source generator

  /// Image of a multivector under the induced algebra map.
  Multivector apply(const Multivector& u) const;
};

CjwEmbedding cjw_embed(const Signature& source);

enum class PatternId { UT2, UT4, SUT2, Heis4 };

/// Entries under the pattern's zero mask must be exactly 0, entries under
/// its one mask exactly 1. Throws on a dimension mismatch.
bool pattern_check(const Matrix& m, PatternId pattern);

/// Row-major array of scalar strings such as "3/2" or "1/2+1/2i".
nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace cliffgrp
