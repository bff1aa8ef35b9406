#pragma once

#include <optional>
#include <vector>

#include "cliffgrp/multivector.hpp"
#include "cliffgrp/scalar.hpp"

namespace cliffgrp {

/// Dense matrix of exact scalars, row major.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend Matrix operator*(const Scalar& c, const Matrix& m);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const;
  Matrix transpose() const;
  void append_rows(const Matrix& o);

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form via fraction-free (Bareiss) forward elimination
/// followed by exact normalization. Returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(Matrix m);

/// Canonical nullspace basis obtained from the RREF: one vector per free
/// column, with a 1 in the free position.
std::vector<std::vector<Scalar>> nullspace(Matrix m);

/// Solves A x = b for square A; empty when A is singular.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b);

/// Inertia (n+, n-, n0) of a symmetric matrix over the rationals, computed
/// by exact congruence diagonalization. Imaginary parts must be zero.
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia symmetric_signature(Matrix m);

/// Matrix of left multiplication by u in the canonical (grade, mask) blade
/// order: column j holds the coefficients of u * e_{B_j}.
Matrix left_mult_matrix(const Multivector& u);

/// Exact inverse; empty when u is not invertible. Elements of the form
/// scalar + (null ideal) take a direct geometric-series path, everything
/// else goes through the regular representation.
std::optional<Multivector> inverse(const Multivector& u);

bool is_invertible(const Multivector& u);

}  // namespace cliffgrp
