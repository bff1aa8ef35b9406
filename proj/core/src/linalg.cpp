#include "cliffgrp/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cliffgrp {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix out(m.rows_, m.cols_);
  for (std::size_t i = 0; i < m.data_.size(); ++i) out.data_[i] = c * m.data_[i];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

void Matrix::append_rows(const Matrix& o) {
  if (cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  data_.insert(data_.end(), o.data_.begin(), o.data_.end());
  rows_ += o.rows_;
}

namespace {

// Fraction-free forward elimination (Bareiss one-step). Returns the pivot
// (row, col) pairs of the resulting echelon form.
std::vector<std::pair<std::size_t, std::size_t>> bareiss_forward(Matrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  Scalar prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(piv, j), m.at(row, j));
    const Scalar pivot = m.at(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const Scalar lead = m.at(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m.at(i, j) = (pivot * m.at(i, j) - lead * m.at(row, j)) / prev;
      m.at(i, col) = Scalar(0);
    }
    prev = pivot;
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_in_place(Matrix& m) {
  auto pivots = bareiss_forward(m);
  // Normalize pivot rows and clear above each pivot.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, c] = *it;
    const Scalar pivot = m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= pivot;
    for (std::size_t i = 0; i < r; ++i) {
      const Scalar lead = m.at(i, c);
      if (lead.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= lead * m.at(r, j);
    }
  }
  std::vector<std::size_t> cols;
  cols.reserve(pivots.size());
  for (auto [r, c] : pivots) cols.push_back(c);
  return cols;
}

std::size_t rank(Matrix m) { return bareiss_forward(m).size(); }

std::vector<std::vector<Scalar>> nullspace(Matrix m) {
  const std::size_t ncols = m.cols();
  auto pivot_cols = rref_in_place(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(ncols, Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[pivot_cols[k]] = -m.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw std::invalid_argument("solve expects a square system");
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  auto pivot_cols = rref_in_place(aug);
  // A pivot in the augmented column marks an inconsistent system.
  if (pivot_cols.size() != n || pivot_cols.back() >= n) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
  return x;
}

Inertia symmetric_signature(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not a square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m.at(i, j).is_real() || m.at(i, j) != m.at(j, i))
        throw std::invalid_argument("symmetric_signature needs a real symmetric matrix");

  auto add_row_col = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    for (std::size_t j = 0; j < n; ++j) m.at(dst, j) += f * m.at(src, j);
    for (std::size_t i = 0; i < n; ++i) m.at(i, dst) += f * m.at(i, src);
  };
  auto swap_row_col = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
  };

  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t d = k + 1;
      while (d < n && m.at(d, d).is_zero()) ++d;
      if (d < n) {
        swap_row_col(k, d);
      } else {
        // All remaining diagonal entries vanish; pull in an off-diagonal one.
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (!m.at(i, j).is_zero()) {
              add_row_col(i, j, Scalar(1));  // diagonal becomes 2*m(i,j)
              swap_row_col(k, i);
              found = true;
            }
        if (!found) break;  // the rest of the block is zero
      }
    }
    const Scalar pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      add_row_col(i, k, -(m.at(i, k) / pivot));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& v = m.at(k, k).real();
    if (v > 0)
      ++out.pos;
    else if (v < 0)
      ++out.neg;
    else
      ++out.zero;
  }
  return out;
}

Matrix left_mult_matrix(const Multivector& u) {
  const Signature& sig = u.signature();
  auto order = blade_order(sig);
  const std::size_t n = order.size();
  Matrix m(n, n);
  // Column j is u * e_{B_j}; row positions follow the same blade order.
  std::vector<std::size_t> pos(sig.dim());
  for (std::size_t i = 0; i < n; ++i) pos[order[i].mask] = i;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [b, c] : u.terms()) {
      auto [sign, blade] = blade_product(b, order[j], sig);
      if (sign == 0) continue;
      Scalar v = c;
      if (sign < 0) v = -v;
      m.at(pos[blade.mask], j) += v;
    }
  }
  return m;
}

namespace {

// u = a*e + N with a != 0 and N in the ideal generated by the null
// generators: N^(r+1) = 0, so the inverse is a finite geometric series.
Multivector unit_plus_nilpotent_inverse(const Multivector& u, const Scalar& a) {
  const Signature& sig = u.signature();
  Scalar inv_a = Scalar(1) / a;
  Multivector m = inv_a * u;
  m.add_term(Blade{0}, Scalar(-1));  // m = N/a, nilpotent
  Multivector acc = Multivector::identity(sig);
  Multivector power = Multivector::identity(sig);
  for (int k = 1; k <= sig.r(); ++k) {
    power = power * m;
    if (power.is_zero()) break;
    acc += (k & 1) ? -power : power;
  }
  return inv_a * acc;
}

}  // namespace

std::optional<Multivector> inverse(const Multivector& u) {
  const Signature& sig = u.signature();
  if (u.is_zero()) return std::nullopt;
  if (u.is_scalar_plus_null_ideal()) {
    Scalar a = u.scalar_part();
    if (a.is_zero()) return std::nullopt;  // nilpotent
    return unit_plus_nilpotent_inverse(u, a);
  }
  Matrix l = left_mult_matrix(u);
  std::vector<Scalar> e0(sig.dim(), Scalar(0));
  e0[0] = Scalar(1);  // identity blade comes first in (grade, mask) order
  auto x = solve(std::move(l), std::move(e0));
  if (!x) return std::nullopt;
  auto order = blade_order(sig);
  Multivector w(sig);
  for (std::size_t i = 0; i < order.size(); ++i) w.add_term(order[i], (*x)[i]);
  // A right inverse in a finite dimensional unital algebra is two sided.
  if (!(w * u == Multivector::identity(sig)))
    throw std::logic_error("one-sided inverse produced; algebra product is broken");
  return w;
}

bool is_invertible(const Multivector& u) {
  if (u.is_zero()) return false;
  if (u.is_scalar_plus_null_ideal()) return !u.scalar_part().is_zero();
  return rank(left_mult_matrix(u)) == u.signature().dim();
}

}  // namespace cliffgrp
