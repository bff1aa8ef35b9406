#include "cliffgrp/matrep.hpp"

#include <stdexcept>

#include "cliffgrp/expr.hpp"

namespace cliffgrp {

MatrixRep MatrixRep::from_generators(Signature source, std::size_t target_dim,
                                     Field entry_field, std::vector<Matrix> generators) {
  if (generators.size() != static_cast<std::size_t>(source.n()))
    throw std::invalid_argument("one generator image per generator expected");
  for (const auto& g : generators)
    if (g.rows() != target_dim || g.cols() != target_dim)
      throw std::invalid_argument("generator image has the wrong dimension");

  const Matrix id = Matrix::identity(target_dim);
  for (int a = 1; a <= source.n(); ++a) {
    for (int b = a; b <= source.n(); ++b) {
      Matrix anti = generators[a - 1] * generators[b - 1] +
                    generators[b - 1] * generators[a - 1];
      Matrix expected(target_dim, target_dim);
      if (a == b) expected = Scalar(2 * source.metric(a)) * id;
      if (!(anti == expected))
        throw std::invalid_argument("generator images violate the defining relations");
    }
  }

  MatrixRep rep(std::move(source), target_dim, entry_field);
  rep.blade_images_.assign(rep.source_.dim(), Matrix(target_dim, target_dim));
  rep.blade_images_[0] = id;
  for (std::uint32_t m = 1; m < rep.source_.dim(); ++m) {
    int low = std::countr_zero(m);
    std::uint32_t rest = m & (m - 1);
    // e_A = e_low * e_rest with low the smallest index
    rep.blade_images_[m] = generators[low] * rep.blade_images_[rest];
  }
  return rep;
}

const Matrix& MatrixRep::generator_image(int a) const {
  if (a < 1 || a > source_.n()) throw std::out_of_range("generator index out of range");
  return blade_images_[std::uint32_t{1} << (a - 1)];
}

const Matrix& MatrixRep::blade_image(Blade b) const {
  if (b.mask >= blade_images_.size()) throw std::out_of_range("blade not valid for signature");
  return blade_images_[b.mask];
}

Matrix MatrixRep::apply(const Multivector& u) const {
  if (u.signature() != source_) throw std::invalid_argument("signature mismatch");
  Matrix out(d_, d_);
  for (const auto& [b, c] : u.terms()) out = out + c * blade_images_[b.mask];
  return out;
}

bool MatrixRep::faithful() const {
  // Independence over the source field: a real algebra with complex matrix
  // entries needs its entries split into real and imaginary columns.
  const std::size_t n_blades = blade_images_.size();
  const bool split = source_.field() == Field::Real && field_ == Field::Complex;
  Matrix flat(n_blades, d_ * d_ * (split ? 2 : 1));
  for (std::size_t i = 0; i < n_blades; ++i)
    for (std::size_t r = 0; r < d_; ++r)
      for (std::size_t c = 0; c < d_; ++c) {
        const Scalar& v = blade_images_[i].at(r, c);
        if (split) {
          flat.at(i, 2 * (r * d_ + c)) = Scalar(v.real());
          flat.at(i, 2 * (r * d_ + c) + 1) = Scalar(v.imag());
        } else {
          flat.at(i, r * d_ + c) = v;
        }
      }
  return rank(std::move(flat)) == n_blades;
}

bool MatrixRep::homomorphism_check() const {
  for (std::uint32_t a = 0; a < blade_images_.size(); ++a) {
    for (std::uint32_t b = 0; b < blade_images_.size(); ++b) {
      auto [sign, blade] = blade_product(Blade{a}, Blade{b}, source_);
      Matrix expected = Scalar(sign) * blade_images_[blade.mask];
      if (!(blade_images_[a] * blade_images_[b] == expected)) return false;
    }
  }
  return faithful();
}

MatrixRep MatrixRep::corrupted(int generator) const {
  MatrixRep rep(source_, d_, field_);
  rep.blade_images_ = blade_images_;
  std::uint32_t mask = std::uint32_t{1} << (generator - 1);
  rep.blade_images_[mask] = Scalar(-1) * rep.blade_images_[mask];
  return rep;
}

namespace {

Matrix mat2(std::initializer_list<Scalar> entries) {
  Matrix m(2, 2);
  auto it = entries.begin();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = *it++;
  return m;
}

Matrix mat4(std::initializer_list<int> entries) {
  Matrix m(4, 4);
  auto it = entries.begin();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Scalar(*it++);
  return m;
}

}  // namespace

MatrixRep fixed_rep(FixedRep name) {
  switch (name) {
    case FixedRep::Lambda1_Mat2: {
      Matrix e1 = mat2({Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
      return MatrixRep::from_generators(Signature(0, 0, 1), 2, Field::Real, {e1});
    }
    case FixedRep::Lambda2_Mat4: {
      Matrix e1 = mat4({0, 1, 0, 0,
                        0, 0, 0, 0,
                        0, 0, 0, 1,
                        0, 0, 0, 0});
      Matrix e2 = mat4({0, 0, 1, 0,
                        0, 0, 0, -1,
                        0, 0, 0, 0,
                        0, 0, 0, 0});
      return MatrixRep::from_generators(Signature(0, 0, 2), 4, Field::Real, {e1, e2});
    }
    case FixedRep::G011_Mat2C: {
      const Scalar i = Scalar::i();
      Matrix e1 = mat2({i, Scalar(0), Scalar(0), -i});
      Matrix e2 = mat2({Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
      return MatrixRep::from_generators(Signature(0, 1, 1), 2, Field::Complex, {e1, e2});
    }
  }
  throw std::logic_error("unknown fixed representation");
}

Multivector CjwEmbedding::apply(const Multivector& u) const {
  if (u.signature() != source) throw std::invalid_argument("signature mismatch");
  Multivector out(target);
  for (const auto& [b, c] : u.terms()) {
    Multivector image = Multivector::identity(target);
    for (int a : b.indices()) image = image * generator_images[a - 1];
    out += c * image;
  }
  return out;
}

CjwEmbedding cjw_embed(const Signature& source) {
  const int p = source.p(), q = source.q(), r = source.r();
  Signature target(p + r, q + r, 0, source.field());
  CjwEmbedding emb{source, target, {}};
  const Scalar half = Scalar::from_fraction(1, 2);
  for (int a = 1; a <= source.n(); ++a) {
    if (a <= p) {
      emb.generator_images.push_back(Multivector::generator(target, a));
    } else if (a <= p + q) {
      emb.generator_images.push_back(Multivector::generator(target, r + a));
    } else {
      int pair = a - p - q;  // 1..r
      Multivector plus = Multivector::generator(target, p + pair);
      Multivector minus = Multivector::generator(target, p + r + q + pair);
      emb.generator_images.push_back(half * (plus + minus));
    }
  }
  // The images must reproduce the source relations exactly.
  for (int a = 1; a <= source.n(); ++a)
    for (int b = a; b <= source.n(); ++b) {
      Multivector anti = emb.generator_images[a - 1] * emb.generator_images[b - 1] +
                         emb.generator_images[b - 1] * emb.generator_images[a - 1];
      Multivector expected(target);
      if (a == b)
        expected = Scalar(2 * source.metric(a)) * Multivector::identity(target);
      if (!(anti == expected))
        throw std::logic_error("embedding images violate the source relations");
    }
  return emb;
}

bool pattern_check(const Matrix& m, PatternId pattern) {
  const std::size_t need = (pattern == PatternId::UT2 || pattern == PatternId::SUT2) ? 2 : 4;
  if (m.rows() != need || m.cols() != need)
    throw std::invalid_argument("matrix dimension does not match the pattern");
  auto lower_zero = [&m]() {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!m.at(i, j).is_zero()) return false;
    return true;
  };
  auto unit_diagonal = [&m]() {
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.at(i, i) != Scalar(1)) return false;
    return true;
  };
  switch (pattern) {
    case PatternId::UT2:
    case PatternId::UT4:
      return lower_zero();
    case PatternId::SUT2:
      return lower_zero() && unit_diagonal();
    case PatternId::Heis4:
      return lower_zero() && unit_diagonal() && m.at(1, 2).is_zero();
  }
  return false;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cliffgrp
