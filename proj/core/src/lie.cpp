#include "cliffgrp/lie.hpp"

#include <stdexcept>

namespace cliffgrp {

namespace {

using SD = SubspaceDescriptor;

SD table1_descriptor_q(int k, int n4, bool full_null, int n) {
  SD d;
  d.add(SD::qtype(2)).add(SD::lambda_qtype(0));
  switch (k) {
    case 1:
      if (n4 == 1 || n4 == 3) d.add(SD::pseudoscalar());
      return d;
    case 2:
      d.add(SD::lambda_parity(1));
      if (n4 != 2 && !full_null) d.add(SD::pseudoscalar());
      return d;
    case 3:
      switch (n4) {
        case 2:
          return d.add(SD::lambda_grade(n - 1)).add(SD::product(1, n - 2));
        case 3:
          return d.add(SD::pseudoscalar())
              .add(SD::lambda_grade(n - 2))
              .add(SD::product(1, n - 3));
        case 0:
          return d.add(SD::lambda_grade(n - 1))
              .add(SD::product(2, n - 2))
              .add(SD::product(1, n - 2))
              .add(SD::product(1, n - 1));
        default:  // n4 == 1
          return d.add(SD::pseudoscalar())
              .add(SD::lambda_grade(n - 2))
              .add(SD::product(2, n - 3))
              .add(SD::product(1, n - 3))
              .add(SD::product(1, n - 2));
      }
    case 0:
      d.add(SD::lambda_parity(1));
      if (full_null && n4 != 2) return d;
      switch (n4) {
        case 3:
          return d.add(SD::pseudoscalar()).add(SD::product(1, n - 3)).add(SD::product(2, n - 4));
        case 0:
          return d.add(SD::pseudoscalar()).add(SD::product(1, n - 2)).add(SD::product(2, n - 3));
        case 2:
          return d.add(SD::product(1, n - 3))
              .add(SD::product(1, n - 2))
              .add(SD::product(2, n - 4))
              .add(SD::product(2, n - 3));
        default:  // n4 == 1
          return d.add(SD::pseudoscalar())
              .add(SD::product(1, n - 3))
              .add(SD::product(1, n - 2))
              .add(SD::product(2, n - 4))
              .add(SD::product(2, n - 3));
      }
  }
  throw std::invalid_argument("quaternion type must be 0..3");
}

SD table1_descriptor_qcheck(int k, int n4, bool full_null, int n) {
  SD d;
  d.add(SD::qtype(2)).add(SD::lambda_qtype(0));
  switch (k) {
    case 1:
      return d.add(SD::lambda_parity(1));
    case 2:
      if (n4 == 2 || (n4 == 0 && full_null))
        return d.add(SD::lambda_grade(n - 1)).add(SD::product(1, n - 2));
      if (n4 == 1 || n4 == 3)
        return d.add(SD::lambda_grade(n)).add(SD::product(1, n - 1));
      return d.add(SD::pseudoscalar())
          .add(SD::lambda_grade(n - 1))
          .add(SD::product(1, n - 2));
    case 3:
      d.add(SD::lambda_parity(1));
      if (n4 == 2) return d.add(SD::product(1, n - 2)).add(SD::product(2, n - 3));
      if (n4 == 3) return d.add(SD::product(1, n - 1)).add(SD::product(2, n - 2));
      return d.add(SD::product(1, n - 2))
          .add(SD::product(1, n - 1))
          .add(SD::product(2, n - 3))
          .add(SD::product(2, n - 2));
    case 0:
      if (n4 == 3 || (n4 == 0 && full_null)) return d;
      if (n4 == 0) return d.add(SD::pseudoscalar());
      if (n4 == 2) return d.add(SD::product(1, n - 3)).add(SD::product(2, n - 4));
      return d.add(SD::product(1, n - 2)).add(SD::product(2, n - 3));  // n4 == 1
  }
  throw std::invalid_argument("quaternion type must be 0..3");
}

}  // namespace

Subspace table1_algebra(GroupId g, const Signature& sig) {
  const int n4 = sig.n() % 4;
  const bool full_null = sig.r() == sig.n();
  if (g.tag == GroupTag::Q)
    return expand(table1_descriptor_q(g.k, n4, full_null, sig.n()), sig);
  if (g.tag == GroupTag::QCheck)
    return expand(table1_descriptor_qcheck(g.k, n4, full_null, sig.n()), sig);
  throw std::invalid_argument("closed-form Lie algebras cover the Q families only");
}

Subspace tangent_oracle(GroupId g, const Signature& sig) {
  bool twisted;
  if (g.tag == GroupTag::Q)
    twisted = false;
  else if (g.tag == GroupTag::QCheck)
    twisted = true;
  else
    throw std::invalid_argument("tangent oracle covers the Q families only");
  const Subspace target = closed_form_type_centralizer(g.k, twisted, sig);

  const auto order = blade_order(sig);
  const std::size_t dim = order.size();
  // Both symmetrized images X + reverse(X) and X + cliffconj(X) are
  // blade-diagonal; a row per excluded blade and conjugation pins the
  // coefficients that must vanish.
  Matrix system(0, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (target.contains(order[a])) continue;
    const int grade = order[a].grade();
    Matrix rows(2, dim);
    rows.at(0, a) = Scalar(1 + conjugation_sign(Conjugation::Reversion, grade));
    rows.at(1, a) = Scalar(1 + conjugation_sign(Conjugation::CliffordConjugation, grade));
    system.append_rows(rows);
  }
  auto basis = nullspace(std::move(system));
  std::vector<Blade> blades;
  for (const auto& vec : basis) {
    int support = -1;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (vec[i].is_zero()) continue;
      if (support >= 0) throw NonMonomialSolution("tangent space is not a basis-blade span");
      support = static_cast<int>(i);
    }
    if (support >= 0) blades.push_back(order[support]);
  }
  return Subspace(sig, std::move(blades));
}

bool closure_check(const Subspace& s) {
  const Signature& sig = s.signature();
  for (Blade a : s.blades()) {
    for (Blade b : s.blades()) {
      auto [s1, c] = blade_product(a, b, sig);
      auto [s2, c2] = blade_product(b, a, sig);
      (void)c2;  // same symmetric difference
      if (s1 != s2 && !s.contains(c)) return false;
    }
  }
  return true;
}

StructureConstants StructureConstants::zero(int dim) {
  StructureConstants sc;
  sc.dim = dim;
  sc.bracket.assign(dim, std::vector<std::vector<std::pair<int, Rational>>>(dim));
  return sc;
}

void StructureConstants::add_bracket(int i, int j, int k, const Rational& c) {
  bracket[i][j].emplace_back(k, c);
  bracket[j][i].emplace_back(k, Rational(-c));
}

std::vector<Rational> StructureConstants::apply_bracket(
    const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  std::vector<Rational> out(dim, Rational(0));
  for (int i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (v[j] == 0) continue;
      for (const auto& [k, c] : bracket[i][j]) out[k] += u[i] * v[j] * c;
    }
  }
  return out;
}

StructureConstants StructureConstants::from_subspace(const Subspace& s) {
  const Signature& sig = s.signature();
  const auto& blades = s.blades();
  const int m = static_cast<int>(blades.size());
  auto index_of = [&blades](Blade b) {
    for (std::size_t i = 0; i < blades.size(); ++i)
      if (blades[i] == b) return static_cast<int>(i);
    return -1;
  };
  const bool complex = sig.field() == Field::Complex;
  StructureConstants sc = zero(complex ? 2 * m : m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto [s1, c] = blade_product(blades[i], blades[j], sig);
      auto [s2, c2] = blade_product(blades[j], blades[i], sig);
      (void)c2;
      int coeff = s1 - s2;
      if (coeff == 0) continue;
      int k = index_of(c);
      if (k < 0) throw NotClosed("subspace is not closed under the commutator");
      if (!complex) {
        sc.add_bracket(i, j, k, coeff);
      } else {
        // Realified: even index = blade, odd index = i * blade.
        sc.add_bracket(2 * i, 2 * j, 2 * k, coeff);
        sc.add_bracket(2 * i, 2 * j + 1, 2 * k + 1, coeff);
        sc.add_bracket(2 * i + 1, 2 * j, 2 * k + 1, coeff);
        sc.add_bracket(2 * i + 1, 2 * j + 1, 2 * k, -coeff);
      }
    }
  }
  return sc;
}

StructureConstants StructureConstants::direct_sum(
    const std::vector<StructureConstants>& parts) {
  int total = 0;
  for (const auto& p : parts) total += p.dim;
  StructureConstants sc = zero(total);
  int offset = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.dim; ++i)
      for (int j = 0; j < p.dim; ++j)
        for (const auto& [k, c] : p.bracket[i][j])
          sc.bracket[offset + i][offset + j].emplace_back(offset + k, c);
    offset += p.dim;
  }
  return sc;
}

nlohmann::json LieFingerprint::to_json() const {
  nlohmann::json j;
  j["dim"] = dim;
  j["center_dim"] = center_dim;
  j["derived_dims"] = derived_dims;
  j["nilpotent"] = nilpotent;
  j["solvable"] = solvable;
  j["killing"] = {{"pos", killing.pos}, {"neg", killing.neg}, {"zero", killing.zero}};
  return j;
}

namespace {

// Row span of a list of coordinate vectors, canonicalized by RREF.
std::vector<std::vector<Rational>> span_basis(
    const std::vector<std::vector<Rational>>& vectors, int dim) {
  if (vectors.empty()) return {};
  Matrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = Scalar(vectors[i][j]);
  auto pivots = rref_in_place(m);
  std::vector<std::vector<Rational>> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Rational> row(dim);
    for (int j = 0; j < dim; ++j) row[j] = m.at(i, j).real();
    basis.push_back(std::move(row));
  }
  return basis;
}

std::vector<std::vector<Rational>> bracket_span(const StructureConstants& sc,
                                                const std::vector<std::vector<Rational>>& a,
                                                const std::vector<std::vector<Rational>>& b) {
  std::vector<std::vector<Rational>> products;
  for (const auto& u : a)
    for (const auto& v : b) {
      auto w = sc.apply_bracket(u, v);
      bool zero = true;
      for (const auto& x : w)
        if (x != 0) {
          zero = false;
          break;
        }
      if (!zero) products.push_back(std::move(w));
    }
  return span_basis(products, sc.dim);
}

}  // namespace

LieFingerprint fingerprint(const StructureConstants& sc) {
  LieFingerprint fp;
  fp.dim = sc.dim;
  const int d = sc.dim;

  // Center: x with [x, basis_j] = 0 for all j.
  Matrix center_system(static_cast<std::size_t>(d) * d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      for (const auto& [k, c] : sc.bracket[i][j])
        center_system.at(static_cast<std::size_t>(j) * d + k, i) += Scalar(c);
  fp.center_dim = d - static_cast<int>(rank(std::move(center_system)));

  std::vector<std::vector<Rational>> whole;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> e(d, Rational(0));
    e[i] = 1;
    whole.push_back(std::move(e));
  }

  // Derived series.
  auto current = whole;
  while (true) {
    auto next = bracket_span(sc, current, current);
    fp.derived_dims.push_back(static_cast<int>(next.size()));
    if (next.empty() || next.size() == current.size()) break;
    current = std::move(next);
  }
  fp.solvable = fp.derived_dims.back() == 0;

  // Lower central series.
  auto lcs = bracket_span(sc, whole, whole);
  while (true) {
    if (lcs.empty()) {
      fp.nilpotent = true;
      break;
    }
    auto next = bracket_span(sc, whole, lcs);
    if (next.size() == lcs.size()) {
      fp.nilpotent = false;
      break;
    }
    lcs = std::move(next);
  }

  // Killing form.
  std::vector<Matrix> ad;
  ad.reserve(d);
  for (int i = 0; i < d; ++i) {
    Matrix a(d, d);
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : sc.bracket[i][j]) a.at(k, j) += Scalar(c);
    ad.push_back(std::move(a));
  }
  Matrix killing(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Scalar tr(0);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) tr += ad[i].at(a, b) * ad[j].at(b, a);
      killing.at(i, j) = tr;
      killing.at(j, i) = tr;
    }
  fp.killing = symmetric_signature(std::move(killing));
  return fp;
}

LieFingerprint fingerprint(const Subspace& s) {
  if (!closure_check(s)) throw NotClosed("subspace is not closed under the commutator");
  return fingerprint(StructureConstants::from_subspace(s));
}

namespace {

void add_complex_bracket(StructureConstants& sc, int i, int j, int k, const Rational& c) {
  sc.add_bracket(2 * i, 2 * j, 2 * k, c);
  sc.add_bracket(2 * i, 2 * j + 1, 2 * k + 1, c);
  sc.add_bracket(2 * i + 1, 2 * j, 2 * k + 1, c);
  sc.add_bracket(2 * i + 1, 2 * j + 1, 2 * k, -c);
}

}  // namespace

StructureConstants reference_algebra(const std::string& name) {
  if (name == "gl1") return StructureConstants::zero(1);
  if (name == "gl1C") return StructureConstants::zero(2);
  if (name == "heis3") {
    auto sc = StructureConstants::zero(3);
    sc.add_bracket(0, 1, 2, 1);
    return sc;
  }
  if (name == "heis4") {
    // Strictly upper triangular with the (2,3) slot frozen; the two
    // off-center pairs both bracket onto the corner entry.
    auto sc = StructureConstants::zero(5);
    sc.add_bracket(0, 2, 4, 1);
    sc.add_bracket(1, 3, 4, 1);
    return sc;
  }
  if (name == "p11") {
    auto sc = StructureConstants::zero(3);
    sc.add_bracket(0, 2, 0, 1);
    sc.add_bracket(1, 2, 1, -1);
    return sc;
  }
  if (name == "su2") {
    auto sc = StructureConstants::zero(3);
    sc.add_bracket(0, 1, 2, 1);
    sc.add_bracket(1, 2, 0, 1);
    sc.add_bracket(2, 0, 1, 1);
    return sc;
  }
  if (name == "sl2C") {
    // Complex basis (H, E, F), realified to dimension six.
    auto sc = StructureConstants::zero(6);
    add_complex_bracket(sc, 0, 1, 1, 2);   // [H, E] = 2E
    add_complex_bracket(sc, 0, 2, 2, -2);  // [H, F] = -2F
    add_complex_bracket(sc, 1, 2, 0, 1);   // [E, F] = H
    return sc;
  }
  throw std::invalid_argument("unknown reference Lie algebra: " + name);
}

LieFingerprint reference_fingerprint(const std::vector<std::string>& names) {
  std::vector<StructureConstants> parts;
  parts.reserve(names.size());
  for (const auto& n : names) parts.push_back(reference_algebra(n));
  return fingerprint(StructureConstants::direct_sum(parts));
}

ExpCheck nilpotent_exp_check(const Multivector& x, GroupId g) {
  const Signature& sig = x.signature();
  Multivector power = x;
  int index = 1;
  const int cap = static_cast<int>(sig.dim());
  while (!power.is_zero() && index <= cap) {
    power = power * x;
    ++index;
  }
  if (!power.is_zero()) return ExpCheck::Skipped;
  Multivector exp = Multivector::identity(sig);
  Multivector term = Multivector::identity(sig);
  mpz_class factorial = 1;
  for (int j = 1; j < index; ++j) {
    term = term * x;
    factorial *= j;
    exp += Scalar(Rational(1, factorial)) * term;
  }
  return member(g, exp).verdict ? ExpCheck::Member : ExpCheck::NotMember;
}

long cos_quarter_scaled(int n) {
  static constexpr long kPeriod8[8] = {1, 1, 0, -2, -4, -4, 0, 8};
  long value = kPeriod8[n % 8];
  for (int i = 0; i < n / 8; ++i) value *= 16;
  return value;
}

long qtype2_dim(int n) { return ((1L << n) - 2 * cos_quarter_scaled(n)) / 4; }

long lambda_qtype0_dim(int r) {
  if (r == 0) return 1;
  return ((1L << r) + 2 * cos_quarter_scaled(r)) / 4;
}

long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long out = 1;
  for (int i = 0; i < b; ++i) out = out * (a - i) / (i + 1);
  return out;
}

DimFormulas dim_formulas(const Signature& sig) {
  DimFormulas f;
  f.n = sig.n();
  f.r = sig.r();
  f.qtype2 = qtype2_dim(f.n);
  f.pseudoscalar = 1;
  const int pq = sig.p() + sig.q();
  for (int k = 0; k <= pq; ++k) f.grade_pq.push_back(binomial(pq, k));
  for (int k = 0; k <= f.n; ++k)
    f.lambda_k.push_back(k <= f.r ? binomial(f.r, k) : 0);
  f.lambda_odd = f.r == 0 ? 0 : (1L << (f.r - 1));
  f.lambda_qtype0 = lambda_qtype0_dim(f.r);
  return f;
}

nlohmann::json DimFormulas::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["r"] = r;
  j["qtype2"] = qtype2;
  j["pseudoscalar"] = pseudoscalar;
  j["grade_pq"] = grade_pq;
  j["lambda_k"] = lambda_k;
  j["lambda_odd"] = lambda_odd;
  j["lambda_qtype0"] = lambda_qtype0;
  return j;
}

}  // namespace cliffgrp
