#include "cliffgrp/centralizer.hpp"

#include "cliffgrp/linalg.hpp"

namespace cliffgrp {

Subspace grade_subspace(int m, const Signature& sig) {
  return expand(SubspaceDescriptor{SubspaceDescriptor::grade(m)}, sig);
}

Subspace qtype_subspace(int k, const Signature& sig) {
  return expand(SubspaceDescriptor{SubspaceDescriptor::qtype(k)}, sig);
}

Subspace parity_subspace(int l, const Signature& sig) {
  return expand(SubspaceDescriptor{SubspaceDescriptor::parity(l)}, sig);
}

Subspace bruteforce_centralizer(const Subspace& s, bool twisted, const Signature& sig) {
  if (s.signature() != sig) throw std::invalid_argument("signature mismatch");
  const auto order = blade_order(sig);
  const std::size_t dim = order.size();
  std::vector<std::size_t> pos(sig.dim());
  for (std::size_t i = 0; i < dim; ++i) pos[order[i].mask] = i;

  // One block of 2^n equations per stabilized basis blade V:
  // coefficient-wise X V - V X = 0, with X replaced by hat(X) when twisted.
  Matrix system(0, dim);
  for (Blade v : s.blades()) {
    Matrix block(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
      Blade xa = order[a];
      auto [s1, left] = blade_product(xa, v, sig);
      if (twisted) s1 *= conjugation_sign(Conjugation::GradeInvolution, xa.grade());
      if (s1 != 0) block.at(pos[left.mask], a) += Scalar(s1);
      auto [s2, right] = blade_product(v, xa, sig);
      if (s2 != 0) block.at(pos[right.mask], a) -= Scalar(s2);
    }
    system.append_rows(block);
  }

  auto basis = nullspace(std::move(system));
  std::vector<Blade> blades;
  for (const auto& vec : basis) {
    int support = -1;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (vec[i].is_zero()) continue;
      if (support >= 0)
        throw NonMonomialSolution("centralizer is not a basis-blade span");
      support = static_cast<int>(i);
    }
    if (support >= 0) blades.push_back(order[support]);
  }
  return Subspace(sig, std::move(blades));
}

namespace {

using SD = SubspaceDescriptor;

// {G^k_{p,q} Lambda^l} for l = lo..n; out-of-range grades expand to nothing.
void add_product_range(SD& d, int k, int lo, int n) {
  for (int l = lo; l <= n; ++l) d.add(SD::product(k, l));
}

Subspace closed_z(int m, const Signature& sig) {
  const int n = sig.n();
  const bool odd = n & 1;
  const bool full_null = sig.r() == n;
  SD d;
  switch (m) {
    case 1:
      d.add(SD::lambda_parity(0));
      if (odd) d.add(SD::pseudoscalar());
      break;
    case 2:
      d.add(SD::lambda_parity(0)).add(SD::lambda_parity(1));
      if (!full_null) d.add(SD::pseudoscalar());
      break;
    case 3:
      if (odd) {
        d.add(SD::lambda_parity(0))
            .add(SD::lambda_grade(n - 2))
            .add(SD::product(1, n - 3))
            .add(SD::product(1, n - 2))
            .add(SD::product(2, n - 3))
            .add(SD::pseudoscalar());
      } else {
        d.add(SD::lambda_parity(0)).add(SD::lambda_grade(n - 1)).add(SD::product(2, n - 2));
        add_product_range(d, 1, n - 2, n);
      }
      break;
    case 4:
      d.add(SD::lambda_parity(0))
          .add(SD::lambda_parity(1))
          .add(SD::product(1, n - 3))
          .add(SD::product(1, n - 2))
          .add(SD::product(2, n - 4))
          .add(SD::product(2, n - 3))
          .add(SD::pseudoscalar());
      break;
    default:
      throw std::logic_error("no closed form for this grade");
  }
  return expand(d, sig);
}

Subspace closed_z_check(int m, const Signature& sig) {
  const int n = sig.n();
  const bool odd = n & 1;
  const bool full_null = sig.r() == n;
  SD d;
  switch (m) {
    case 1:
      d.add(SD::lambda_parity(0)).add(SD::lambda_parity(1));
      break;
    case 2:
      if (odd) {
        d.add(SD::lambda_parity(0)).add(SD::lambda_grade(n)).add(SD::product(1, n - 1));
      } else if (!full_null) {
        d.add(SD::lambda_parity(0))
            .add(SD::lambda_grade(n - 1))
            .add(SD::product(1, n - 2))
            .add(SD::pseudoscalar());
      } else {
        d.add(SD::lambda_parity(0)).add(SD::lambda_grade(n - 1));
      }
      break;
    case 3:
      d.add(SD::lambda_parity(0)).add(SD::lambda_parity(1));
      add_product_range(d, 1, n - 2, n);
      add_product_range(d, 2, n - 3, n);
      break;
    default:
      throw std::logic_error("no closed form for this grade");
  }
  return expand(d, sig);
}

}  // namespace

Subspace closed_form_even_z4(const Signature& sig) {
  const int n = sig.n();
  const bool odd = n & 1;
  const bool full_null = sig.r() == n;
  SD d;
  d.add(SD::lambda_parity(0));
  if (odd) {
    d.add(SD::product(1, n - 2)).add(SD::product(2, n - 3));
  } else if (!full_null) {
    d.add(SD::product(1, n - 3)).add(SD::product(2, n - 4)).add(SD::pseudoscalar());
  }
  return expand(d, sig);
}

Subspace closed_form_centralizer(int m, bool twisted, const Signature& sig) {
  if (!twisted && m >= 1 && m <= 4) return closed_z(m, sig);
  if (twisted && m >= 1 && m <= 3) return closed_z_check(m, sig);
  return bruteforce_centralizer(grade_subspace(m, sig), twisted, sig);
}

Subspace closed_form_type_centralizer(int k, bool twisted, const Signature& sig) {
  if (k < 0 || k > 3) throw std::invalid_argument("quaternion type must be 0..3");
  if (k == 0) return twisted ? closed_form_even_z4(sig) : closed_z(4, sig);
  return closed_form_centralizer(k, twisted, sig);
}

Subspace bruteforce_type_centralizer(int k, bool twisted, const Signature& sig) {
  return bruteforce_centralizer(qtype_subspace(k, sig), twisted, sig);
}

}  // namespace cliffgrp
