#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include <json.hpp>

#include "cliffgrp/centralizer.hpp"
#include "cliffgrp/linalg.hpp"
#include "cliffgrp/subspace.hpp"

namespace cliffgrp {

/// Every group family in scope. The k/l fields carry the quaternion type,
/// parity, or type pair the tag is parameterized by.
enum class GroupTag {
  Clifford,          // stabilizer of G^1 under ad
  Lipschitz,         // stabilizer of G^1 under the twisted action
  GammaQ,            // stabilizer of G^kbar under ad
  GammaQCheck,       //   .. under the twisted action
  GammaQTilde,       //   .. under the parity-split action
  GammaParity,       // stabilizer of G^(l) under ad
  GammaParityCheck,  //   .. twisted
  GammaParityTilde,  //   .. parity-split
  GammaPair,         // stabilizer of G^kbar + G^lbar under ad
  GammaPairCheck,    //   .. twisted
  Q,                 // psi, chi in Z^kbar-units
  QCheck,            // psi, chi in twisted Z^kbar-units
  A01,               // psi in Z^1-units
  B12,               // chi in Z^1-units
  A23,               // psi in (Z^2 int Z^3)-units
  B03,               // chi in Z^3-units
  ACheck12,          // psi in (Zc^1 int Zc^2)-units
  ACheck03,          // psi in (Z^3 int even)-units
  BCheck01,          // chi in (Z^1 int even)-units
  BCheck23,          // chi in (Zc^2 int Zc^3)-units
  PPlusMinus,        // parity-pure units
  P,                 // PPlusMinus times central units
  PPlusMinusLambda,  // PPlusMinus times Grassmann units
  PLambda,           // P times Grassmann units
};

struct GroupId {
  GroupTag tag;
  int k = 0;
  int l = 0;

  static GroupId clifford() { return {GroupTag::Clifford}; }
  static GroupId lipschitz() { return {GroupTag::Lipschitz}; }
  static GroupId q(int k) { return {GroupTag::Q, k}; }
  static GroupId qcheck(int k) { return {GroupTag::QCheck, k}; }
  static GroupId gamma_q(int k) { return {GroupTag::GammaQ, k}; }
  static GroupId gamma_qcheck(int k) { return {GroupTag::GammaQCheck, k}; }
  static GroupId gamma_qtilde(int k) { return {GroupTag::GammaQTilde, k}; }
  static GroupId gamma_parity(int l) { return {GroupTag::GammaParity, 0, l}; }
  static GroupId gamma_parity_check(int l) { return {GroupTag::GammaParityCheck, 0, l}; }
  static GroupId gamma_parity_tilde(int l) { return {GroupTag::GammaParityTilde, 0, l}; }
  static GroupId gamma_pair(int k, int l) { return {GroupTag::GammaPair, k, l}; }
  static GroupId gamma_pair_check(int k, int l) { return {GroupTag::GammaPairCheck, k, l}; }

  std::string to_string() const;
  static std::optional<GroupId> parse(std::string_view text);

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

/// Lazily shared per-element values so a batch of predicates evaluated on
/// the same element computes the inverse and norms once.
class ElementContext {
 public:
  explicit ElementContext(Multivector t) : t_(std::move(t)) {}

  const Multivector& element() const { return t_; }
  const Signature& signature() const { return t_.signature(); }

  bool invertible();
  const Multivector& inv();
  const Multivector& psi();
  const Multivector& chi();
  /// gradeinv(T)^{-1} * T, the twisted-over-plain ratio used by the parity groups.
  const Multivector& hat_inv_ratio();

 private:
  friend bool member_verdict(GroupId g, ElementContext& ctx);

  Multivector t_;
  std::optional<bool> invertible_;
  std::optional<Multivector> inv_, psi_, chi_, ratio_;
  std::map<std::tuple<int, int, int>, bool> verdicts_;
};

struct MembershipReport {
  Multivector element;
  GroupId group;
  bool verdict = false;
  bool not_invertible = false;
  std::optional<Multivector> psi, chi;
  std::optional<Subspace> centralizer;      // the set membership was tested against
  std::optional<Blade> violating_blade;     // first stabilizer failure witness
  std::string detail;

  nlohmann::json to_json() const;
};

/// Setwise-stabilizer membership: conjugates every basis blade of the
/// group's subspace by the group's action and checks containment.
MembershipReport member_definition(GroupId g, ElementContext& ctx);
MembershipReport member_definition(GroupId g, const Multivector& t);

/// Norm-function membership: psi/chi (or the hat-inverse ratio) landing in
/// the group's designated centralizer set of units.
bool has_norm_predicate(GroupId g);
MembershipReport member_norm(GroupId g, ElementContext& ctx);
MembershipReport member_norm(GroupId g, const Multivector& t);

/// The predicate a group is defined by: norm form for the Q/A/B/P families,
/// stabilizer form for the Gamma families.
MembershipReport member(GroupId g, ElementContext& ctx);
MembershipReport member(GroupId g, const Multivector& t);

/// Verdict of member(), cached inside the context so batched suites can ask
/// about the same group repeatedly.
bool member_verdict(GroupId g, ElementContext& ctx);

/// ad, twisted ad, and the parity-split action applied to u.
Multivector adjoint(const Multivector& t, const Multivector& t_inv, const Multivector& u);
Multivector adjoint_check(const Multivector& t, const Multivector& t_inv, const Multivector& u);
Multivector adjoint_tilde(const Multivector& t, const Multivector& t_inv, const Multivector& u);

}  // namespace cliffgrp
