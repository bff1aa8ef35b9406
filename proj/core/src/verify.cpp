#include "cliffgrp/verify.hpp"

#include <functional>

#include "cliffgrp/expr.hpp"
#include "cliffgrp/linalg.hpp"

namespace cliffgrp {

nlohmann::json EquivalenceReport::to_json() const {
  nlohmann::json j;
  j["group"] = group.to_string();
  j["signature"] = sig.to_string();
  j["field"] = sig.field() == Field::Real ? "real" : "complex";
  j["samples"] = samples;
  j["agreements"] = agreements;
  if (counterexample) {
    j["counterexample"] = {
        {"element", format_multivector(counterexample->element)},
        {"side", counterexample->definition_verdict ? "definition" : "norm"},
    };
  }
  return j;
}

EquivalenceReport verify_equivalence(TheoremFamily family, int k, const Signature& sig,
                                     int n_samples, std::uint64_t seed) {
  const bool twisted = family == TheoremFamily::QCheck;
  EquivalenceReport report{twisted ? GroupId::qcheck(k) : GroupId::q(k), sig};
  GroupId stab = twisted ? GroupId::gamma_qcheck(k) : GroupId::gamma_q(k);
  GroupId norm = twisted ? GroupId::qcheck(k) : GroupId::q(k);
  for (int i = 0; i < n_samples; ++i) {
    ElementContext ctx(mixed_sample(sig, seed, i));
    bool d = member_definition(stab, ctx).verdict;
    bool m = member_norm(norm, ctx).verdict;
    ++report.samples;
    if (d == m) {
      ++report.agreements;
    } else if (!report.counterexample) {
      report.counterexample = {ctx.element(), d, m};
    }
  }
  return report;
}

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["signature"] = sig.to_string();
  j["field"] = sig.field() == Field::Real ? "real" : "complex";
  j["samples"] = samples;
  j["passed"] = passed();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["relevant"] = c.relevant;
    cj["violations"] = c.violations;
    if (c.counterexample) cj["counterexample"] = format_multivector(*c.counterexample);
    arr.push_back(cj);
  }
  j["checks"] = arr;
  return j;
}

namespace {

struct Harness {
  Signature sig;
  std::vector<ElementContext> contexts;
  SuiteReport report;

  Harness(std::string suite, const Signature& s, int n_samples, std::uint64_t seed)
      : sig(s) {
    report.suite = std::move(suite);
    report.sig = s;
    report.samples = n_samples;
    contexts.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) contexts.emplace_back(mixed_sample(s, seed, i));
  }

  /// Records a check evaluated per sample; `relevant` counts samples where
  /// the premise applied, `ok` decides pass/fail among those.
  void per_sample(const std::string& name,
                  const std::function<bool(ElementContext&)>& relevant,
                  const std::function<bool(ElementContext&)>& ok) {
    CheckResult result{name};
    for (auto& ctx : contexts) {
      if (!relevant(ctx)) continue;
      ++result.relevant;
      if (!ok(ctx)) {
        ++result.violations;
        if (!result.counterexample) result.counterexample = ctx.element();
      }
    }
    report.checks.push_back(std::move(result));
  }

  void inclusion(GroupId small, GroupId big) {
    per_sample(small.to_string() + " <= " + big.to_string(),
               [small](ElementContext& ctx) { return member_verdict(small, ctx); },
               [big](ElementContext& ctx) { return member_verdict(big, ctx); });
  }

  void biconditional(const std::string& name, GroupId a, GroupId b) {
    per_sample(name, [](ElementContext&) { return true; },
               [a, b](ElementContext& ctx) {
                 return member_verdict(a, ctx) == member_verdict(b, ctx);
               });
  }

  /// All groups in the chain agree with each other and with the anchor,
  /// when an anchor predicate is given.
  void chain(const std::string& name, const std::vector<GroupId>& groups,
             const std::function<bool(ElementContext&)>* anchor) {
    per_sample(name, [](ElementContext&) { return true; },
               [groups, anchor](ElementContext& ctx) {
                 bool first = member_verdict(groups.front(), ctx);
                 for (std::size_t i = 1; i < groups.size(); ++i)
                   if (member_verdict(groups[i], ctx) != first) return false;
                 if (anchor && (*anchor)(ctx) != first) return false;
                 return true;
               });
  }

  /// Constructed members of a set must satisfy every group in the chain.
  void constructed_members(const std::string& name, const std::vector<GroupId>& groups,
                           const std::vector<Multivector>& members) {
    CheckResult result{name};
    for (const auto& t : members) {
      ElementContext ctx(t);
      ++result.relevant;
      bool ok = true;
      for (const auto& g : groups)
        if (!member_verdict(g, ctx)) ok = false;
      if (!ok) {
        ++result.violations;
        if (!result.counterexample) result.counterexample = t;
      }
    }
    report.checks.push_back(std::move(result));
  }
};

bool parity_pure(const Multivector& t) {
  return t.project_parity(0) == t || t.project_parity(1) == t;
}

bool scalar_only(const Multivector& t) {
  return t == Multivector::basis_blade(t.signature(), Blade{0}, t.scalar_part());
}

bool even_only(const Multivector& t) { return t.project_parity(0) == t; }

void add_low_dimension_chains(Harness& h, std::uint64_t seed) {
  const Signature& sig = h.sig;
  const int n = sig.n();
  const int r = sig.r();
  if (n > 2) return;

  using G = GroupTag;
  auto anchor_invertible = std::function<bool(ElementContext&)>(
      [](ElementContext& ctx) { return ctx.invertible(); });
  auto anchor_pp = std::function<bool(ElementContext&)>(
      [](ElementContext& ctx) { return ctx.invertible() && parity_pure(ctx.element()); });
  auto anchor_scalar = std::function<bool(ElementContext&)>(
      [](ElementContext& ctx) { return ctx.invertible() && scalar_only(ctx.element()); });
  auto anchor_even = std::function<bool(ElementContext&)>(
      [](ElementContext& ctx) { return ctx.invertible() && even_only(ctx.element()); });

  std::vector<GroupId> full, mid, small;
  const std::function<bool(ElementContext&)>* small_anchor = &anchor_pp;
  if (n == 1 && r == 0) {
    full = {{G::P}, {G::PLambda}, GroupId::q(0), GroupId::q(1), GroupId::q(2),
            GroupId::q(3), GroupId::qcheck(2), GroupId::qcheck(3), {G::A01},
            {G::A23},       {G::B12},          {G::B03},          {G::BCheck01},
            {G::BCheck23}};
    small = {{G::PPlusMinus}, {G::PPlusMinusLambda}, GroupId::qcheck(0),
             GroupId::qcheck(1), {G::ACheck12}, {G::ACheck03}};
  } else if (n == 1 && r == 1) {
    full = {{G::P},           {G::PPlusMinusLambda}, {G::PLambda},
            GroupId::q(0),    GroupId::q(1),         GroupId::q(2),
            GroupId::q(3),    GroupId::qcheck(1),    GroupId::qcheck(2),
            GroupId::qcheck(3), {G::A01},            {G::A23},
            {G::B12},         {G::B03},              {G::BCheck01},
            {G::BCheck23},    {G::ACheck12}};
    small = {{G::PPlusMinus}, GroupId::qcheck(0), {G::ACheck03}};
    small_anchor = &anchor_scalar;
  } else if (n == 2 && r == 0) {
    full = {GroupId::q(3), GroupId::q(0), GroupId::qcheck(2), GroupId::qcheck(3),
            {G::B12},      {G::B03},      {G::BCheck01},      {G::BCheck23}};
    small = {{G::PPlusMinus}, {G::P},        {G::PPlusMinusLambda}, {G::PLambda},
             GroupId::q(1),   GroupId::q(2), GroupId::qcheck(0),    GroupId::qcheck(1),
             {G::A01},        {G::A23},      {G::ACheck12},         {G::ACheck03}};
  } else if (n == 2 && r == 1) {
    full = {GroupId::q(3), GroupId::q(0), GroupId::qcheck(2), GroupId::qcheck(3),
            {G::B12},      {G::B03},      {G::BCheck01},      {G::BCheck23}};
    mid = {{G::PPlusMinusLambda}, {G::PLambda}, GroupId::q(2), GroupId::qcheck(1),
           {G::A23},              {G::ACheck12}};
    small = {{G::PPlusMinus}, {G::P},   GroupId::q(1), GroupId::qcheck(0),
             {G::A01},        {G::ACheck03}};
  } else {  // n == 2, r == 2
    full = {{G::PPlusMinusLambda}, {G::PLambda},       GroupId::q(0),
            GroupId::q(2),         GroupId::q(3),      GroupId::qcheck(1),
            GroupId::qcheck(2),    GroupId::qcheck(3), {G::B12},
            {G::B03},              {G::BCheck01},      {G::BCheck23},
            {G::ACheck12},         {G::A23}};
    small = {{G::PPlusMinus}, {G::P},   GroupId::q(1), GroupId::qcheck(0),
             {G::A01},        {G::ACheck03}};
    small_anchor = &anchor_even;
  }

  h.chain("low-dim chain: whole unit group", full, &anchor_invertible);
  h.chain("low-dim chain: small group", small, small_anchor);
  if (!mid.empty()) {
    // No pointwise anchor for (parity-pure units) * (Grassmann units);
    // cross-agreement plus constructed members cover it.
    h.chain("low-dim chain: middle group", mid, nullptr);
    std::vector<Multivector> members;
    using SD = SubspaceDescriptor;
    Subspace lambda = expand(SD{SD::lambda_parity(0), SD::lambda_parity(1)}, sig);
    for (int i = 0; i < 32; ++i) {
      Multivector s = sample_invertible(sig, SampleStrategy::EvenOdd, mix_seed(seed, 9000 + i));
      Multivector l = sample_invertible_in(lambda, mix_seed(seed, 9100 + i));
      members.push_back(s * l);
    }
    h.constructed_members("low-dim chain: middle group constructed members", mid, members);
  }
}

}  // namespace

SuiteReport verify_inclusions(const Signature& sig, int n_samples, std::uint64_t seed) {
  Harness h("inclusions", sig, n_samples, seed);

  // Stabilizer chain: type 1 below every type, type 0 above every type.
  for (int m = 0; m < 4; ++m) {
    if (m != 1) h.inclusion(GroupId::q(1), GroupId::q(m));
    if (m != 0) h.inclusion(GroupId::q(m), GroupId::q(0));
  }

  // Connections with the parity-preserving groups.
  h.inclusion(GroupId::q(1), {GroupTag::P});
  h.inclusion(GroupId::q(2), {GroupTag::PLambda});
  h.inclusion(GroupId::qcheck(1), {GroupTag::PPlusMinusLambda});
  for (int m = 0; m < 4; ++m) h.inclusion(GroupId::qcheck(m), GroupId::q(0));
  h.inclusion(GroupId::qcheck(1), GroupId::q(2));
  h.inclusion(GroupId::qcheck(1), GroupId::qcheck(3));

  // A/B-family connections; the type-1 one is an equality.
  h.per_sample("Q1 == A01 & B12",
               [](ElementContext&) { return true; },
               [](ElementContext& ctx) {
                 bool q = member_verdict(GroupId::q(1), ctx);
                 bool ab = member_verdict({GroupTag::A01}, ctx) &&
                           member_verdict({GroupTag::B12}, ctx);
                 return q == ab;
               });
  auto pair_into = [&h](GroupTag a, GroupTag b, GroupId target) {
    h.per_sample(GroupId{a}.to_string() + " & " + GroupId{b}.to_string() +
                     " <= " + target.to_string(),
                 [a, b](ElementContext& ctx) {
                   return member_verdict({a}, ctx) && member_verdict({b}, ctx);
                 },
                 [target](ElementContext& ctx) { return member_verdict(target, ctx); });
  };
  pair_into(GroupTag::A23, GroupTag::B03, GroupId::q(3));
  pair_into(GroupTag::A01, GroupTag::B03, GroupId::q(0));
  pair_into(GroupTag::A23, GroupTag::B12, GroupId::q(2));
  pair_into(GroupTag::ACheck12, GroupTag::BCheck01, GroupId::qcheck(1));
  pair_into(GroupTag::ACheck12, GroupTag::BCheck23, GroupId::qcheck(2));
  pair_into(GroupTag::ACheck03, GroupTag::BCheck23, GroupId::qcheck(3));
  pair_into(GroupTag::ACheck03, GroupTag::BCheck01, GroupId::qcheck(0));

  // Clifford and Lipschitz groups coincide with type 1 in low dimension.
  if (sig.n() <= 4) {
    h.biconditional("Gamma == Q1 (n<=4)", GroupId::clifford(), GroupId::q(1));
    h.biconditional("GammaPM == Qc1 (n<=4)", GroupId::lipschitz(), GroupId::qcheck(1));
  }

  // The stabilizer definitions of the A/B and P families against their
  // norm-function characterizations.
  for (GroupTag tag : {GroupTag::A01, GroupTag::B12, GroupTag::A23, GroupTag::B03,
                       GroupTag::ACheck12, GroupTag::ACheck03, GroupTag::BCheck01,
                       GroupTag::BCheck23, GroupTag::PPlusMinus, GroupTag::P,
                       GroupTag::PPlusMinusLambda, GroupTag::PLambda}) {
    GroupId g{tag};
    h.per_sample(g.to_string() + ": stabilizer == norm form",
                 [](ElementContext&) { return true; },
                 [g](ElementContext& ctx) {
                   return member_definition(g, ctx).verdict ==
                          member_norm(g, ctx).verdict;
                 });
  }

  add_low_dimension_chains(h, seed);
  return std::move(h.report);
}

SuiteReport verify_kernels(const Signature& sig, int n_samples, std::uint64_t seed) {
  Harness h("kernels", sig, n_samples, seed);
  using SD = SubspaceDescriptor;
  const Subspace lambda_even = expand(SD{SD::lambda_parity(0)}, sig);
  const Subspace lambda = expand(SD{SD::lambda_parity(0), SD::lambda_parity(1)}, sig);
  const Subspace z1 = closed_form_centralizer(1, false, sig);

  enum class Act { Plain, Check, Tilde };
  auto acts_trivially = [&sig](const Multivector& t, Act act) {
    auto w = inverse(t);
    if (!w) return false;
    for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) {
      Multivector u = Multivector::basis_blade(sig, Blade{m});
      Multivector image = act == Act::Plain   ? adjoint(t, *w, u)
                          : act == Act::Check ? adjoint_check(t, *w, u)
                                              : adjoint_tilde(t, *w, u);
      if (!(image == u)) return false;
    }
    return true;
  };

  struct KernelCase {
    const char* name;
    const Subspace* set;
    Act act;
  };
  const KernelCase cases[] = {
      {"even Grassmann units fix everything under the twisted action", &lambda_even, Act::Check},
      {"central units fix everything under the plain action", &z1, Act::Plain},
      {"Grassmann units fix everything under the parity-split action", &lambda, Act::Tilde},
  };
  int case_index = 0;
  for (const auto& c : cases) {
    CheckResult result{c.name};
    for (int i = 0; i < n_samples; ++i) {
      Multivector t = sample_invertible_in(*c.set, mix_seed(seed, 1000 * (case_index + 1) + i));
      ++result.relevant;
      if (!acts_trivially(t, c.act)) {
        ++result.violations;
        if (!result.counterexample) result.counterexample = t;
      }
    }
    h.report.checks.push_back(std::move(result));
    ++case_index;
  }

  // Converse direction on the mixed samples: trivial action happens only on
  // the kernel sets.
  h.per_sample("trivial plain action only for central units",
               [](ElementContext& ctx) { return ctx.invertible(); },
               [&](ElementContext& ctx) {
                 return acts_trivially(ctx.element(), Act::Plain) ==
                        z1.contains(ctx.element());
               });
  h.per_sample("trivial twisted action only for even Grassmann units",
               [](ElementContext& ctx) { return ctx.invertible(); },
               [&](ElementContext& ctx) {
                 return acts_trivially(ctx.element(), Act::Check) ==
                        lambda_even.contains(ctx.element());
               });
  h.per_sample("trivial parity-split action only for Grassmann units",
               [](ElementContext& ctx) { return ctx.invertible(); },
               [&](ElementContext& ctx) {
                 return acts_trivially(ctx.element(), Act::Tilde) ==
                        lambda.contains(ctx.element());
               });
  return std::move(h.report);
}

SuiteReport verify_centralizers(const Signature& sig) {
  SuiteReport report;
  report.suite = "centralizers";
  report.sig = sig;
  report.samples = 0;

  auto compare = [&report](const std::string& name, const Subspace& closed,
                           const Subspace& brute) {
    CheckResult result{name};
    result.relevant = 1;
    if (closed != brute) result.violations = 1;
    report.checks.push_back(std::move(result));
  };

  for (int m = 0; m <= sig.n(); ++m) {
    for (bool twisted : {false, true}) {
      std::string name = std::string(twisted ? "twisted " : "") + "centralizer of grade " +
                         std::to_string(m);
      compare(name, closed_form_centralizer(m, twisted, sig),
              bruteforce_centralizer(grade_subspace(m, sig), twisted, sig));
    }
  }
  for (int k = 0; k <= 3; ++k) {
    for (bool twisted : {false, true}) {
      std::string name = std::string(twisted ? "twisted " : "") + "type-" +
                         std::to_string(k) + " centralizer";
      compare(name, closed_form_type_centralizer(k, twisted, sig),
              bruteforce_type_centralizer(k, twisted, sig));
    }
  }
  // Even projections of the plain and twisted grade centralizers coincide.
  for (int m = 0; m <= sig.n(); ++m) {
    compare("even parts coincide at grade " + std::to_string(m),
            bruteforce_centralizer(grade_subspace(m, sig), false, sig).even_part(),
            bruteforce_centralizer(grade_subspace(m, sig), true, sig).even_part());
  }
  return report;
}

}  // namespace cliffgrp
