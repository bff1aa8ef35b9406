#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <cliffgrp/centralizer.hpp>
#include <cliffgrp/expr.hpp>
#include <cliffgrp/lie.hpp>
#include <cliffgrp/matrep.hpp>
#include <cliffgrp/verify.hpp>

namespace {

using namespace cliffgrp;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct SigOption {
  std::string sig = "";
  std::string field = "r";

  Signature parse() const {
    int p = 0, q = 0, r = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(sig);
    if (!(in >> p >> c1 >> q >> c2 >> r) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
      throw CLI::ValidationError("--sig", "expected p,q,r");
    Field f = field == "c" ? Field::Complex : Field::Real;
    return Signature(p, q, r, f);
  }
};

void add_sig_options(CLI::App* cmd, SigOption& opt) {
  cmd->add_option("--sig", opt.sig, "signature p,q,r")->required();
  cmd->add_option("--field", opt.field, "scalar field: r (real) or c (complex)")
      ->check(CLI::IsMember({"r", "c"}));
}

std::string blades_as_text(const Subspace& s) {
  std::string out;
  for (Blade b : s.blades()) {
    if (!out.empty()) out += " ";
    out += b.to_string();
  }
  return out.empty() ? "(empty)" : out;
}

int run_basis(const SigOption& sig_opt, std::optional<int> grade, std::optional<int> type,
              std::optional<int> parity, bool lambda_only, bool json) {
  Signature sig = sig_opt.parse();
  SubspaceDescriptor d;
  using SD = SubspaceDescriptor;
  if (grade) {
    d.add(lambda_only ? SD::lambda_grade(*grade) : SD::grade(*grade));
  } else if (type) {
    d.add(lambda_only ? SD::lambda_qtype(*type) : SD::qtype(*type));
  } else if (parity) {
    d.add(lambda_only ? SD::lambda_parity(*parity) : SD::parity(*parity));
  } else if (lambda_only) {
    d.add(SD::lambda_parity(0)).add(SD::lambda_parity(1));
  } else {
    for (int k = 0; k <= sig.n(); ++k) d.add(SD::grade(k));
  }
  Subspace s = expand(d, sig);
  if (json) {
    nlohmann::json j;
    j["signature"] = sig.to_string();
    j["dim"] = s.dim();
    j["basis"] = s.to_json();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dim " << s.dim() << ": " << blades_as_text(s) << "\n";
  }
  return kExitOk;
}

int run_centralizer(const SigOption& sig_opt, std::optional<int> grade,
                    std::optional<int> type, bool twisted, bool oracle, bool json) {
  Signature sig = sig_opt.parse();
  if (!grade && !type) throw CLI::ValidationError("centralizer", "need --grade or --type");
  Subspace closed = grade ? closed_form_centralizer(*grade, twisted, sig)
                          : closed_form_type_centralizer(*type, twisted, sig);
  bool oracle_agrees = true;
  if (oracle) {
    Subspace brute = grade
                         ? bruteforce_centralizer(grade_subspace(*grade, sig), twisted, sig)
                         : bruteforce_type_centralizer(*type, twisted, sig);
    oracle_agrees = closed == brute;
  }
  if (json) {
    nlohmann::json j;
    j["signature"] = sig.to_string();
    j["twisted"] = twisted;
    if (grade) j["grade"] = *grade;
    if (type) j["type"] = *type;
    j["basis"] = closed.to_json();
    j["dim"] = closed.dim();
    if (oracle) j["oracle_agrees"] = oracle_agrees;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (twisted ? "twisted " : "") << "centralizer, dim " << closed.dim() << ": "
              << blades_as_text(closed) << "\n";
    if (oracle)
      std::cout << "brute-force oracle " << (oracle_agrees ? "agrees" : "DISAGREES") << "\n";
  }
  return oracle_agrees ? kExitOk : kExitVerificationFailed;
}

int run_member(const SigOption& sig_opt, const std::string& group_tag,
               const std::string& element, const std::string& method, bool json) {
  Signature sig = sig_opt.parse();
  auto group = GroupId::parse(group_tag);
  if (!group) throw CLI::ValidationError("--group", "unknown group tag " + group_tag);
  Multivector t = parse_multivector(element, sig);
  ElementContext ctx(t);
  MembershipReport report =
      method == "definition" ? member_definition(*group, ctx)
      : method == "norm"     ? member_norm(*group, ctx)
                             : member(*group, ctx);
  if (json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << group->to_string() << " membership of " << format_multivector(t) << ": "
              << (report.verdict ? "true" : "false") << "\n";
    if (!report.verdict && !report.detail.empty()) std::cout << "  " << report.detail << "\n";
    if (report.violating_blade)
      std::cout << "  violating blade: " << report.violating_blade->to_string() << "\n";
  }
  return kExitOk;
}

int run_lie(const SigOption& sig_opt, const std::string& group_tag, bool json) {
  Signature sig = sig_opt.parse();
  auto group = GroupId::parse(group_tag);
  if (!group || (group->tag != GroupTag::Q && group->tag != GroupTag::QCheck))
    throw CLI::ValidationError("--group", "expected one of q0..q3, qc0..qc3");
  Subspace algebra = table1_algebra(*group, sig);
  Subspace oracle = tangent_oracle(*group, sig);
  bool matches = algebra == oracle && closure_check(algebra);
  LieFingerprint fp = fingerprint(algebra);
  if (json) {
    nlohmann::json j;
    j["group"] = group->to_string();
    j["signature"] = sig.to_string();
    j["field"] = sig.field() == Field::Real ? "real" : "complex";
    j["basis"] = algebra.to_json();
    j["dim"] = algebra.dim();
    j["fingerprint"] = fp.to_json();
    j["matches_table"] = matches;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Lie algebra of " << group->to_string() << " in " << sig.to_string()
              << ": dim " << algebra.dim() << "\n  basis: " << blades_as_text(algebra)
              << "\n  tangent oracle " << (matches ? "agrees" : "DISAGREES")
              << "\n  fingerprint: " << fp.to_json().dump() << "\n";
  }
  return matches ? kExitOk : kExitVerificationFailed;
}

int run_matrep(const std::string& rep_name, const std::string& element,
               const std::string& pattern_name, bool check) {
  FixedRep name;
  if (rep_name == "lambda1")
    name = FixedRep::Lambda1_Mat2;
  else if (rep_name == "lambda2")
    name = FixedRep::Lambda2_Mat4;
  else if (rep_name == "g011")
    name = FixedRep::G011_Mat2C;
  else
    throw CLI::ValidationError("--rep", "expected lambda1, lambda2 or g011");
  MatrixRep rep = fixed_rep(name);

  nlohmann::json j;
  j["rep"] = rep_name;
  j["source"] = rep.source().to_string();
  j["target_dim"] = rep.target_dim();
  bool ok = true;
  if (check) {
    ok = rep.homomorphism_check();
    j["homomorphism"] = ok;
  }
  std::optional<bool> pattern_ok;
  if (!element.empty()) {
    Multivector u = parse_multivector(element, rep.source());
    Matrix m = rep.apply(u);
    j["element"] = format_multivector(u);
    j["matrix"] = matrix_to_json(m);
    if (!pattern_name.empty()) {
      PatternId pat;
      if (pattern_name == "ut2")
        pat = PatternId::UT2;
      else if (pattern_name == "ut4")
        pat = PatternId::UT4;
      else if (pattern_name == "sut2")
        pat = PatternId::SUT2;
      else if (pattern_name == "heis4")
        pat = PatternId::Heis4;
      else
        throw CLI::ValidationError("--pattern", "expected ut2, ut4, sut2 or heis4");
      pattern_ok = pattern_check(m, pat);
      j["pattern"] = pattern_name;
      j["pattern_ok"] = *pattern_ok;
    }
  } else {
    nlohmann::json gens = nlohmann::json::array();
    for (int a = 1; a <= rep.source().n(); ++a)
      gens.push_back(matrix_to_json(rep.generator_image(a)));
    j["generators"] = gens;
  }
  std::cout << j.dump(2) << "\n";
  return ok && pattern_ok.value_or(true) ? kExitOk : kExitVerificationFailed;
}

int run_verify(const SigOption& sig_opt, const std::string& suite, int samples,
               std::uint64_t seed, bool json) {
  Signature sig = sig_opt.parse();
  nlohmann::json out = nlohmann::json::array();
  bool ok = true;

  auto run_theorems = [&](TheoremFamily fam) {
    for (int k = 0; k <= 3; ++k) {
      auto rep = verify_equivalence(fam, k, sig, samples, seed);
      ok = ok && rep.passed();
      out.push_back(rep.to_json());
    }
  };
  auto run_suite_report = [&](const SuiteReport& rep) {
    ok = ok && rep.passed();
    out.push_back(rep.to_json());
  };
  auto run_lie_suite = [&]() {
    SuiteReport rep;
    rep.suite = "lie";
    rep.sig = sig;
    for (int k = 0; k <= 3; ++k)
      for (auto tag : {GroupTag::Q, GroupTag::QCheck}) {
        GroupId g{tag, k};
        CheckResult c{g.to_string() + ": closed form == tangent oracle, closed"};
        c.relevant = 1;
        Subspace algebra = table1_algebra(g, sig);
        if (!(algebra == tangent_oracle(g, sig) && closure_check(algebra))) c.violations = 1;
        rep.checks.push_back(std::move(c));
      }
    run_suite_report(rep);
  };

  if (suite == "theorem-q") {
    run_theorems(TheoremFamily::Q);
  } else if (suite == "theorem-qcheck") {
    run_theorems(TheoremFamily::QCheck);
  } else if (suite == "inclusions") {
    run_suite_report(verify_inclusions(sig, samples, seed));
  } else if (suite == "kernels") {
    run_suite_report(verify_kernels(sig, samples, seed));
  } else if (suite == "centralizers") {
    run_suite_report(verify_centralizers(sig));
  } else if (suite == "lie") {
    run_lie_suite();
  } else if (suite == "all") {
    run_theorems(TheoremFamily::Q);
    run_theorems(TheoremFamily::QCheck);
    run_suite_report(verify_inclusions(sig, samples, seed));
    run_suite_report(verify_kernels(sig, samples, seed));
    run_suite_report(verify_centralizers(sig));
    run_lie_suite();
  } else {
    throw CLI::ValidationError("--suite", "unknown suite " + suite);
  }

  if (json) {
    nlohmann::json j;
    j["suite"] = suite;
    j["signature"] = sig.to_string();
    j["samples"] = samples;
    j["seed"] = seed;
    j["passed"] = ok;
    j["reports"] = out;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& rep : out) {
      if (rep.contains("agreements")) {
        std::cout << rep["group"].get<std::string>() << ": " << rep["agreements"] << "/"
                  << rep["samples"] << " agree\n";
      } else {
        for (const auto& c : rep["checks"]) {
          std::cout << (c["violations"].get<int>() == 0 ? "pass" : "FAIL") << "  "
                    << rep["suite"].get<std::string>() << ": "
                    << c["name"].get<std::string>() << "\n";
        }
      }
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("CLIFFGRP_MAX_N")) {
    char* end = nullptr;
    long value = std::strtol(cap, &end, 10);
    if (end == cap || *end != '\0' || value < 1 || value > 10) {
      std::cerr << "CLIFFGRP_MAX_N must be an integer in 1..10\n";
      return kExitUsage;
    }
    cliffgrp::set_max_dimension(static_cast<int>(value));
  }

  CLI::App app{"exact kernel for group families in degenerate geometric algebras"};
  app.require_subcommand(1);

  SigOption sig_basis, sig_centr, sig_member, sig_lie, sig_verify;
  bool json_basis = false, json_centr = false, json_member = false, json_lie = false,
       json_verify = false;

  auto* basis = app.add_subcommand("basis", "list basis blades of a subspace");
  add_sig_options(basis, sig_basis);
  std::optional<int> basis_grade, basis_type, basis_parity;
  bool basis_lambda = false;
  basis->add_option("--grade", basis_grade, "fixed grade k");
  basis->add_option("--type", basis_type, "grades equal to k mod 4")->check(CLI::Range(0, 3));
  basis->add_option("--parity", basis_parity, "even (0) or odd (1)")->check(CLI::Range(0, 1));
  basis->add_flag("--lambda", basis_lambda, "restrict to null-generator blades");
  basis->add_flag("--json", json_basis, "JSON output");

  auto* centr = app.add_subcommand("centralizer", "centralizer of a graded subspace");
  add_sig_options(centr, sig_centr);
  std::optional<int> centr_grade, centr_type;
  bool centr_twisted = false, centr_oracle = false;
  centr->add_option("--grade", centr_grade, "centralize the grade-m subspace");
  centr->add_option("--type", centr_type, "centralize the type-k subspace")
      ->check(CLI::Range(0, 3));
  centr->add_flag("--twisted", centr_twisted, "twisted centralizer");
  centr->add_flag("--oracle", centr_oracle, "cross-check against the brute-force solve");
  centr->add_flag("--json", json_centr, "JSON output");

  auto* member = app.add_subcommand("member", "group membership of an element");
  add_sig_options(member, sig_member);
  std::string member_group, member_element, member_method = "auto";
  member->add_option("--group", member_group, "group tag, e.g. Q1, Qc2, Gamma, A01, P")
      ->required();
  member->add_option("--element", member_element, "multivector expression")->required();
  member->add_option("--method", member_method, "auto, definition, or norm")
      ->check(CLI::IsMember({"auto", "definition", "norm"}));
  member->add_flag("--json", json_member, "JSON output");

  auto* lie = app.add_subcommand("lie", "Lie algebra of a Q-family group");
  add_sig_options(lie, sig_lie);
  std::string lie_group;
  lie->add_option("--group", lie_group, "q0..q3 or qc0..qc3")->required();
  lie->add_flag("--json", json_lie, "JSON output");

  auto* matrep = app.add_subcommand("matrep", "fixed matrix representations");
  std::string matrep_rep, matrep_element, matrep_pattern;
  bool matrep_check = false;
  matrep->add_option("--rep", matrep_rep, "lambda1, lambda2 or g011")->required();
  matrep->add_option("--element", matrep_element, "apply to this multivector");
  matrep->add_option("--pattern", matrep_pattern, "check ut2, ut4, sut2 or heis4");
  matrep->add_flag("--check", matrep_check, "run the homomorphism check");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_sig_options(verify, sig_verify);
  std::string verify_suite;
  int verify_samples = 200;
  std::uint64_t verify_seed = 0;
  verify
      ->add_option("--suite", verify_suite,
                   "theorem-q, theorem-qcheck, inclusions, kernels, centralizers, lie, all")
      ->required();
  verify->add_option("--samples", verify_samples, "samples per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "master seed");
  verify->add_flag("--json", json_verify, "JSON output");

  try {
    app.parse(argc, argv);
    if (basis->parsed())
      return run_basis(sig_basis, basis_grade, basis_type, basis_parity, basis_lambda,
                       json_basis);
    if (centr->parsed())
      return run_centralizer(sig_centr, centr_grade, centr_type, centr_twisted, centr_oracle,
                             json_centr);
    if (member->parsed())
      return run_member(sig_member, member_group, member_element, member_method, json_member);
    if (lie->parsed()) return run_lie(sig_lie, lie_group, json_lie);
    if (matrep->parsed())
      return run_matrep(matrep_rep, matrep_element, matrep_pattern, matrep_check);
    if (verify->parsed())
      return run_verify(sig_verify, verify_suite, verify_samples, verify_seed, json_verify);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const cliffgrp::ParseError& e) {
    std::cerr << "element syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
