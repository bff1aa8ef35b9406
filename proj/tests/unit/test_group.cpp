#include <doctest.h>

#include <cliffgrp/expr.hpp>
#include <cliffgrp/verify.hpp>

#include "test_util.hpp"

using namespace cliffgrp;
using test_util::all_signatures;

namespace {

Multivector mv(const char* text, const Signature& sig) {
  return parse_multivector(text, sig);
}

}  // namespace

TEST_CASE("group tags parse and print") {
  for (const char* tag : {"Gamma", "GammaPM", "Gamma1", "Gammac0", "Gammat3", "GammaP0",
                          "GammacP1", "GammatP0", "Gamma01", "Gammac23", "Q0", "Qc3",
                          "A01", "B12", "A23", "B03", "Ac12", "Ac03", "Bc01", "Bc23",
                          "Ppm", "P", "PpmL", "PL"}) {
    auto g = GroupId::parse(tag);
    REQUIRE_MESSAGE(g.has_value(), tag);
    CHECK(g->to_string() == tag);
  }
  CHECK(GroupId::parse("q2")->tag == GroupTag::Q);
  CHECK(GroupId::parse("lipschitz")->tag == GroupTag::Lipschitz);
  CHECK_FALSE(GroupId::parse("Gamma02").has_value());
  CHECK_FALSE(GroupId::parse("nope").has_value());
}

TEST_CASE("stabilizer membership examples") {
  Signature l2(0, 0, 2);
  auto bad = member_definition(GroupId::gamma_q(1), mv("1+e1", l2));
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.violating_blade.has_value());
  CHECK(bad.violating_blade->to_string() == "e2");

  CHECK(member_definition(GroupId::gamma_q(1), Multivector::identity(l2)).verdict);

  Signature s200(2, 0, 0);
  CHECK(member_definition(GroupId::lipschitz(), mv("e1", s200)).verdict);

  auto singular = member_definition(GroupId::gamma_q(1), mv("e1", l2));
  CHECK_FALSE(singular.verdict);
  CHECK(singular.not_invertible);
}

TEST_CASE("norm membership examples") {
  Signature l2(0, 0, 2);
  auto good = member_norm(GroupId::q(1), mv("1+e12", l2));
  CHECK(good.verdict);
  REQUIRE(good.psi.has_value());
  CHECK(*good.psi == Multivector::identity(l2));
  REQUIRE(good.chi.has_value());
  CHECK(*good.chi == Multivector::identity(l2));

  auto bad = member_norm(GroupId::q(1), mv("1+e1", l2));
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.psi.has_value());
  CHECK(*bad.psi == mv("1+2e1", l2));

  CHECK(member_norm(GroupId::qcheck(0), Multivector::identity(l2)).verdict);
  CHECK_THROWS_AS(member_norm(GroupId::clifford(), Multivector::identity(l2)),
                  std::invalid_argument);
  CHECK_FALSE(has_norm_predicate(GroupId::clifford()));
}

TEST_CASE("sampling strategies") {
  Signature l1(0, 0, 1);
  for (int i = 0; i < 10; ++i) {
    Multivector t = sample_invertible(l1, SampleStrategy::LambdaUnits, 50 + i);
    CHECK_FALSE(t.scalar_part().is_zero());
    CHECK(is_invertible(t));
  }
  // deterministic for a fixed seed
  CHECK(sample_invertible(l1, SampleStrategy::Generic, 123) ==
        sample_invertible(l1, SampleStrategy::Generic, 123));
  Signature s200(2, 0, 0);
  CHECK(mixed_sample(s200, 7, 3) == mixed_sample(s200, 7, 3));
  // strategies impossible in the signature fall back instead of failing
  for (int i = 14; i < 17; ++i)  // VectorProducts slots of the mix
    CHECK(is_invertible(mixed_sample(Signature(0, 0, 2), 7, i)));
  CHECK_THROWS_AS(
      sample_invertible(Signature(0, 0, 2), SampleStrategy::VectorProducts, 1),
      SamplingExhausted);
  CHECK_THROWS_AS(
      sample_invertible(Signature(2, 0, 0), SampleStrategy::NilpotentExp, 1),
      SamplingExhausted);
}

TEST_CASE("the parity-split action reduces to the plain and twisted ones") {
  // each type subspace is parity pure, so the split action coincides with
  // one of the other two on it; same for the even/odd subspaces
  for (const auto& sig : {Signature(1, 0, 2), Signature(1, 1, 1), Signature(0, 1, 1)}) {
    for (int i = 0; i < 25; ++i) {
      ElementContext ctx(mixed_sample(sig, 555, i));
      for (int k = 0; k <= 3; ++k) {
        GroupId plain = k % 2 == 0 ? GroupId::gamma_q(k) : GroupId::gamma_qcheck(k);
        CHECK(member_definition(GroupId::gamma_qtilde(k), ctx).verdict ==
              member_definition(plain, ctx).verdict);
      }
      CHECK(member_definition(GroupId::gamma_parity_tilde(0), ctx).verdict ==
            member_definition(GroupId::gamma_parity(0), ctx).verdict);
      CHECK(member_definition(GroupId::gamma_parity_tilde(1), ctx).verdict ==
            member_definition(GroupId::gamma_parity_check(1), ctx).verdict);
    }
  }
}

TEST_CASE("theorem equivalence over the complex field") {
  for (const auto& sig : {Signature(2, 0, 1, Field::Complex),
                          Signature(1, 0, 2, Field::Complex),
                          Signature(3, 0, 0, Field::Complex)}) {
    for (int k = 0; k <= 3; ++k) {
      CAPTURE(sig.to_string());
      CAPTURE(k);
      CHECK(verify_equivalence(TheoremFamily::Q, k, sig, 100, 21).passed());
      CHECK(verify_equivalence(TheoremFamily::QCheck, k, sig, 100, 21).passed());
    }
  }
}

TEST_CASE("theorem equivalence on sampled elements") {
  auto q1 = verify_equivalence(TheoremFamily::Q, 1, Signature(0, 0, 2), 200, 42);
  CHECK(q1.passed());
  CHECK(q1.samples == 200);
  auto qc3 = verify_equivalence(TheoremFamily::QCheck, 3, Signature(1, 0, 1), 200, 42);
  CHECK(qc3.passed());
  auto q0 = verify_equivalence(TheoremFamily::Q, 0, Signature(1, 1, 0), 200, 42);
  CHECK(q0.passed());
  nlohmann::json j = q1.to_json();
  CHECK(j["agreements"] == 200);
  CHECK(j["group"] == "Q1");
}

TEST_CASE("inclusion suite and the identity element") {
  auto rep = verify_inclusions(Signature(0, 0, 2), 150, 11);
  CHECK(rep.passed());

  // the identity passes every membership predicate
  for (const auto& sig : {Signature(0, 0, 2), Signature(1, 0, 1), Signature(1, 1, 0)}) {
    Multivector e = Multivector::identity(sig);
    for (const char* tag : {"Gamma", "GammaPM", "Q0", "Q1", "Q2", "Q3", "Qc0", "Qc1",
                            "Qc2", "Qc3", "A01", "B12", "A23", "B03", "Ac12", "Ac03",
                            "Bc01", "Bc23", "Ppm", "P", "PpmL", "PL"}) {
      CAPTURE(tag);
      CHECK(member(*GroupId::parse(tag), e).verdict);
    }
  }
}

TEST_CASE("unit group coincidences in dimension two") {
  // every invertible element of G_{0,1,1} lies in Q3
  Signature s011(0, 1, 1);
  for (int i = 0; i < 50; ++i) {
    Multivector t = mixed_sample(s011, 99, i);
    CHECK(member(GroupId::q(3), t).verdict);
  }
}

TEST_CASE("group closure on samples") {
  for (auto tag : {GroupId::q(1), GroupId::qcheck(2), GroupId{GroupTag::A01},
                   GroupId{GroupTag::P}}) {
    for (const auto& sig : {Signature(0, 0, 2), Signature(1, 0, 1)}) {
      std::vector<Multivector> members;
      for (int i = 0; i < 40 && members.size() < 6; ++i) {
        Multivector t = mixed_sample(sig, 1000 + i, i);
        if (member(tag, t).verdict) members.push_back(t);
      }
      REQUIRE(members.size() >= 2);
      for (std::size_t a = 0; a < members.size(); ++a) {
        CHECK(member(tag, *inverse(members[a])).verdict);
        for (std::size_t b = 0; b < members.size(); ++b)
          CHECK(member(tag, members[a] * members[b]).verdict);
      }
    }
  }
}

TEST_CASE("kernel suite") {
  CHECK(verify_kernels(Signature(0, 0, 2), 60, 3).passed());
  CHECK(verify_kernels(Signature(1, 0, 2), 60, 3).passed());
  CHECK(verify_kernels(Signature(2, 0, 0), 60, 3).passed());
}

TEST_CASE("membership report JSON") {
  Signature l2(0, 0, 2);
  auto report = member_norm(GroupId::q(1), mv("1+e12", l2));
  auto j = report.to_json();
  CHECK(j["verdict"] == true);
  CHECK(j["group"] == "Q1");
  CHECK(j["element"] == "1 + e12");
}
