#include <doctest.h>

#include <cliffgrp/expr.hpp>
#include <cliffgrp/lie.hpp>

#include "test_util.hpp"

using namespace cliffgrp;
using test_util::all_signatures;

namespace {

using SD = SubspaceDescriptor;

Subspace span_of(std::initializer_list<const char*> blades, const Signature& sig) {
  std::vector<Blade> out;
  for (const char* text : blades) {
    Multivector u = parse_multivector(text, sig);
    REQUIRE(u.terms().size() == 1);
    out.push_back(u.terms().begin()->first);
  }
  return Subspace(sig, std::move(out));
}

}  // namespace

TEST_CASE("closed-form algebra examples") {
  Signature l2(0, 0, 2);
  CHECK(table1_algebra(GroupId::q(1), l2) == span_of({"1", "e12"}, l2));
  CHECK(table1_algebra(GroupId::qcheck(0), l2) == span_of({"1", "e12"}, l2));
  Signature s102(1, 0, 2);
  CHECK(table1_algebra(GroupId::q(3), s102) == Subspace::whole_algebra(s102));
  CHECK(table1_algebra(GroupId::qcheck(1), s102) ==
        span_of({"1", "e2", "e3", "e12", "e13", "e23"}, s102));
}

TEST_CASE("tangent oracle agrees with the closed forms") {
  Signature l2(0, 0, 2);
  CHECK(tangent_oracle(GroupId::q(1), l2) == table1_algebra(GroupId::q(1), l2));
  Signature s101(1, 0, 1);
  CHECK(tangent_oracle(GroupId::qcheck(1), s101) ==
        table1_algebra(GroupId::qcheck(1), s101));
  for (const auto& sig : all_signatures(4)) {
    for (int k = 0; k <= 3; ++k)
      for (auto tag : {GroupTag::Q, GroupTag::QCheck}) {
        GroupId g{tag, k};
        CAPTURE(sig.to_string());
        CAPTURE(g.to_string());
        Subspace algebra = table1_algebra(g, sig);
        CHECK(algebra == tangent_oracle(g, sig));
        CHECK(closure_check(algebra));
        CHECK(algebra.contains(Blade{0}));  // every row contains the scalar
      }
  }
}

TEST_CASE("closure check") {
  Signature l2(0, 0, 2);
  CHECK(closure_check(span_of({"1", "e12"}, l2)));
  CHECK(closure_check(span_of({"1"}, l2)));
  Signature s200(2, 0, 0);
  CHECK_FALSE(closure_check(span_of({"e1", "e2"}, s200)));
}

TEST_CASE("reference fingerprints") {
  LieFingerprint heis3 = reference_fingerprint({"heis3"});
  CHECK(heis3.dim == 3);
  CHECK(heis3.center_dim == 1);
  CHECK(heis3.derived_dims == std::vector<int>{1, 0});
  CHECK(heis3.nilpotent);
  CHECK(heis3.solvable);

  LieFingerprint p11 = reference_fingerprint({"p11"});
  CHECK(p11.dim == 3);
  CHECK(p11.center_dim == 0);
  CHECK(p11.derived_dims == std::vector<int>{2, 0});
  CHECK(p11.solvable);
  CHECK_FALSE(p11.nilpotent);

  LieFingerprint su2 = reference_fingerprint({"su2"});
  CHECK(su2.dim == 3);
  CHECK(su2.center_dim == 0);
  CHECK(su2.derived_dims == std::vector<int>{3});
  CHECK_FALSE(su2.solvable);
  CHECK(su2.killing == Inertia{0, 3, 0});

  LieFingerprint gl1 = reference_fingerprint({"gl1"});
  CHECK(gl1.dim == 1);
  CHECK(gl1.center_dim == 1);
  CHECK(gl1.derived_dims == std::vector<int>{0});

  LieFingerprint sum = reference_fingerprint({"gl1", "heis3"});
  CHECK(sum.dim == 4);
  CHECK(sum.center_dim == 2);
  CHECK(sum.derived_dims == std::vector<int>{1, 0});
  CHECK(sum.nilpotent);

  LieFingerprint big = reference_fingerprint({"gl1", "gl1", "heis4"});
  CHECK(big.dim == 7);
  CHECK(big.center_dim == 3);
  CHECK(big.derived_dims == std::vector<int>{1, 0});
  CHECK(big.nilpotent);

  LieFingerprint sl2c = reference_fingerprint({"sl2C"});
  CHECK(sl2c.dim == 6);
  CHECK(sl2c.killing == Inertia{3, 3, 0});
  CHECK_THROWS_AS(reference_algebra("so3"), std::invalid_argument);
}

TEST_CASE("algebra fingerprints match the reference algebras") {
  Signature s102(1, 0, 2);
  CHECK(fingerprint(table1_algebra(GroupId::qcheck(0), s102)) ==
        reference_fingerprint({"gl1", "heis3"}));
  CHECK(fingerprint(table1_algebra(GroupId::qcheck(1), s102)) ==
        reference_fingerprint({"gl1", "heis4"}));
  CHECK(fingerprint(table1_algebra(GroupId::qcheck(0), Signature(1, 1, 1))) ==
        reference_fingerprint({"gl1", "p11"}));
  CHECK(fingerprint(table1_algebra(GroupId::qcheck(0), Signature(3, 0, 0))) ==
        reference_fingerprint({"gl1", "su2"}));
  CHECK(fingerprint(table1_algebra(GroupId::q(1), s102)) ==
        reference_fingerprint({"gl1", "gl1", "heis3"}));
  CHECK(fingerprint(table1_algebra(GroupId::qcheck(3), s102)) ==
        reference_fingerprint({"gl1", "gl1", "heis4"}));
  // complex case compared through realification
  CHECK(fingerprint(table1_algebra(GroupId::qcheck(0), Signature(3, 0, 0, Field::Complex))) ==
        reference_fingerprint({"gl1C", "sl2C"}));
}

TEST_CASE("fingerprint rejects non-closed spans") {
  Signature s200(2, 0, 0);
  CHECK_THROWS_AS(fingerprint(span_of({"e1", "e2"}, s200)), NotClosed);
}

TEST_CASE("nilpotent exponentials") {
  Signature l2(0, 0, 2);
  CHECK(nilpotent_exp_check(parse_multivector("e12", l2), GroupId::q(1)) ==
        ExpCheck::Member);
  CHECK(nilpotent_exp_check(Multivector::identity(l2), GroupId::q(1)) ==
        ExpCheck::Skipped);
  Signature s102(1, 0, 2);
  CHECK(nilpotent_exp_check(parse_multivector("e23", s102), GroupId::q(3)) ==
        ExpCheck::Member);
}

TEST_CASE("specializations at r = 0") {
  // non-degenerate: even part for twisted, larger even pieces for plain
  Signature s21(2, 1, 0);  // n = 3
  Subspace whole = Subspace::whole_algebra(s21);
  CHECK(table1_algebra(GroupId::q(3), s21) == whole);
  CHECK(table1_algebra(GroupId::q(0), s21) == whole);
  Subspace g023 = expand(SD{SD::grade(0), SD::qtype(2), SD::grade(3)}, s21);
  CHECK(table1_algebra(GroupId::q(1), s21) == g023);
  CHECK(table1_algebra(GroupId::q(2), s21) == g023);
  Subspace even = expand(SD{SD::parity(0)}, s21);
  for (int k = 0; k <= 3; ++k) CHECK(table1_algebra(GroupId::qcheck(k), s21) == even);

  Signature s40(4, 0, 0);  // n = 0 mod 4
  Subspace g02n = expand(SD{SD::grade(0), SD::qtype(2), SD::grade(4)}, s40);
  Subspace g02 = expand(SD{SD::grade(0), SD::qtype(2)}, s40);
  for (int m : {0, 2}) {
    CHECK(table1_algebra(GroupId::q(m), s40) == g02n);
    CHECK(table1_algebra(GroupId::qcheck(m), s40) == g02n);
  }
  for (int l : {1, 3}) {
    CHECK(table1_algebra(GroupId::q(l), s40) == g02);
    CHECK(table1_algebra(GroupId::qcheck(l), s40) == g02);
  }
}

TEST_CASE("specializations at p = q = 0") {
  for (int n = 1; n <= 5; ++n) {
    Signature sig(0, 0, n);
    Subspace lambda = Subspace::whole_algebra(sig);
    Subspace lambda_even = expand(SD{SD::lambda_parity(0)}, sig);
    CHECK(table1_algebra(GroupId::q(0), sig) == lambda);
    CHECK(table1_algebra(GroupId::q(2), sig) == lambda);
    CHECK(table1_algebra(GroupId::qcheck(1), sig) == lambda);
    CHECK(table1_algebra(GroupId::qcheck(3), sig) == lambda);
    CHECK(table1_algebra(GroupId::qcheck(0), sig) == lambda_even);
    Subspace even_top = expand(SD{SD::lambda_parity(0), SD::grade(n)}, sig);
    if (n % 2 == 1) {
      CHECK(table1_algebra(GroupId::q(1), sig) == even_top);
      CHECK(table1_algebra(GroupId::qcheck(2), sig) == even_top);
      CHECK(table1_algebra(GroupId::q(3), sig) ==
            expand(SD{SD::lambda_parity(0), SD::grade(n), SD::grade(n - 2)}, sig));
    } else {
      CHECK(table1_algebra(GroupId::q(1), sig) == lambda_even);
      Subspace with_next = expand(SD{SD::lambda_parity(0), SD::grade(n - 1)}, sig);
      CHECK(table1_algebra(GroupId::qcheck(2), sig) == with_next);
      CHECK(table1_algebra(GroupId::q(3), sig) == with_next);
    }
  }
}

TEST_CASE("dimension formulas") {
  CHECK(qtype2_dim(4) == 6);
  CHECK(qtype2_dim(1) == 0);
  CHECK(lambda_qtype0_dim(2) == 1);
  CHECK(lambda_qtype0_dim(0) == 1);
  DimFormulas f = dim_formulas(Signature(1, 0, 2));
  CHECK(f.lambda_odd == 2);
  CHECK(f.lambda_k == std::vector<long>{1, 2, 1, 0});
  CHECK(f.grade_pq == std::vector<long>{1, 1});

  // every formula against an enumerated blade count, n <= 5 here
  for (const auto& sig : all_signatures(5)) {
    DimFormulas d = dim_formulas(sig);
    CHECK(d.qtype2 ==
          static_cast<long>(expand(SD{SD::qtype(2)}, sig).dim()));
    CHECK(d.lambda_qtype0 ==
          static_cast<long>(expand(SD{SD::lambda_qtype(0)}, sig).dim()));
    CHECK(d.lambda_odd ==
          static_cast<long>(expand(SD{SD::lambda_parity(1)}, sig).dim()));
    for (int k = 0; k <= sig.n(); ++k)
      CHECK(d.lambda_k[k] ==
            static_cast<long>(expand(SD{SD::lambda_grade(k)}, sig).dim()));
    for (int k = 0; k <= sig.p() + sig.q(); ++k)
      CHECK(d.grade_pq[k] ==
            static_cast<long>(expand(SD{SD::product(k, 0)}, sig).dim()));
  }
}
