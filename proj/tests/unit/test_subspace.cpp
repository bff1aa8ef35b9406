#include <doctest.h>

#include <cliffgrp/centralizer.hpp>
#include <cliffgrp/expr.hpp>
#include <cliffgrp/linalg.hpp>
#include <cliffgrp/verify.hpp>

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

TEST_CASE("descriptor expansion") {
  Signature s102(1, 0, 2);
  CHECK(expand(SD{SD::product(1, 1)}, s102) == span_of({"e12", "e13"}, s102));
  CHECK(expand(SD{SD::lambda_grade(0)}, s102) == span_of({"1"}, s102));
  Signature l2(0, 0, 2);
  CHECK(expand(SD{SD::qtype(2)}, l2) == span_of({"e12"}, l2));
  // out-of-range grades expand to nothing
  CHECK(expand(SD{SD::lambda_grade(5)}, l2).empty());
  CHECK(expand(SD{SD::product(3, 0)}, s102).empty());
  CHECK_THROWS_AS(SD::qtype(4), std::invalid_argument);
  CHECK_THROWS_AS(SD::parity(2), std::invalid_argument);
}

TEST_CASE("containment") {
  Signature l2(0, 0, 2);
  Subspace s = span_of({"1", "e12"}, l2);
  CHECK(s.contains(parse_multivector("1+e12", l2)));
  CHECK_FALSE(s.contains(parse_multivector("1+2e1", l2)));
  CHECK(s.contains(Multivector::zero(l2)));
}

TEST_CASE("subspace JSON uses (grade, mask) order") {
  Signature l2(0, 0, 2);
  Subspace lambda = expand(SD{SD::lambda_parity(0), SD::lambda_parity(1)}, l2);
  CHECK(lambda.to_json().dump() == "[[],[1],[2],[1,2]]");
}

TEST_CASE("closed-form centralizer examples") {
  Signature l2(0, 0, 2);
  CHECK(closed_form_centralizer(1, false, l2) == span_of({"1", "e12"}, l2));
  CHECK(closed_form_centralizer(2, false, l2) == Subspace::whole_algebra(l2));
  Signature s102(1, 0, 2);
  CHECK(closed_form_centralizer(1, true, s102) ==
        span_of({"1", "e2", "e3", "e23"}, s102));
}

TEST_CASE("closed-form type centralizer examples") {
  Signature s300(3, 0, 0);
  CHECK(closed_form_type_centralizer(0, false, s300) == Subspace::whole_algebra(s300));
  Signature l2(0, 0, 2);
  CHECK(closed_form_type_centralizer(0, true, l2) == span_of({"1", "e12"}, l2));
  CHECK(closed_form_type_centralizer(1, false, l2) == closed_form_centralizer(1, false, l2));
}

TEST_CASE("brute-force centralizer examples") {
  Signature s200(2, 0, 0);
  CHECK(bruteforce_centralizer(grade_subspace(1, s200), false, s200) ==
        span_of({"1"}, s200));
  Signature l2(0, 0, 2);
  CHECK(bruteforce_centralizer(grade_subspace(1, l2), true, l2) ==
        Subspace::whole_algebra(l2));
  CHECK(bruteforce_centralizer(Subspace(l2), false, l2) == Subspace::whole_algebra(l2));
}

TEST_CASE("closed forms equal the brute-force oracle for n <= 4") {
  for (auto field : {Field::Real, Field::Complex}) {
    for (const auto& sig : all_signatures(4, field)) {
      for (int m = 0; m <= sig.n(); ++m)
        for (bool twisted : {false, true}) {
          CAPTURE(sig.to_string());
          CAPTURE(m);
          CAPTURE(twisted);
          CHECK(closed_form_centralizer(m, twisted, sig) ==
                bruteforce_centralizer(grade_subspace(m, sig), twisted, sig));
        }
    }
  }
}

TEST_CASE("type centralizers reduce to grade centralizers") {
  for (const auto& sig : all_signatures(4)) {
    for (int k = 0; k <= 3; ++k)
      for (bool twisted : {false, true}) {
        CAPTURE(sig.to_string());
        CAPTURE(k);
        CAPTURE(twisted);
        CHECK(closed_form_type_centralizer(k, twisted, sig) ==
              bruteforce_type_centralizer(k, twisted, sig));
      }
  }
}

TEST_CASE("centralizer inclusion facts") {
  for (const auto& sig : all_signatures(4)) {
    Subspace z1 = closed_form_centralizer(1, false, sig);
    Subspace lambda_even = expand(SD{SD::lambda_parity(0)}, sig);
    Subspace z4 = closed_form_type_centralizer(0, false, sig);
    for (int m = 0; m <= sig.n(); ++m) {
      Subspace zm = bruteforce_centralizer(grade_subspace(m, sig), false, sig);
      Subspace zcm = bruteforce_centralizer(grade_subspace(m, sig), true, sig);
      CHECK(z1.intersect(zm) == z1);             // Z^1 inside every Z^m
      CHECK(lambda_even.intersect(zcm) == lambda_even);
      if (m >= 1 && m <= 3) {
        CHECK(zm.intersect(z4) == zm);           // Z^m inside Z^4
        CHECK(zcm.intersect(z4) == zcm);
      }
      CHECK(zm.even_part() == zcm.even_part());  // even projections coincide
    }
  }
}

TEST_CASE("even part") {
  Signature l2(0, 0, 2);
  CHECK(Subspace::whole_algebra(l2).even_part() == span_of({"1", "e12"}, l2));
  CHECK(span_of({"e1"}, l2).even_part().empty());
  for (const auto& sig : all_signatures(4)) {
    CHECK(bruteforce_centralizer(grade_subspace(4, sig), false, sig).even_part() ==
          bruteforce_centralizer(grade_subspace(4, sig), true, sig).even_part());
  }
}

TEST_CASE("centralizer suite runs clean on a degenerate signature") {
  auto report = verify_centralizers(Signature(1, 1, 1));
  CHECK(report.passed());
}
