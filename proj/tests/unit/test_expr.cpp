#include <doctest.h>

#include <cliffgrp/expr.hpp>

#include "test_util.hpp"

using namespace cliffgrp;

TEST_CASE("parsing the grammar") {
  Signature l2(0, 0, 2);
  Multivector u = parse_multivector("1 + 2e1 - e12", l2);
  CHECK(u.coefficient(Blade{0}) == Scalar(1));
  CHECK(u.coefficient(Blade{0b01}) == Scalar(2));
  CHECK(u.coefficient(Blade{0b11}) == Scalar(-1));

  Signature s102(1, 0, 2);
  Multivector v = parse_multivector("3/2*e[1,3]", s102);
  CHECK(v.coefficient(Blade{0b101}) == Scalar::from_fraction(3, 2));

  // repeated blades are summed, whitespace is free
  CHECK(parse_multivector("e1+e1 +  e1", l2) == parse_multivector("3e1", l2));
  CHECK(parse_multivector("2 - 2", l2).is_zero());
  CHECK(parse_multivector("-e1", l2) == parse_multivector("0 - e1", l2));
  CHECK(parse_multivector("e", l2) == Multivector::identity(l2));
}

TEST_CASE("parse errors carry positions") {
  Signature l2(0, 0, 2);
  CHECK_THROWS_AS(parse_multivector("e4", l2), IndexOutOfRange);
  CHECK_THROWS_AS(parse_multivector("e0", l2), IndexOutOfRange);
  CHECK_THROWS_AS(parse_multivector("e21", l2), ParseError);  // not increasing
  CHECK_THROWS_AS(parse_multivector("", l2), ParseError);
  CHECK_THROWS_AS(parse_multivector("1 +", l2), ParseError);
  CHECK_THROWS_AS(parse_multivector("1/0", l2), ParseError);
  CHECK_THROWS_AS(parse_multivector("e[1", l2), ParseError);
  CHECK_THROWS_AS(parse_multivector("2i", l2), ParseError);  // real algebra
  try {
    parse_multivector("1 + e4", l2);
    FAIL("expected IndexOutOfRange");
  } catch (const IndexOutOfRange& e) {
    CHECK(e.position == 5);
    CHECK(e.index == 4);
  }
}

TEST_CASE("complex coefficients") {
  Signature c(2, 0, 1, Field::Complex);
  Multivector u = parse_multivector("1/2+1/3i*e1 - 2i", c);
  CHECK(u.coefficient(Blade{1}) == Scalar(make_rational(1, 2), make_rational(1, 3)));
  CHECK(u.coefficient(Blade{0}) == Scalar(Rational(0), Rational(-2)));
  CHECK(parse_multivector("1+2i", c).coefficient(Blade{0}) ==
        Scalar(Rational(1), Rational(2)));
}

TEST_CASE("formatting is canonical") {
  Signature l2(0, 0, 2);
  CHECK(format_multivector(parse_multivector("2e1 + 1", l2)) == "1 + 2e1");
  CHECK(format_multivector(Multivector::zero(l2)) == "0");
  CHECK(format_multivector(parse_multivector("-1 - e12", l2)) == "-1 - e12");
  CHECK(format_multivector(parse_multivector("3/2e12", l2)) == "3/2e12");
}

TEST_CASE("parse after format is the identity") {
  Rng rng(616);
  for (auto field : {Field::Real, Field::Complex}) {
    for (const auto& sig : test_util::all_signatures(4, field)) {
      for (int trial = 0; trial < 10; ++trial) {
        Multivector u = test_util::random_multivector(sig, rng);
        if (field == Field::Complex) {
          Multivector spice(sig);
          spice.add_term(Blade{static_cast<std::uint32_t>(rng.range(0, sig.full_mask()))},
                         Scalar(Rational(rng.range(-2, 2)), Rational(rng.range(-2, 2))));
          u += spice;
        }
        CAPTURE(format_multivector(u));
        CHECK(parse_multivector(format_multivector(u), sig) == u);
      }
    }
  }
}

TEST_CASE("bracket blade tokens round trip past nine generators") {
  Blade b = Blade::from_indices({1, 3}, Signature(1, 0, 2));
  CHECK(b.to_string() == "e13");
  set_max_dimension(10);
  Signature big(10, 0, 0);
  Blade wide = Blade::from_indices({1, 10}, big);
  CHECK(wide.to_string() == "e[1,10]");
  CHECK(parse_multivector("e[1,10]", big).coefficient(wide) == Scalar(1));
  set_max_dimension(8);
}
