#include <doctest.h>

#include <cliffgrp/scalar.hpp>

using namespace cliffgrp;

TEST_CASE("rationals are canonical and exact") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-2, -4) == make_rational(1, 2));
  CHECK(make_rational(1, -2) == make_rational(-1, 2));
  CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("scalar arithmetic over the Gaussian rationals") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  Scalar z(make_rational(1, 2), make_rational(1, 3));
  CHECK(z * z.conj() == Scalar(make_rational(1, 4) + make_rational(1, 9)));
  CHECK(z / z == Scalar(1));
  CHECK((Scalar(1) / i) == -i);
  CHECK_THROWS_AS(z / Scalar(0), std::domain_error);
}

TEST_CASE("scalar text forms") {
  CHECK(Scalar(0).to_string() == "0");
  CHECK(Scalar(3).to_string() == "3");
  CHECK(Scalar::from_fraction(-3, 2).to_string() == "-3/2");
  CHECK(Scalar(make_rational(1, 2), make_rational(1, 2)).to_string() == "1/2+1/2i");
  CHECK(Scalar(Rational(0), Rational(2)).to_string() == "2i");
  CHECK(Scalar(Rational(1), Rational(-2)).to_string() == "1-2i");
}
