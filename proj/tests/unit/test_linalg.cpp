#include <doctest.h>

#include <cliffgrp/linalg.hpp>

using namespace cliffgrp;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) m.at(i, j++) = Scalar(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("square solve") {
  Matrix a = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 1}});
  std::vector<Scalar> b{Scalar(1), Scalar(2), Scalar(3)};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  // verify A x = b exactly
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < 3; ++j) acc += a.at(i, j) * (*x)[j];
    CHECK(acc == b[i]);
  }
  Matrix singular = from_rows({{1, 2}, {2, 4}});
  CHECK_FALSE(solve(singular, {Scalar(1), Scalar(1)}).has_value());
}

TEST_CASE("rank and nullspace") {
  Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(rank(m) == 2);
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  // each nullspace vector satisfies M v = 0
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < 3; ++j) acc += m.at(i, j) * basis[0][j];
    CHECK(acc == Scalar(0));
  }
  CHECK(nullspace(from_rows({{1, 0}, {0, 1}})).empty());
  // zero-row system: everything is in the kernel
  Matrix empty(0, 3);
  CHECK(nullspace(empty).size() == 3);
}

TEST_CASE("symmetric signature by congruence") {
  CHECK(symmetric_signature(from_rows({{2, 0, 0}, {0, -3, 0}, {0, 0, 0}})) ==
        Inertia{1, 1, 1});
  // zero diagonal forces the off-diagonal pivot trick
  CHECK(symmetric_signature(from_rows({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(symmetric_signature(from_rows({{0, 0}, {0, 0}})) == Inertia{0, 0, 2});
  CHECK_THROWS_AS(symmetric_signature(from_rows({{0, 1}, {2, 0}})), std::invalid_argument);
}
