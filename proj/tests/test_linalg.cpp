#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "famalg/linalg.hpp"

using namespace famalg;

namespace {

Matrix from_longs(std::vector<std::vector<long>> rows) {
  std::vector<Vec> v;
  for (auto& r : rows) {
    Vec row;
    for (long x : r) row.push_back(Rational(x));
    v.push_back(row);
  }
  return Matrix::from_rows(v);
}

}  // namespace

TEST_CASE("rational parsing and exactness") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2") == Rational(-2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("a"));
  CHECK_THROWS(Rational::parse(""));

  // (a/b + c/d) - c/d == a/b, exactly
  Rational a(355, 113), c(-22, 7);
  CHECK((a + c) - c == a);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("rank: frozen hand oracles") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix(3, 3)) == 0);
  // [[1,2],[2,4]]: second row is twice the first
  CHECK(rank(from_longs({{1, 2}, {2, 4}})) == 1);
  // fractional entries
  Matrix m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(1, 3);
  m.at(1, 0) = Rational(3, 2);
  m.at(1, 1) = Rational(2);  // det = 1 - 1/2 = 1/2
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix(0, 5)) == 0);
}

TEST_CASE("kernel_basis: frozen hand oracles") {
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  CHECK(kernel_basis(Matrix(2, 3)).size() == 3);

  auto basis = kernel_basis(from_longs({{1, 2}, {2, 4}}));
  REQUIRE(basis.size() == 1);
  // proportional to (2, -1): x + 2y = 0 with y = 1 free gives (-2, 1)
  CHECK(basis[0][0] * Rational(1) == -Rational(2) * basis[0][1]);

  // every kernel vector is annihilated exactly
  Matrix m = from_longs({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  for (const auto& v : kernel_basis(m)) CHECK(is_zero(m.apply(v)));
}

TEST_CASE("assemble_linear_map") {
  // images of e1, e2 are e2, e1: the swap matrix
  Matrix swap = assemble_linear_map({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  CHECK(swap == from_longs({{0, 1}, {1, 0}}));
  CHECK(assemble_linear_map({{Rational(0)}, {Rational(0)}}).is_zero());
  Matrix m = assemble_linear_map({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}});
  CHECK(m == from_longs({{1, 1}, {0, 1}}));
  CHECK_THROWS(assemble_linear_map({{Rational(1)}, {Rational(1), Rational(2)}}));
}

TEST_CASE("rank-nullity on random small matrices") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + eng() % 5, cols = 1 + eng() % 5;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = Rational(static_cast<long>(eng() % 7) - 3, 1 + eng() % 3);
    auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == cols);
    CHECK(rank(m) == rank(m.transpose()));
    for (const auto& v : basis) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("inverse and power") {
  Matrix m = from_longs({{1, 1}, {0, 1}});
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * m == Matrix::identity(2));
  CHECK(m * *inv == Matrix::identity(2));
  CHECK_FALSE(from_longs({{1, 2}, {2, 4}}).inverse().has_value());
  CHECK(m.pow(0) == Matrix::identity(2));
  CHECK(m.pow(3) == from_longs({{1, 3}, {0, 1}}));
}

TEST_CASE("tensor evaluation is bilinear") {
  Tensor3 t(2, 2, 2);
  t.at(0, 0, 1) = Rational(1);
  t.at(1, 0, 0) = Rational(2);
  Vec x{Rational(1), Rational(3)}, y{Rational(2), Rational(0)};
  Vec r = t.eval(x, y);
  CHECK(r[0] == Rational(12));
  CHECK(r[1] == Rational(2));
  Vec x2 = Rational(5) * x;
  CHECK(t.eval(x2, y) == Rational(5) * r);
}
