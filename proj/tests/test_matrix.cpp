#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qcjt/matrix.hpp"

using namespace qcjt;

static Matrix from_rows(FieldPtr f, std::vector<std::vector<Elem>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

static Matrix random_matrix(std::mt19937_64& rng, FieldPtr f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % f->order();
  return m;
}

TEST_CASE("rank examples") {
  auto f7 = Field::get(7);
  CHECK(rank(Matrix(f7, 3, 3)) == 0);
  CHECK(rank(Matrix::identity(f7, 4)) == 4);
  CHECK(rank(from_rows(Field::get(5), {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix(f7, 0, 5)) == 0);
}

TEST_CASE("rank inequalities and block sums") {
  std::mt19937_64 rng(1);
  for (auto f : {Field::get(3), Field::get(7, 2)}) {
    for (int t = 0; t < 50; ++t) {
      Matrix a = random_matrix(rng, f, 5, 3) * random_matrix(rng, f, 3, 6);
      Matrix b = random_matrix(rng, f, 6, 4);
      CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
      CHECK(rank(block_diag(a, b)) == rank(a) + rank(b));
    }
  }
}

TEST_CASE("kernel and image") {
  std::mt19937_64 rng(2);
  auto f = Field::get(7);
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_matrix(rng, f, 4, 3) * random_matrix(rng, f, 3, 7);
    Matrix k = kernel_basis(a);
    CHECK(k.cols() + rank(a) == 7);
    CHECK((a * k).is_zero());
    CHECK(rank(k) == k.cols());
    Matrix im = image_basis(a);
    CHECK(im.cols() == rank(a));
    CHECK(rank(hstack({im, a})) == im.cols());
  }
}

TEST_CASE("inverse, solve, determinant") {
  std::mt19937_64 rng(3);
  auto f = Field::get(5, 2);
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_matrix(rng, f, 5, 5);
    auto inv = try_inverse(a);
    CHECK(inv.has_value() == (rank(a) == 5));
    CHECK((determinant(a) != 0) == (rank(a) == 5));
    if (inv) CHECK(a * *inv == Matrix::identity(f, 5));
    Matrix b = a * random_matrix(rng, f, 5, 2);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
  // det of a product
  Matrix a = random_matrix(rng, f, 4, 4), b = random_matrix(rng, f, 4, 4);
  CHECK(determinant(a * b) == f->mul(determinant(a), determinant(b)));
  // 2x2 closed form
  Matrix c = from_rows(Field::get(7), {{3, 5}, {2, 6}});
  CHECK(determinant(c) == (3 * 6 + 7 * 7 - 5 * 2) % 7);
}
