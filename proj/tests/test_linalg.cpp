#include <random>

#include "doctest.h"
#include "springer/linalg.hpp"

using namespace springer;

namespace {

Matrix random_matrix(std::mt19937& rng, int r, int c, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    int r = 1 + t % 6, c = 1 + (t * 7) % 8;
    Matrix a = random_matrix(rng, r, c);
    if (t % 3 == 0) a = random_matrix(rng, r, 2) * random_matrix(rng, 2, c);  // low rank
    auto ns = nullspace(a);
    CHECK(rank(a) + static_cast<int>(ns.size()) == c);
    for (const auto& v : ns) CHECK(is_zero(springer::apply(a, v)));
    CHECK(rank(a) == rank(a.transpose()));
  }
}

TEST_CASE("rref is idempotent and keeps the row space") {
  std::mt19937 rng(3);
  Matrix a = random_matrix(rng, 4, 6);
  Matrix r = a;
  auto piv = rref(r);
  Matrix r2 = r;
  CHECK(rref(r2) == piv);
  CHECK(r2 == r);
  CHECK(rank(a) == static_cast<int>(piv.size()));
}

TEST_CASE("subspace operations") {
  Subspace s = Subspace::span(4, {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}});
  CHECK(s.dim() == 2);
  CHECK(s.contains({2, 3, 2, 3}));
  CHECK(!s.contains({1, 0, 0, 0}));
  CHECK(s.add({{0, 0, 1, 0}}));
  CHECK(s.dim() == 3);
  CHECK(!s.add({{1, 0, 0, 0}}));
  CHECK(Subspace::whole(5).dim() == 5);
  auto q = s.quotient_coords({1, 2, 3, 4});
  CHECK(q.size() == 1);
}

TEST_CASE("matrix products") {
  Matrix a(2, 3), b(3, 2);
  a(0, 0) = 1;
  a(0, 2) = 2;
  a(1, 1) = 3;
  b(0, 1) = 1;
  b(2, 0) = mpq_class(1, 2);
  b(1, 1) = -1;
  Matrix c = a * b;
  CHECK(c(0, 0) == 1);
  CHECK(c(0, 1) == 1);
  CHECK(c(1, 1) == -3);
  CHECK((Matrix::identity(2) * c) == c);
  CHECK((c - c).is_zero());
}
