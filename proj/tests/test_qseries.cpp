#include <random>

#include "doctest.h"
#include "springer/qseries.hpp"

using namespace springer;

namespace {

// Number of ways to write d as sum of parts from `parts` (with repetition, order ignored by part index).
long count_partitions(int d, const std::vector<int>& parts, size_t k = 0) {
  if (d == 0) return 1;
  if (k == parts.size()) return 0;
  long total = 0;
  for (int m = 0; m * parts[k] <= d; ++m) total += count_partitions(d - m * parts[k], parts, k + 1);
  return total;
}

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> c(-5, 5);
  LaurentPoly p;
  for (int e = lo; e <= hi; ++e) p.add_term(e, c(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly a = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, 1);
  LaurentPoly b = LaurentPoly::monomial(1, 2);
  LaurentPoly ab = a * b;
  CHECK(ab.coeff(3) == 6);
  CHECK(ab.coeff(0) == 2);
  CHECK(ab.min_degree() == 0);
  CHECK(ab.max_degree() == 3);
  CHECK((a - a).is_zero());
  CHECK(a.shifted(2).coeff(4) == 3);
  CHECK(bar_involution(a).coeff(-2) == 3);
  CHECK(bar_involution(a).coeff(1) == 1);
}

TEST_CASE("laurent ring axioms on random inputs") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    LaurentPoly a = random_poly(rng, -3, 4), b = random_poly(rng, -2, 2), c = random_poly(rng, 0, 5);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("series expansion of products of geometric factors") {
  const int N = 30;
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {2, 3}, {1, 5}, {2, 7, 7}, {1, 1, 3}}) {
    QSeries s = expand(QRational(LaurentPoly(1), parts), N);
    for (int d = 0; d <= N; ++d) CHECK(s.coeff(d) == count_partitions(d, parts));
  }
}

TEST_CASE("series inverse and products") {
  const int N = 20;
  QSeries f = QSeries::from_poly(LaurentPoly(1) - LaurentPoly::monomial(1) - LaurentPoly::monomial(2), N);
  QSeries g = f.inverse();
  // 1/(1-q-q^2) has Fibonacci coefficients
  long a = 1, b = 1;
  for (int d = 0; d <= N; ++d) {
    CHECK(g.coeff(d) == a);
    long c = a + b;
    a = b;
    b = c;
  }
  QSeries one = f * g;
  CHECK(one.coeff(0) == 1);
  for (int d = 1; d <= N; ++d) CHECK(one.coeff(d) == 0);
}

TEST_CASE("series comparison uses the common window") {
  QSeries a = QSeries::from_poly(LaurentPoly::monomial(3), 10);
  QSeries b = QSeries::from_poly(LaurentPoly::monomial(3) + LaurentPoly::monomial(15), 20);
  int w = 0;
  CHECK(series_equal(a, b, &w));
  CHECK(w == 10);
  CHECK(!series_equal(a, QSeries::from_poly(LaurentPoly::monomial(4), 10)));
  CHECK(a.shifted(2).coeff(5) == 1);
}

TEST_CASE("rational functions") {
  QRational a(LaurentPoly(1) - LaurentPoly::monomial(4), {2});  // (1-q^4)/(1-q^2) = 1+q^2
  QRational s = a.simplified();
  CHECK(s.is_polynomial());
  CHECK(s.num() == LaurentPoly(1) + LaurentPoly::monomial(2));
  QRational b(LaurentPoly(1), {1});
  QRational c(LaurentPoly::monomial(1), {1});
  CHECK(b - c == QRational(LaurentPoly(1)));
  CHECK((b * c).denom().size() == 2);
  LaurentPoly quo;
  CHECK(divide_one_minus(LaurentPoly(1) - LaurentPoly::monomial(6), 3, quo));
  CHECK(quo == LaurentPoly(1) + LaurentPoly::monomial(3));
  CHECK(!divide_one_minus(LaurentPoly(1) + LaurentPoly::monomial(1), 1, quo));
}

TEST_CASE("cyclotomic numbers") {
  for (int n : {3, 5, 7, 9}) {
    CycNum z = CycNum::zeta(n);
    CycNum p(n, 1);
    for (int k = 0; k < n; ++k) p *= z;
    CHECK(p == CycNum(n, 1));
    // 1 + z + ... + z^{n-1} = 0
    CycNum s(n, 0);
    for (int k = 0; k < n; ++k) s += CycNum::zeta(n, k);
    CHECK(s.is_zero());
    CycNum x = CycNum::zeta(n, 1) + CycNum(n, 2) - CycNum::zeta(n, 2);
    CHECK(cyc_mul(x, cyc_inv(x)) == CycNum(n, 1));
    CHECK((z * z.conj()) == CycNum(n, 1));
    CycNum re = z + z.conj();
    CHECK(re.conj() == re);
  }
  CHECK_THROWS_AS(cyc_inv(CycNum(5, 0)), std::domain_error);
  CHECK(cyclotomic_poly(3) == std::vector<mpz_class>{1, 1, 1});
}

TEST_CASE("json round trips") {
  LaurentPoly p = LaurentPoly::monomial(-2, 5) + LaurentPoly::monomial(3, -1);
  CHECK(laurent_from_json(to_json(p)) == p);
  QRational r(p, {1, 3});
  CHECK(rational_from_json(to_json(r)) == r);
  QSeries s = expand(r, 12);
  CHECK(series_equal(series_from_json(to_json(s), 12), s));
}
