#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "doctest.h"
#include "springer/gchar.hpp"

using namespace springer;

namespace {

// [S_d (x) lambda : mu] from floating characters: a rotation r^k acts on S_d with
// eigenvalues zeta^{k(a-b)}, a+b=d; a reflection has trace 1 on even degrees, 0 on odd.
long float_proj_mult(const GroupParams& g, const IrrLabel& l, const IrrLabel& mu, int d) {
  const double pi = std::acos(-1.0);
  auto chr = [&](const IrrLabel& x, int k, bool refl) -> double {
    if (x == IrrLabel::triv()) return 1;
    if (x == IrrLabel::sgn()) return refl ? -1 : 1;
    if (refl) return 0;
    return 2 * std::cos(2 * pi * x.index(g) * k / g.n);
  };
  double s = 0;
  for (int k = 0; k < g.n; ++k) {
    std::complex<double> sd = 0;
    for (int a = 0; a <= d; ++a) sd += std::polar(1.0, 2 * pi * k * (a - (d - a)) / g.n);
    s += sd.real() * chr(l, k, false) * chr(mu, k, false);
    s += (d % 2 == 0 ? 1.0 : 0.0) * chr(l, k, true) * chr(mu, k, true);
  }
  return std::lround(s / g.order());
}

std::vector<LabelSet> all_subsets(const GroupParams& g) {
  auto labels = all_labels(g);
  std::vector<LabelSet> out;
  for (unsigned m = 0; m < (1u << labels.size()); ++m) {
    LabelSet s;
    for (size_t k = 0; k < labels.size(); ++k)
      if ((m >> k) & 1u) s.insert(labels[k]);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("projective characters against a floating character oracle") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    const int N = 3 * n + 6;
    for (const auto& l : all_labels(g)) {
      TruncatedCharacter c = gch_projective(g, l).expand(N);
      for (const auto& mu : all_labels(g))
        for (int d = 0; d <= N; ++d) CHECK(c.at(mu).coeff(d) == float_proj_mult(g, l, mu, d));
    }
  }
}

TEST_CASE("Omega equals the projective characters and is symmetric") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    OmegaMatrix om = omega(g);
    auto labels = all_labels(g);
    for (const auto& a : labels)
      for (const auto& b : labels) {
        CHECK(om[a.index(g)][b.index(g)] == gch_projective(g, a).at(b));
        CHECK(om[a.index(g)][b.index(g)] == om[b.index(g)][a.index(g)]);
      }
  }
}

TEST_CASE("regular representation sum") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    const int N = 20;
    for (const auto& mu : all_labels(g)) {
      QSeries s(0, N);
      for (const auto& l : all_labels(g)) {
        QSeries e = expand(gch_projective(g, l).at(mu), N);
        for (int d = 0; d <= N; ++d) s.add_coeff(d, l.dim() * e.coeff(d));
      }
      for (int d = 0; d <= N; ++d) CHECK(s.coeff(d) == mu.dim() * (d + 1));
    }
  }
}

TEST_CASE("closed forms have nonnegative coefficients") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    int covered = 0;
    for (const auto& l : all_labels(g))
      for (const auto& D : all_subsets(g)) {
        try {
          GradedCharacter c = gch_F_closed(g, l, D);
          ++covered;
          CHECK(c.expand(3 * n + 6).nonnegative());
        } catch (const NoClosedForm&) {
        }
      }
    CHECK(covered > 0);
  }
}

TEST_CASE("det of the projective multiplicity matrix lies in 1 + qZ[[q]]") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    const int N = 3 * n + 6;
    const int m = g.num_irr();
    auto labels = all_labels(g);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    QSeries det(0, N);
    do {
      int inversions = 0;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          if (perm[a] > perm[b]) ++inversions;
      QSeries t = QSeries::from_poly(LaurentPoly(inversions % 2 ? -1 : 1), N);
      for (int a = 0; a < m; ++a) t = t * expand(gch_projective(g, labels[a]).at(labels[perm[a]]), N);
      det += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(det.coeff(0) == 1);
    CHECK(det.valuation() == 0);
  }
}

TEST_CASE("graded Euler pairings of simples") {
  GroupParams g(5);
  const IrrLabel triv = IrrLabel::triv(), sgn = IrrLabel::sgn(), c1 = IrrLabel::chi(g, 1);
  CHECK(gep_simple(g, triv, triv) == LaurentPoly(1));
  CHECK(gep_simple(g, triv, sgn) == LaurentPoly::monomial(-2));
  CHECK(gep_simple(g, triv, c1) == LaurentPoly::monomial(-1, -1));
  for (const auto& a : all_labels(g))
    for (const auto& b : all_labels(g)) CHECK(gep(g, gch_simple(a), b) == gep_simple(g, a, b));
}

TEST_CASE("Euler pairing of F_sgn^sgn with L_sgn") {
  // Ext(F_sgn^sgn, L_sgn) lives at (0,0), (1,2), (1,n), (2,n+2).
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    GradedCharacter f = gch_F_closed(g, IrrLabel::sgn(), {IrrLabel::sgn()});
    LaurentPoly want = LaurentPoly(1) - LaurentPoly::monomial(-2) - LaurentPoly::monomial(-n) +
                       LaurentPoly::monomial(-n - 2);
    CHECK(gep(g, f, IrrLabel::sgn()) == want);
    CHECK(gep(g, f, IrrLabel::sgn()) != LaurentPoly(1));
  }
}

TEST_CASE("closed quotient table entries") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    const IrrLabel triv = IrrLabel::triv(), sgn = IrrLabel::sgn();
    GradedCharacter js = gch_F_closed(g, sgn, {sgn});
    CHECK(js.is_finite());
    CHECK(js.at(sgn) == QRational(LaurentPoly(1)));
    CHECK(js.at(triv) == QRational(LaurentPoly::monomial(n)));
    for (int j = 1; j <= g.C; ++j)
      CHECK(js.at(IrrLabel::chi(g, j)) == QRational(LaurentPoly::monomial(j) + LaurentPoly::monomial(n - j)));
    CHECK(gch_F_closed(g, triv, {IrrLabel::chi(g, 1)}) == gch_simple(triv));
    CHECK_THROWS_AS(gch_F_closed(g, triv, {triv, sgn}), NoClosedForm);
    auto labels = all_labels(g);
    for (const auto& l : labels) CHECK(gch_F_closed(g, l, LabelSet(labels.begin(), labels.end())) == gch_simple(l));
  }
}

TEST_CASE("difference identity for projective covers") {
  for (int n : {3, 5, 7})
    for (long i = -n; i <= 2 * n; ++i) CHECK(gch_diff_check(GroupParams(n), i, 3 * n + 6));
}

TEST_CASE("character json round trip") {
  GroupParams g(5);
  GradedCharacter c = gch_projective(g, IrrLabel::chi(g, 2));
  CHECK(character_from_json(g, to_json(g, c)) == c);
  TruncatedCharacter t = c.expand(12);
  CHECK(char_equal(g, truncated_from_json(g, to_json(g, t), 12), t));
}
