#include "doctest.h"
#include "springer/springer.hpp"

using namespace springer;

namespace {

QSeries poly_series(std::initializer_list<std::pair<int, long>> terms, int N) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return QSeries::from_poly(p, N);
}

Preorder strict_chain(const GroupParams& g) {
  std::vector<std::pair<int, int>> e;
  for (int k = 0; k + 1 < g.num_irr(); ++k) e.push_back({k, k + 1});
  return Preorder::closure(g.num_irr(), e);
}

}  // namespace

TEST_CASE("complete preorder gives simples and projectives") {
  for (int n : {3, 5}) {
    Engine E(n, default_trunc(n));
    const GroupParams& g = E.params();
    CandidateFamily fam = build_family(E, Preorder::complete(g.num_irr()));
    ReciprocityMatrices R = reciprocity_matrices(E, fam);
    const int m = g.num_irr();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        CHECK(series_equal(R.KL[i][j], poly_series({{0, i == j ? 1 : 0}}, E.trunc())));
        CHECK(series_equal(R.KtK[i][j], R.PL[i][j]));
      }
    CHECK(check_reciprocity(R).ok);
    CHECK(check_uniqueness(g, fam).ok);
    CHECK(evaluate(E, fam.p).status == Verdict::Status::Pass);
  }
}

TEST_CASE("strict chain at n = 3") {
  Engine E(3, 15);
  const GroupParams& g = E.params();
  CandidateFamily fam = build_family(E, strict_chain(g));
  ReciprocityMatrices R = reciprocity_matrices(E, fam);
  const int N = E.trunc();
  CHECK(series_equal(R.KL[1][0], poly_series({{1, 1}}, N)));
  CHECK(series_equal(R.KL[2][0], poly_series({{3, 1}}, N)));
  CHECK(series_equal(R.KL[2][1], poly_series({{1, 1}, {2, 1}}, N)));
  for (int i = 0; i < 3; ++i) {
    CHECK(series_equal(R.KL[i][i], poly_series({{0, 1}}, N)));
    for (int j = i + 1; j < 3; ++j) CHECK(R.KL[i][j].is_zero());
  }
  CHECK(check_reciprocity(R).ok);
  CHECK(series_matrix_equal(R.PK, series_transpose(R.KtL)));
  CHECK(check_possible_D(g, fam).ok);
  CHECK(triv_sgn_orientation(g, fam) == 1);
  // [K_sgn : L_triv] = q^n witnesses sgn not below triv
  CHECK(series_equal(fam.K[2].at(IrrLabel::triv()), poly_series({{3, 1}}, N)));
  CHECK(check_uniqueness(g, fam).ok);
}

TEST_CASE("series matrix inverse") {
  const int N = 12;
  SeriesMatrix A{{poly_series({{0, 1}, {1, 2}}, N), poly_series({{2, 1}}, N)},
                 {poly_series({{1, -1}}, N), poly_series({{0, 1}, {3, 5}}, N)}};
  SeriesMatrix B = series_inverse(A);
  SeriesMatrix I = series_mul(A, B), J = series_mul(B, A);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(series_equal(I[i][j], poly_series({{0, i == j ? 1 : 0}}, N)));
      CHECK(series_equal(J[i][j], poly_series({{0, i == j ? 1 : 0}}, N)));
    }
  SeriesMatrix bad{{poly_series({{0, 2}}, N)}};
  CHECK_THROWS_AS(series_inverse(bad), std::domain_error);
}

TEST_CASE("non-theorem preorders fail with a named condition") {
  Engine E(5, 21);
  const GroupParams& g = E.params();
  Verdict v = evaluate(E, Preorder::discrete(g.num_irr()));
  CHECK(v.status == Verdict::Status::Fail);
  CHECK(!v.failed.empty());
  // chi1 at the bottom of a total order
  Verdict w = evaluate(E, Preorder::closure(4, {{1, 0}, {0, 2}, {2, 3}}));
  CHECK(w.status == Verdict::Status::Fail);
}

TEST_CASE("verdicts are stable under the triv/sgn swap") {
  for (int n : {3, 5}) {
    Engine E(n, default_trunc(n));
    const GroupParams& g = E.params();
    for (const auto& p : enumerate_preorders(g.num_irr()))
      CHECK(evaluate(E, p).status == evaluate(E, swap_triv_sgn(g, p)).status);
  }
}

TEST_CASE("pass set equals the theorem list and properties hold") {
  for (int n : {3, 5}) {
    Engine E(n, default_trunc(n));
    const GroupParams& g = E.params();
    ClassificationReport r = classify(E);
    CHECK(r.match);
    CHECK(r.inconclusive.empty());
    for (const auto& v : r.verdicts) CHECK((v.status == Verdict::Status::Pass) == (theorem_case(g, v.p) != 0));
    for (const auto& p : r.properties) CHECK_MESSAGE(p.ok, p.name << ": " << p.detail);
    for (const auto& p : r.passed) {
      CandidateFamily fam = build_family(E, p);
      CHECK(check_socle_law(E, fam).ok);
      CHECK(check_chain_law(g, fam).ok);
      CHECK(check_possible_D(g, fam).ok);
      CHECK(check_ext1_edges(E, fam).ok);
      CHECK(check_recovery(g, fam).ok);
      CHECK(check_finite(g, fam).ok);
      // every passing K is finite-dimensional with top degree at most n
      for (int t : fam.top) CHECK(t <= n);
    }
  }
}

TEST_CASE("parallel classification is deterministic") {
  ClassifyOptions one, many;
  many.jobs = 4;
  ClassificationReport a = classify(5, 21, one), b = classify(5, 21, many);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (size_t k = 0; k < a.verdicts.size(); ++k) {
    CHECK(a.verdicts[k].p == b.verdicts[k].p);
    CHECK(a.verdicts[k].status == b.verdicts[k].status);
    CHECK(a.verdicts[k].failed == b.verdicts[k].failed);
  }
  CHECK(to_json(a)["passed"] == to_json(b)["passed"]);
}

TEST_CASE("report json schema") {
  ClassificationReport r = classify(3, 15);
  nlohmann::json j = to_json(r);
  for (const char* key : {"n", "trunc", "scanned", "passed", "expected", "match", "inconclusive", "matrices"})
    CHECK(j.contains(key));
  CHECK(j["scanned"] == 29);
  CHECK(j["passed"].size() == 5);
  CHECK(j["matrices"].size() == 5);
  CHECK(to_table(r).find("match=yes") != std::string::npos);
}

TEST_CASE("truncation shortfalls make verdicts inconclusive") {
  Engine E(5, 7);
  const GroupParams& g = E.params();
  Verdict v = evaluate(E, strict_chain(g));
  CHECK(v.status == Verdict::Status::Inconclusive);
  CHECK(v.failed == "orthogonality");
  ClassificationReport r = classify(E);
  CHECK(!r.inconclusive.empty());
  CHECK(!r.match);
}
