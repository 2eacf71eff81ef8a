#include <unistd.h>

#include <filesystem>

#include "doctest.h"
#include "springer/modeng.hpp"

using namespace springer;

namespace {

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

Matrix hstack(const Matrix& a, const Matrix& b) {
  Matrix r(std::max(a.rows(), b.rows()), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

Matrix columns(const std::vector<Vec>& vs, int rows) {
  Matrix m(rows, static_cast<int>(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j)
    for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = vs[j][i];
  return m;
}

int safe_rank(const Matrix& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

// Block maps with the convention that blocks outside [lo, hi] are zero.
struct View {
  const GradedModule& M;
  int dim(int d, int w) const { return d < M.lo() || d > M.hi() ? 0 : M.dim(d, M.wrap(w)); }
  Matrix X(int d, int w) const {
    if (d < M.lo() || d >= M.hi()) return Matrix(dim(d + 1, w + 1), dim(d, w));
    return M.X(d, M.wrap(w));
  }
  Matrix Y(int d, int w) const {
    if (d < M.lo() || d >= M.hi()) return Matrix(dim(d + 1, w - 1), dim(d, w));
    return M.Y(d, M.wrap(w));
  }
  Matrix S(int d, int w) const {
    if (d < M.lo() || d > M.hi()) return Matrix(dim(d, -w), dim(d, w));
    return M.S(d, M.wrap(w));
  }
};

Matrix eigen_basis(const Matrix& S, int eps) {
  Matrix A = S;
  for (int i = 0; i < A.rows(); ++i) A(i, i) -= eps;
  if (A.rows() == 0) return Matrix(0, 0);
  auto ns = nullspace(A);
  return columns(ns, A.rows());
}

// Tor_i(M, k) from the Koszul complex M (x) Lambda(V); independent of the resolution code.
std::map<std::tuple<int, int, IrrLabel>, long> koszul_betti(const GroupParams& g, const GradedModule& M, int dmax) {
  View v{M};
  std::map<std::tuple<int, int, IrrLabel>, long> out;
  auto put = [&](int i, int d, const IrrLabel& l, long k) {
    if (k) out[{i, d, l}] += k;
  };
  for (int d = M.lo(); d <= dmax; ++d) {
    for (int k = 1; k <= g.C; ++k) {
      for (int w : {k, g.n - k}) {
        Matrix d1 = hstack(v.X(d - 1, w - 1), v.Y(d - 1, w + 1));
        Matrix Xm = v.X(d - 2, w);
        for (int i = 0; i < Xm.rows(); ++i)
          for (int j = 0; j < Xm.cols(); ++j) Xm(i, j) = -Xm(i, j);
        Matrix d2 = vstack(v.Y(d - 2, w), Xm);
        int c0 = v.dim(d, w), c1 = v.dim(d - 1, w - 1) + v.dim(d - 1, w + 1), c2 = v.dim(d - 2, w);
        int r1 = safe_rank(d1), r2 = safe_rank(d2);
        long h0 = c0 - r1, h1 = c1 - r1 - r2, h2 = c2 - r2;
        if (w == k) {
          put(0, d, IrrLabel::chi(g, k), h0);
          put(1, d, IrrLabel::chi(g, k), h1);
          put(2, d, IrrLabel::chi(g, k), h2);
        } else {
          // the partner weight carries the same multiplicities
          CHECK(h0 == (out.count({0, d, IrrLabel::chi(g, k)}) ? out[{0, d, IrrLabel::chi(g, k)}] : 0));
          CHECK(h1 == (out.count({1, d, IrrLabel::chi(g, k)}) ? out[{1, d, IrrLabel::chi(g, k)}] : 0));
          CHECK(h2 == (out.count({2, d, IrrLabel::chi(g, k)}) ? out[{2, d, IrrLabel::chi(g, k)}] : 0));
        }
      }
    }
    // weight 0 split into the eigenspaces of s; s swaps x and y and negates x^y
    for (int eps : {1, -1}) {
      IrrLabel lab = eps == 1 ? IrrLabel::triv() : IrrLabel::sgn();
      int c0 = v.dim(d, 0) == 0 ? 0 : eigen_basis(v.S(d, 0), eps).cols();
      int c1 = v.dim(d - 1, -1);
      Matrix d1(v.dim(d, 0), c1);
      if (c1 > 0 && v.dim(d, 0) > 0) {
        Matrix YS = v.Y(d - 1, 1) * v.S(d - 1, -1);
        Matrix Xa = v.X(d - 1, -1);
        for (int i = 0; i < d1.rows(); ++i)
          for (int j = 0; j < c1; ++j) d1(i, j) = Xa(i, j) + eps * YS(i, j);
      }
      Matrix B = v.dim(d - 2, 0) == 0 ? Matrix(0, 0) : eigen_basis(v.S(d - 2, 0), -eps);
      int c2 = B.cols();
      int r2 = 0;
      if (c2 > 0) r2 = safe_rank(vstack(v.Y(d - 2, 0) * B, v.X(d - 2, 0) * B));
      int r1 = safe_rank(d1);
      put(0, d, lab, c0 - r1);
      put(1, d, lab, c1 - r1 - r2);
      put(2, d, lab, c2 - r2);
    }
  }
  return out;
}

std::map<std::tuple<int, int, IrrLabel>, long> restrict(const BettiTable& b, int dmax) {
  std::map<std::tuple<int, int, IrrLabel>, long> out;
  for (const auto& [k, v] : b.entries)
    if (std::get<1>(k) <= dmax && v) out[k] = v;
  return out;
}

}  // namespace

TEST_CASE("Betti tables agree with Koszul homology") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    const int N = n == 7 ? 16 : 3 * n + 6;
    TraceQuotientCache cache(n, N);
    int checked = 0;
    for (const auto& l : all_labels(g))
      for (const auto& D : all_subsets(g)) {
        if (n == 7 && D.size() > 2) continue;
        auto M = cache.module(l, D);
        BettiTable b = cache.betti(l, D);
        CHECK(b.valid_to == N - 3);
        CHECK(restrict(b, b.valid_to) == koszul_betti(g, *M, b.valid_to));
        ++checked;
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("isotypic multiplicities computed two ways") {
  for (int n : {3, 5}) {
    GroupParams g(n);
    for (const auto& l : all_labels(g)) {
      GradedModule P = build_P(g, l, 2 * n);
      GradedModule Q = trace_quotient_module(g, l, {IrrLabel::sgn()}, 2 * n);
      for (const auto* M : {&P, &Q})
        for (int d = 0; d <= 2 * n; ++d)
          for (const auto& mu : all_labels(g))
            CHECK(isotypic_multiplicity(g, *M, mu, d) == block_multiplicity(g, *M, mu, d));
    }
  }
}

TEST_CASE("full matrices satisfy the defining relations of S * W") {
  GroupParams g(5);
  GradedModule P = build_P(g, IrrLabel::chi(g, 2), 6);
  for (int d = 0; d < 6; ++d) {
    auto r = P.act_r(d), s = P.act_s(d), X = P.mul_X(d), Y = P.mul_Y(d);
    auto r1 = P.act_r(d + 1), s1 = P.act_s(d + 1);
    auto mul = [](const std::vector<std::vector<CycNum>>& a, const std::vector<std::vector<CycNum>>& b) {
      std::vector<std::vector<CycNum>> c(a.size(), std::vector<CycNum>(b.empty() ? 0 : b[0].size(), CycNum(5, 0)));
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j)
          for (size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
      return c;
    };
    // s X = Y s ; r X = zeta X r
    CHECK(mul(s1, X) == mul(Y, s));
    auto rX = mul(r1, X), Xr = mul(X, r);
    for (auto& row : Xr)
      for (auto& c : row) c *= CycNum::zeta(5);
    CHECK(rX == Xr);
    // X Y = Y X between degrees d and d+2
    if (d + 1 < 6) CHECK(mul(P.mul_X(d + 1), Y) == mul(P.mul_Y(d + 1), X));
    // s^2 = 1
    auto s2 = mul(s, s);
    for (size_t i = 0; i < s2.size(); ++i)
      for (size_t j = 0; j < s2.size(); ++j) CHECK(s2[i][j] == CycNum(5, i == j ? 1 : 0));
  }
}

TEST_CASE("engine quotients agree with the closed table") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    const int N = 3 * n + 6;
    TraceQuotientCache cache(n, N);
    int covered = 0;
    for (const auto& l : all_labels(g))
      for (const auto& D : all_subsets(g)) {
        GradedCharacter cf;
        try {
          cf = gch_F_closed(g, l, D);
        } catch (const NoClosedForm&) {
          continue;
        }
        ++covered;
        CHECK(char_equal(g, cache.character(l, D), cf.expand(N)));
      }
    CHECK(covered >= 3 + 2 * g.C);
  }
}

TEST_CASE("trace quotient by every type is the simple module") {
  GroupParams g(5);
  auto labels = all_labels(g);
  LabelSet every(labels.begin(), labels.end());
  for (const auto& l : labels) {
    TruncatedCharacter c = trace_quotient(g, l, every, 21);
    CHECK(char_equal(g, c, gch_simple(l).expand(21)));
  }
}

TEST_CASE("J_chi_i and F_chi_i^chi_i") {
  // J_chi_i kills both chi_i and sgn; dropping sgn from D leaves a larger module.
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    const int N = 3 * n + 6;
    TraceQuotientCache cache(n, N);
    for (int i = 1; i <= g.C; ++i) {
      IrrLabel c = IrrLabel::chi(g, i);
      TruncatedCharacter J = cache.character(c, {c, IrrLabel::sgn()});
      TruncatedCharacter F = cache.character(c, {c});
      CHECK(char_equal(g, J, gch_F_closed(g, c, {c, IrrLabel::sgn()}).expand(N)));
      CHECK(!F.at(IrrLabel::sgn()).is_zero());
      CHECK(!char_equal(g, J, F));
    }
  }
}

TEST_CASE("generated submodules and quotients") {
  GroupParams g(5);
  GradedModule P = build_P(g, IrrLabel::triv(), 12);
  auto seeds = isotypic_component(g, P, IrrLabel::chi(g, 2), 2);
  CHECK(!seeds.empty());
  Submodule sub = generated_submodule(P, seeds);
  CHECK(is_submodule(P, sub));
  GradedModule Q = quotient(P, sub);
  for (int d = 0; d <= 12; ++d) CHECK(Q.dim(d) + sub.dim(d) == P.dim(d));
  CHECK(char_equal(g, module_character(g, Q), trace_quotient(g, IrrLabel::triv(), {IrrLabel::chi(g, 2)}, 12)));
}

TEST_CASE("dual modules") {
  GroupParams g(5);
  auto M = trace_quotient_module(g, IrrLabel::sgn(), {IrrLabel::sgn()}, 21);
  GradedModule D = dual_module(M);
  CHECK(D.lo() == -M.top_degree());
  for (int d = 0; d <= M.top_degree(); ++d) CHECK(D.dim(-d) == M.dim(d));
}

TEST_CASE("Ext into duals") {
  for (int n : {3, 5}) {
    GroupParams g(n);
    TraceQuotientCache cache(n, 3 * n + 6);
    auto labels = all_labels(g);
    LabelSet every(labels.begin(), labels.end());
    for (const auto& l : labels)
      for (const auto& mu : labels) {
        ExtTable t = ext_to_dual(g, *cache.resolution(l, {}), *cache.dual(mu, every));
        std::map<std::pair<int, int>, long> want;
        if (l == mu) want[{0, 0}] = 1;
        CHECK(t.dims == want);
      }
    ExtTable t = ext_to_dual(g, *cache.resolution(IrrLabel::sgn(), {}), *cache.dual(IrrLabel::sgn(), {IrrLabel::sgn()}));
    CHECK(t.dims == std::map<std::pair<int, int>, long>{{{0, 0}, 1}});
  }
}

TEST_CASE("alternating Ext sums reproduce the graded Euler pairing") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    TraceQuotientCache cache(n, 3 * n + 6);
    for (const auto& l : all_labels(g))
      for (const auto& D : all_subsets(g)) {
        GradedCharacter cf;
        try {
          cf = gch_F_closed(g, l, D);
        } catch (const NoClosedForm&) {
          continue;
        }
        if (!cf.is_finite()) continue;
        BettiTable b = cache.betti(l, D);
        if (b.max_degree() > b.valid_to) continue;
        for (const auto& mu : all_labels(g)) {
          LaurentPoly alt;
          for (const auto& [k, v] : ext_to_simple(b, mu)) alt.add_term(-k.second, (k.first % 2 ? -1 : 1) * v);
          CHECK(alt == gep(g, cf, mu));
        }
      }
  }
}

TEST_CASE("socles") {
  GroupParams g(7);
  TraceQuotientCache cache(7, 27);
  for (const auto& l : all_labels(g)) {
    auto labels = all_labels(g);
    CHECK(socle(g, *cache.module(l, LabelSet(labels.begin(), labels.end()))).empty());
  }
  for (int i = 1; i < g.C; ++i) {
    IrrLabel c = IrrLabel::chi(g, i);
    auto M = cache.module(c, {IrrLabel::sgn(), IrrLabel::chi(g, i + 1)});
    auto soc = socle(g, *M);
    CHECK(soc.size() == 1);
    CHECK(soc.begin()->first == i);
    CHECK(soc.begin()->second == irr(IrrLabel::triv()));
  }
}

TEST_CASE("small windows are reported, not guessed") {
  GroupParams g(7);
  TraceQuotientCache cache(7, 8);
  auto res = cache.resolution(IrrLabel::triv(), {IrrLabel::sgn()});
  auto dual = cache.dual(IrrLabel::sgn(), {IrrLabel::sgn()});
  CHECK_THROWS_AS(ext_to_dual(g, *res, *dual), InsufficientTruncation);
}

TEST_CASE("cache persistence") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("springer-cache-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  GroupParams g(5);
  LabelSet D{IrrLabel::sgn(), IrrLabel::chi(g, 2)};
  TruncatedCharacter c1;
  BettiTable b1;
  {
    TraceQuotientCache cache(5, 21, dir.string());
    c1 = cache.character(IrrLabel::chi(g, 1), D);
    b1 = cache.betti(IrrLabel::chi(g, 1), D);
    CHECK(fs::exists(cache.cache_file(IrrLabel::chi(g, 1), D)));
  }
  TraceQuotientCache again(5, 21, dir.string());
  CHECK(char_equal(g, again.character(IrrLabel::chi(g, 1), D), c1));
  CHECK(again.betti(IrrLabel::chi(g, 1), D) == b1);
  CHECK(again.disk_hits() > 0);
  CHECK(betti_from_json(g, to_json(g, b1)) == b1);
  fs::remove_all(dir);
}
