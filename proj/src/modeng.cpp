#include "springer/modeng.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace springer {

// ------------------------------------------------------------- GradedModule

GradedModule::GradedModule(int n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {
  if (hi < lo - 1) throw std::invalid_argument("bad degree range");
  dims_.assign(hi - lo + 1, std::vector<int>(n, 0));
}

int GradedModule::off(int d) const {
  if (d < lo_ || d > hi_) throw std::out_of_range("degree outside module range");
  return d - lo_;
}

int GradedModule::dim(int d, int w) const {
  if (d < lo_ || d > hi_) return 0;
  return dims_[d - lo_][wrap(w)];
}

int GradedModule::dim(int d) const {
  int s = 0;
  for (int w = 0; w < n_; ++w) s += dim(d, w);
  return s;
}

int GradedModule::top_degree() const {
  for (int d = hi_; d >= lo_; --d)
    if (dim(d) > 0) return d;
  return lo_ - 1;
}

void GradedModule::set_dim(int d, int w, int k) { dims_[off(d)][wrap(w)] = k; }

void GradedModule::allocate_maps() {
  int len = hi_ - lo_ + 1;
  X_.assign(len, std::vector<Matrix>(n_));
  Y_.assign(len, std::vector<Matrix>(n_));
  S_.assign(len, std::vector<Matrix>(n_));
  for (int d = lo_; d <= hi_; ++d)
    for (int w = 0; w < n_; ++w) {
      S_[d - lo_][w] = Matrix(dim(d, -w), dim(d, w));
      if (d < hi_) {
        X_[d - lo_][w] = Matrix(dim(d + 1, w + 1), dim(d, w));
        Y_[d - lo_][w] = Matrix(dim(d + 1, w - 1), dim(d, w));
      }
    }
}

const Matrix& GradedModule::X(int d, int w) const {
  if (d >= hi_) throw std::out_of_range("X undefined at top degree");
  return X_[off(d)][wrap(w)];
}
const Matrix& GradedModule::Y(int d, int w) const {
  if (d >= hi_) throw std::out_of_range("Y undefined at top degree");
  return Y_[off(d)][wrap(w)];
}
const Matrix& GradedModule::S(int d, int w) const { return S_[off(d)][wrap(w)]; }
Matrix& GradedModule::X(int d, int w) {
  if (d >= hi_) throw std::out_of_range("X undefined at top degree");
  return X_[off(d)][wrap(w)];
}
Matrix& GradedModule::Y(int d, int w) {
  if (d >= hi_) throw std::out_of_range("Y undefined at top degree");
  return Y_[off(d)][wrap(w)];
}
Matrix& GradedModule::S(int d, int w) { return S_[off(d)][wrap(w)]; }

namespace {

std::vector<int> block_offsets(const GradedModule& M, int d) {
  std::vector<int> o(M.n() + 1, 0);
  for (int w = 0; w < M.n(); ++w) o[w + 1] = o[w] + M.dim(d, w);
  return o;
}

}  // namespace

std::vector<std::vector<CycNum>> GradedModule::full(int d_from, int d_to, const std::vector<std::vector<Matrix>>& maps,
                                                    int shift) const {
  std::vector<int> of = block_offsets(*this, d_from), ot = block_offsets(*this, d_to);
  std::vector<std::vector<CycNum>> m(dim(d_to), std::vector<CycNum>(dim(d_from), CycNum(n_, 0)));
  for (int w = 0; w < n_; ++w) {
    const Matrix& b = maps[off(d_from)][w];
    int wt = shift == 0 ? wrap(-w) : wrap(w + shift);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m[ot[wt] + i][of[w] + j] = CycNum(n_, b(i, j));
  }
  return m;
}

std::vector<std::vector<CycNum>> GradedModule::act_r(int d) const {
  std::vector<int> o = block_offsets(*this, d);
  std::vector<std::vector<CycNum>> m(dim(d), std::vector<CycNum>(dim(d), CycNum(n_, 0)));
  for (int w = 0; w < n_; ++w)
    for (int k = o[w]; k < o[w + 1]; ++k) m[k][k] = CycNum::zeta(n_, w);
  return m;
}

std::vector<std::vector<CycNum>> GradedModule::act_s(int d) const { return full(d, d, S_, 0); }

std::vector<std::vector<CycNum>> GradedModule::mul_X(int d) const {
  if (d >= hi_) throw std::out_of_range("X undefined at top degree");
  return full(d, d + 1, X_, 1);
}

std::vector<std::vector<CycNum>> GradedModule::mul_Y(int d) const {
  if (d >= hi_) throw std::out_of_range("Y undefined at top degree");
  return full(d, d + 1, Y_, -1);
}

int Submodule::dim(int d) const {
  if (d < lo || d > hi) return 0;
  int s = 0;
  for (const auto& b : blocks[d - lo]) s += b.dim();
  return s;
}

// ------------------------------------------------------------------ build_P

namespace {

// Basis vectors of lambda: (weight, s-image index, s-sign).
struct LocalVec {
  int weight, partner, sign;
};

std::vector<LocalVec> local_basis(const GroupParams& g, const IrrLabel& l) {
  switch (l.kind) {
    case IrrLabel::Kind::Triv: return {{0, 0, 1}};
    case IrrLabel::Kind::Sgn: return {{0, 0, -1}};
    case IrrLabel::Kind::Chi: return {{l.i, 1, 1}, {g.n - l.i, 0, 1}};
  }
  return {};
}

}  // namespace

GradedModule build_P(const GroupParams& g, const IrrLabel& l, int N) {
  if (N < 0) throw std::invalid_argument("truncation must be nonnegative");
  const int n = g.n;
  std::vector<LocalVec> lb = local_basis(g, l);
  GradedModule M(n, 0, N);
  // pos[d][v][a] index of X^a Y^(d-a) (x) v within its block
  std::vector<std::vector<std::vector<int>>> pos(N + 1, std::vector<std::vector<int>>(lb.size()));
  for (int d = 0; d <= N; ++d) {
    std::vector<int> cnt(n, 0);
    for (size_t v = 0; v < lb.size(); ++v) {
      pos[d][v].resize(d + 1);
      for (int a = 0; a <= d; ++a) {
        int w = M.wrap(a - (d - a) + lb[v].weight);
        pos[d][v][a] = cnt[w]++;
      }
    }
    for (int w = 0; w < n; ++w) M.set_dim(d, w, cnt[w]);
  }
  M.allocate_maps();
  for (int d = 0; d <= N; ++d)
    for (size_t v = 0; v < lb.size(); ++v)
      for (int a = 0; a <= d; ++a) {
        int b = d - a;
        int w = M.wrap(a - b + lb[v].weight);
        int p = pos[d][v][a];
        int ps = pos[d][lb[v].partner][b];
        M.S(d, w)(ps, p) = lb[v].sign;
        if (d < N) {
          M.X(d, w)(pos[d + 1][v][a + 1], p) = 1;
          M.Y(d, w)(pos[d + 1][v][a], p) = 1;
        }
      }
  return M;
}

// ------------------------------------------------------------- isotypic data

long isotypic_multiplicity(const GroupParams& g, const GradedModule& M, const IrrLabel& mu, int d) {
  if (d > M.hi()) throw std::out_of_range("degree beyond truncation");
  ClassFunction chi;
  mpq_class trs = 0;
  if (d >= M.lo() && M.dim(d, 0) > 0) {
    const Matrix& s0 = M.S(d, 0);
    for (int i = 0; i < s0.rows(); ++i) trs += s0(i, i);
  }
  for (const auto& e : all_elements(g)) {
    if (e.refl) {
      chi.push_back(CycNum(g.n, trs));
    } else {
      CycNum t(g.n, 0);
      for (int w = 0; w < g.n; ++w)
        if (M.dim(d, w) > 0) t += CycNum(g.n, M.dim(d, w)) * CycNum::zeta(g.n, static_cast<long>(e.rot) * w);
      chi.push_back(t);
    }
  }
  long m = mult_in(g, chi, mu);
  if (m < 0) throw std::runtime_error("negative isotypic multiplicity");
  return m;
}

long block_multiplicity(const GroupParams& g, const GradedModule& M, const IrrLabel& mu, int d) {
  if (d < M.lo() || d > M.hi()) return 0;
  if (mu.is_chi()) return M.dim(d, mu.i);
  long d0 = M.dim(d, 0);
  mpq_class tr = 0;
  const Matrix& s0 = M.S(d, 0);
  for (int i = 0; i < s0.rows(); ++i) tr += s0(i, i);
  mpq_class m = mu.kind == IrrLabel::Kind::Triv ? mpq_class((d0 + tr) / 2) : mpq_class((d0 - tr) / 2);
  if (m.get_den() != 1 || m < 0) throw std::runtime_error("inconsistent reflection trace");
  (void)g;
  return m.get_num().get_si();
}

namespace {

std::vector<Vec> unit_vectors(int dim) {
  std::vector<Vec> out;
  for (int i = 0; i < dim; ++i) {
    Vec v(dim);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> eigen_s0(const GradedModule& M, int d, int eps) {
  Matrix a = M.S(d, 0);
  for (int i = 0; i < a.rows(); ++i) a(i, i) -= eps;
  return nullspace(a);
}

}  // namespace

std::vector<Seed> isotypic_component(const GroupParams& g, const GradedModule& M, const IrrLabel& mu, int d) {
  std::vector<Seed> out;
  if (d < M.lo() || d > M.hi()) return out;
  if (mu.is_chi()) {
    for (int w : {mu.i, g.n - mu.i})
      if (M.dim(d, w) > 0) out.push_back({d, w, unit_vectors(M.dim(d, w))});
  } else if (M.dim(d, 0) > 0) {
    auto vs = eigen_s0(M, d, mu.kind == IrrLabel::Kind::Triv ? 1 : -1);
    if (!vs.empty()) out.push_back({d, 0, std::move(vs)});
  }
  return out;
}

// --------------------------------------------------------------- submodules

Submodule generated_submodule(const GradedModule& M, const std::vector<Seed>& seeds) {
  const int n = M.n();
  Submodule sub;
  sub.lo = M.lo();
  sub.hi = M.hi();
  sub.blocks.resize(M.hi() - M.lo() + 1);
  for (int d = M.lo(); d <= M.hi(); ++d) {
    std::vector<std::vector<Vec>> gens(n);
    for (const auto& s : seeds)
      if (s.degree == d)
        for (const auto& v : s.vectors) gens[M.wrap(s.weight)].push_back(v);
    if (d > M.lo())
      for (int w = 0; w < n; ++w) {
        for (const auto& v : sub.at(d - 1, w - 1 + (w == 0 ? n : 0)).basis())
          gens[w].push_back(springer::apply(M.X(d - 1, w - 1), v));
        for (const auto& v : sub.at(d - 1, (w + 1) % n).basis()) gens[w].push_back(springer::apply(M.Y(d - 1, w + 1), v));
      }
    std::vector<Subspace> blocks(n);
    for (int w = 0; w < n; ++w) blocks[w] = Subspace::span(M.dim(d, w), gens[w]);
    // close under s: contributions from the mirrored block
    sub.blocks[d - M.lo()].resize(n);
    for (int w = 0; w < n; ++w) {
      int mw = M.wrap(-w);
      std::vector<Vec> extra;
      for (const auto& v : blocks[mw].basis()) extra.push_back(springer::apply(M.S(d, mw), v));
      Subspace s = blocks[w];
      s.add(extra);
      sub.at(d, w) = std::move(s);
    }
  }
  return sub;
}

bool is_submodule(const GradedModule& M, const Submodule& sub) {
  for (int d = M.lo(); d <= M.hi(); ++d)
    for (int w = 0; w < M.n(); ++w)
      for (const auto& v : sub.at(d, w).basis()) {
        if (!sub.at(d, -w + (w == 0 ? 0 : M.n())).contains(springer::apply(M.S(d, w), v))) return false;
        if (d < M.hi()) {
          if (!sub.at(d + 1, (w + 1) % M.n()).contains(springer::apply(M.X(d, w), v))) return false;
          if (!sub.at(d + 1, M.wrap(w - 1)).contains(springer::apply(M.Y(d, w), v))) return false;
        }
      }
  return true;
}

GradedModule quotient(const GradedModule& M, const Submodule& sub) {
  const int n = M.n();
  GradedModule Q(n, M.lo(), M.hi());
  for (int d = M.lo(); d <= M.hi(); ++d)
    for (int w = 0; w < n; ++w) Q.set_dim(d, w, M.dim(d, w) - sub.at(d, w).dim());
  Q.allocate_maps();
  auto fill = [&](Matrix& target, const Matrix& src, const Subspace& from, const Subspace& to) {
    std::vector<int> fc = from.free_columns();
    for (size_t j = 0; j < fc.size(); ++j) {
      Vec img = src.col(fc[j]);
      Vec q = to.quotient_coords(img);
      for (size_t i = 0; i < q.size(); ++i) target(static_cast<int>(i), static_cast<int>(j)) = q[i];
    }
  };
  for (int d = M.lo(); d <= M.hi(); ++d)
    for (int w = 0; w < n; ++w) {
      const Subspace& f = sub.at(d, w);
      fill(Q.S(d, w), M.S(d, w), f, sub.at(d, M.wrap(-w)));
      if (d < M.hi()) {
        fill(Q.X(d, w), M.X(d, w), f, sub.at(d + 1, M.wrap(w + 1)));
        fill(Q.Y(d, w), M.Y(d, w), f, sub.at(d + 1, M.wrap(w - 1)));
      }
    }
  return Q;
}

TruncatedCharacter module_character(const GroupParams& g, const GradedModule& M) {
  TruncatedCharacter c;
  c.trunc = M.hi();
  for (const auto& l : all_labels(g)) {
    QSeries s(M.lo(), M.hi());
    for (int d = M.lo(); d <= M.hi(); ++d) s.set_coeff(d, block_multiplicity(g, M, l, d));
    if (!s.is_zero()) c.entries[l] = s;
  }
  return c;
}

GradedModule trace_quotient_module(const GroupParams& g, const IrrLabel& l, const LabelSet& D, int N) {
  GradedModule P = build_P(g, l, N);
  std::vector<Seed> seeds;
  for (const auto& mu : D)
    for (int d = 1; d <= N; ++d) {
      auto s = isotypic_component(g, P, mu, d);
      seeds.insert(seeds.end(), s.begin(), s.end());
    }
  return quotient(P, generated_submodule(P, seeds));
}

TruncatedCharacter trace_quotient(const GroupParams& g, const IrrLabel& l, const LabelSet& D, int N) {
  return module_character(g, trace_quotient_module(g, l, D, N));
}

// -------------------------------------------------------------- resolutions

long BettiTable::at(int i, int d, const IrrLabel& mu) const {
  auto it = entries.find({i, d, mu});
  return it == entries.end() ? 0 : it->second;
}

long BettiTable::total(int i) const {
  long s = 0;
  for (const auto& [k, v] : entries)
    if (std::get<0>(k) == i) s += v;
  return s;
}

int BettiTable::max_degree() const {
  int m = -1;
  for (const auto& [k, v] : entries)
    if (v != 0) m = std::max(m, std::get<1>(k));
  return m;
}

FreeModule build_free(int n, const std::vector<Generator>& gens, int N) {
  FreeModule F;
  F.gens = gens;
  int lo = 0;
  for (const auto& g : gens) lo = std::min(lo, g.degree);
  F.mod = GradedModule(n, lo, N);
  GradedModule& M = F.mod;
  F.basis.assign(N - lo + 1, std::vector<std::vector<FreeModule::Entry>>(n));
  F.pos.resize(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const Generator& g = gens[gi];
    for (int k = 0; g.degree + k <= N; ++k) {
      F.pos[gi].emplace_back(k + 1);
      for (int a = 0; a <= k; ++a) {
        int w = M.wrap(g.weight + a - (k - a));
        auto& blk = F.basis[g.degree + k - lo][w];
        F.pos[gi][k][a] = static_cast<int>(blk.size());
        blk.push_back({static_cast<int>(gi), a, k - a});
      }
    }
  }
  for (int d = lo; d <= N; ++d)
    for (int w = 0; w < n; ++w) M.set_dim(d, w, static_cast<int>(F.basis[d - lo][w].size()));
  M.allocate_maps();
  for (int d = lo; d <= N; ++d)
    for (int w = 0; w < n; ++w)
      for (size_t p = 0; p < F.basis[d - lo][w].size(); ++p) {
        const auto& e = F.basis[d - lo][w][p];
        const Generator& g = gens[e.gen];
        int k = e.a + e.b;
        int col = static_cast<int>(p);
        M.S(d, w)(F.pos[g.partner][k][e.b], col) = g.sign;
        if (d < N) {
          M.X(d, w)(F.pos[e.gen][k + 1][e.a + 1], col) = 1;
          M.Y(d, w)(F.pos[e.gen][k + 1][e.a], col) = 1;
        }
      }
  return F;
}

namespace {

// W-stable minimal generators of the submodule K of A.
std::vector<Generator> choose_generators(const GroupParams& g, const GradedModule& A, const Submodule& K) {
  const int n = A.n();
  std::vector<Generator> gens;
  for (int d = A.lo(); d <= A.hi(); ++d) {
    std::vector<Subspace> im(n);
    for (int w = 0; w < n; ++w) {
      im[w] = Subspace(A.dim(d, w));
      if (d > A.lo()) {
        std::vector<Vec> vs;
        for (const auto& v : K.at(d - 1, A.wrap(w - 1)).basis()) vs.push_back(springer::apply(A.X(d - 1, w - 1), v));
        for (const auto& v : K.at(d - 1, A.wrap(w + 1)).basis()) vs.push_back(springer::apply(A.Y(d - 1, w + 1), v));
        im[w].add(vs);
      }
    }
    for (int w = 1; w <= g.C; ++w) {
      Subspace span = im[w];
      for (const auto& v : K.at(d, w).basis())
        if (span.add({v})) {
          int a = static_cast<int>(gens.size());
          gens.push_back({d, w, a + 1, 1, v});
          gens.push_back({d, n - w, a, 1, springer::apply(A.S(d, w), v)});
        }
    }
    const Subspace& k0 = K.at(d, 0);
    if (k0.dim() == 0) continue;
    std::vector<Vec> plus, minus;
    for (const auto& v : k0.basis()) {
      Vec sv = springer::apply(A.S(d, 0), v);
      Vec p = v, m = v;
      for (size_t i = 0; i < v.size(); ++i) {
        p[i] += sv[i];
        m[i] -= sv[i];
      }
      plus.push_back(std::move(p));
      minus.push_back(std::move(m));
    }
    Subspace span = im[0];
    for (int eps : {1, -1}) {
      Subspace part = Subspace::span(A.dim(d, 0), eps == 1 ? plus : minus);
      for (const auto& v : part.basis())
        if (span.add({v})) {
          int a = static_cast<int>(gens.size());
          gens.push_back({d, 0, a, eps, v});
        }
    }
  }
  return gens;
}

void record_betti(const GroupParams& g, const std::vector<Generator>& gens, int i, BettiTable& b) {
  for (const auto& gen : gens) {
    IrrLabel l;
    if (gen.weight == 0)
      l = gen.sign == 1 ? IrrLabel::triv() : IrrLabel::sgn();
    else if (gen.weight <= g.C)
      l = IrrLabel::chi(g, gen.weight);
    else
      continue;
    b.entries[{i, gen.degree, l}] += 1;
  }
}

// Images of the monomial basis of F in A and the kernel.
std::vector<std::vector<Matrix>> build_phi(const FreeModule& F, const GradedModule& A) {
  const GradedModule& M = F.mod;
  const int n = M.n();
  std::vector<std::vector<Matrix>> phi(M.hi() - M.lo() + 1, std::vector<Matrix>(n));
  for (int d = M.lo(); d <= M.hi(); ++d)
    for (int w = 0; w < n; ++w) phi[d - M.lo()][w] = Matrix(A.dim(d, w), M.dim(d, w));
  for (size_t gi = 0; gi < F.gens.size(); ++gi) {
    const Generator& g = F.gens[gi];
    std::vector<Vec> prev;  // images at k-1 indexed by a
    for (int k = 0; g.degree + k <= M.hi(); ++k) {
      int d = g.degree + k;
      std::vector<Vec> cur(k + 1);
      for (int a = 0; a <= k; ++a) {
        int b = k - a;
        if (k == 0) {
          cur[a] = g.image;
        } else if (a > 0) {
          cur[a] = springer::apply(A.X(d - 1, g.weight + (a - 1) - b), prev[a - 1]);
        } else {
          cur[a] = springer::apply(A.Y(d - 1, g.weight - (b - 1)), prev[0]);
        }
        int w = M.wrap(g.weight + a - b);
        Matrix& m = phi[d - M.lo()][w];
        int col = F.pos[gi][k][a];
        for (int r = 0; r < m.rows(); ++r) m(r, col) = cur[a][r];
      }
      prev = std::move(cur);
    }
  }
  return phi;
}

Submodule kernel_of(const FreeModule& F, const std::vector<std::vector<Matrix>>& phi) {
  const GradedModule& M = F.mod;
  Submodule K;
  K.lo = M.lo();
  K.hi = M.hi();
  K.blocks.resize(M.hi() - M.lo() + 1);
  for (int d = M.lo(); d <= M.hi(); ++d)
    for (int w = 0; w < M.n(); ++w)
      K.blocks[d - M.lo()].push_back(Subspace::span(M.dim(d, w), nullspace(phi[d - M.lo()][w])));
  return K;
}

}  // namespace

BettiTable betti_of(const GroupParams& g, const std::vector<Generator>& gens, int i, BettiTable& into) {
  record_betti(g, gens, i, into);
  return into;
}

Resolution minimal_resolution(const GroupParams& g, const GradedModule& M) {
  if (M.n() != g.n) throw std::invalid_argument("module belongs to a different group");
  Resolution res;
  res.n = g.n;
  res.trunc = M.hi();
  res.betti.valid_to = M.hi() - 3;
  Submodule whole;
  whole.lo = M.lo();
  whole.hi = M.hi();
  whole.blocks.resize(M.hi() - M.lo() + 1);
  for (int d = M.lo(); d <= M.hi(); ++d)
    for (int w = 0; w < g.n; ++w) whole.blocks[d - M.lo()].push_back(Subspace::whole(M.dim(d, w)));

  const GradedModule* target = &M;
  Submodule K = std::move(whole);
  res.steps.reserve(3);
  for (int i = 0; i < 3; ++i) {
    std::vector<Generator> gens = choose_generators(g, *target, K);
    record_betti(g, gens, i, res.betti);
    ResolutionStep step;
    step.F = build_free(g.n, gens, M.hi());
    step.phi = build_phi(step.F, *target);
    res.steps.push_back(std::move(step));
    const ResolutionStep& st = res.steps.back();
    K = kernel_of(st.F, st.phi);
    target = &st.F.mod;
  }
  for (int d = K.lo; d <= K.hi; ++d)
    if (K.dim(d) != 0)
      throw std::runtime_error("nonzero third syzygy in degree " + std::to_string(d) + ": global dimension violated");
  return res;
}

std::map<std::pair<int, int>, long> ext_to_simple(const BettiTable& b, const IrrLabel& mu) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [k, v] : b.entries)
    if (std::get<2>(k) == mu && v != 0) out[{std::get<0>(k), std::get<1>(k)}] += v;
  return out;
}

GradedModule dual_module(const GradedModule& M) {
  int top = M.top_degree();
  if (top >= M.hi()) throw InsufficientTruncation("module is not finite-dimensional within its truncation");
  const int n = M.n();
  int lo = top < M.lo() ? 0 : -top;
  int hi = top < M.lo() ? 0 : -M.lo();
  GradedModule D(n, lo, hi);
  for (int d = lo; d <= hi; ++d)
    for (int w = 0; w < n; ++w) D.set_dim(d, w, M.dim(-d, -w));
  D.allocate_maps();
  for (int d = lo; d <= hi; ++d)
    for (int w = 0; w < n; ++w) {
      // block (d, w) is dual to M(-d, -w)
      if (M.dim(-d, -w) == 0) continue;
      D.S(d, w) = M.S(-d, w).transpose();
      if (d < hi) {
        D.X(d, w) = M.X(-d - 1, -w - 1).transpose();
        D.Y(d, w) = M.Y(-d - 1, -w + 1).transpose();
      }
    }
  return D;
}

// ------------------------------------------------------------- ext_to_dual

namespace {

struct HomVector {
  int gen;      // representative generator
  Vec value;    // phi(gen)
  int partner;  // -1 if self-paired
  Vec pvalue;   // phi(partner)
};

bool is_rep(const GroupParams& g, const Generator& gen) { return gen.weight == 0 || gen.weight <= g.C; }

Vec monomial(const GradedModule& N, Vec v, int deg, int w, int a, int b) {
  for (int k = 0; k < b; ++k) {
    if (deg + 1 > N.hi() || is_zero(v)) return {};
    v = springer::apply(N.Y(deg, w), v);
    ++deg;
    --w;
  }
  for (int k = 0; k < a; ++k) {
    if (deg + 1 > N.hi() || is_zero(v)) return {};
    v = springer::apply(N.X(deg, w), v);
    ++deg;
    ++w;
  }
  return v;
}

std::vector<HomVector> hom_basis(const GroupParams& g, const FreeModule& F, const GradedModule& N, int d) {
  std::vector<HomVector> out;
  for (size_t gi = 0; gi < F.gens.size(); ++gi) {
    const Generator& gen = F.gens[gi];
    if (!is_rep(g, gen)) continue;
    int e = gen.degree + d;
    if (e < N.lo() || e > N.hi() || N.dim(e, gen.weight) == 0) continue;
    if (gen.weight == 0) {
      for (auto& v : eigen_s0(N, e, gen.sign)) out.push_back({static_cast<int>(gi), std::move(v), -1, {}});
    } else {
      for (auto& v : unit_vectors(N.dim(e, gen.weight))) {
        Vec pv = springer::apply(N.S(e, gen.weight), v);
        if (gen.sign == -1)
          for (auto& x : pv) x = -x;
        out.push_back({static_cast<int>(gi), std::move(v), gen.partner, std::move(pv)});
      }
    }
  }
  return out;
}

// Matrix of the coboundary C^i_d -> C^{i+1}_d, evaluated on representative generators of F_{i+1}.
Matrix coboundary(const GroupParams& g, const FreeModule& Fi, const FreeModule& Fn, const GradedModule& N, int d,
                  const std::vector<HomVector>& basis) {
  std::vector<int> reps, offs{0};
  for (size_t h = 0; h < Fn.gens.size(); ++h) {
    const Generator& gen = Fn.gens[h];
    if (!is_rep(g, gen)) continue;
    reps.push_back(static_cast<int>(h));
    offs.push_back(offs.back() + N.dim(gen.degree + d, gen.weight));
  }
  Matrix m(offs.back(), static_cast<int>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) {
    const HomVector& hv = basis[c];
    for (size_t r = 0; r < reps.size(); ++r) {
      const Generator& h = Fn.gens[reps[r]];
      int target = h.degree + d;
      if (N.dim(target, h.weight) == 0) continue;
      const auto& entries = Fi.basis[h.degree - Fi.mod.lo()][h.weight];
      Vec acc(N.dim(target, h.weight));
      for (size_t p = 0; p < entries.size(); ++p) {
        const mpq_class& coef = h.image[p];
        if (coef == 0) continue;
        const auto& e = entries[p];
        const Vec* src = nullptr;
        if (e.gen == hv.gen)
          src = &hv.value;
        else if (e.gen == hv.partner)
          src = &hv.pvalue;
        else
          continue;
        const Generator& gg = Fi.gens[e.gen];
        Vec img = monomial(N, *src, gg.degree + d, gg.weight, e.a, e.b);
        if (img.empty()) continue;
        for (size_t k = 0; k < acc.size(); ++k) acc[k] += coef * img[k];
      }
      for (size_t k = 0; k < acc.size(); ++k) m(offs[r] + static_cast<int>(k), static_cast<int>(c)) = acc[k];
    }
  }
  return m;
}

}  // namespace

ExtTable ext_to_dual(const GroupParams& g, const Resolution& res, const GradedModule& Kdual) {
  if (res.steps.size() != 3) throw std::invalid_argument("resolution must have three steps");
  ExtTable out;
  int valid_to = res.betti.valid_to;
  out.window_lo = -valid_to;
  int gmax = 0;
  bool any = false;
  for (const auto& st : res.steps)
    for (const auto& gen : st.F.gens) {
      gmax = std::max(gmax, gen.degree);
      any = true;
    }
  if (!any || Kdual.top_degree() < Kdual.lo()) return out;
  int dlo = Kdual.lo() - gmax, dhi = Kdual.hi();
  if (dlo < out.window_lo)
    throw InsufficientTruncation("resolution valid to degree " + std::to_string(valid_to) + " but Hom reaches degree " +
                                 std::to_string(dlo));
  for (int d = dlo; d <= dhi; ++d) {
    std::vector<std::vector<HomVector>> C(3);
    for (int i = 0; i < 3; ++i) C[i] = hom_basis(g, res.steps[i].F, Kdual, d);
    int r0 = C[0].empty() || C[1].empty() ? 0 : rank(coboundary(g, res.steps[0].F, res.steps[1].F, Kdual, d, C[0]));
    int r1 = C[1].empty() || C[2].empty() ? 0 : rank(coboundary(g, res.steps[1].F, res.steps[2].F, Kdual, d, C[1]));
    long h0 = static_cast<long>(C[0].size()) - r0;
    long h1 = static_cast<long>(C[1].size()) - r1 - r0;
    long h2 = static_cast<long>(C[2].size()) - r1;
    if (h0) out.dims[{0, d}] = h0;
    if (h1) out.dims[{1, d}] = h1;
    if (h2) out.dims[{2, d}] = h2;
  }
  return out;
}

// ------------------------------------------------------------------- socle

std::map<int, VirtualRep> socle(const GroupParams& g, const GradedModule& M) {
  std::map<int, VirtualRep> out;
  for (int d = std::max(M.lo(), 1); d < M.hi(); ++d) {
    VirtualRep v;
    for (int w = 0; w < g.n; ++w) {
      int k = M.dim(d, w);
      if (k == 0 || (w > g.C)) continue;
      const Matrix& x = M.X(d, w);
      const Matrix& y = M.Y(d, w);
      int extra = w == 0 ? k : 0;
      Matrix st(x.rows() + y.rows() + extra, k);
      for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < k; ++j) st(i, j) = x(i, j);
      for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < k; ++j) st(x.rows() + i, j) = y(i, j);
      if (w == 0) {
        for (int eps : {1, -1}) {
          const Matrix& s = M.S(d, 0);
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) st(x.rows() + y.rows() + i, j) = s(i, j) - (i == j ? eps : 0);
          long m = static_cast<long>(nullspace(st).size());
          if (m) v.add(eps == 1 ? IrrLabel::triv() : IrrLabel::sgn(), m);
        }
      } else {
        long m = static_cast<long>(nullspace(st).size());
        if (m) v.add(IrrLabel::chi(g, w), m);
      }
    }
    if (!v.mults.empty()) out[d] = v;
  }
  return out;
}

// ------------------------------------------------------------ serialization

nlohmann::json to_json(const GroupParams& g, const BettiTable& b) {
  (void)g;
  nlohmann::json e = nlohmann::json::array();
  for (const auto& [k, v] : b.entries)
    if (v != 0) e.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k).name(), v});
  return {{"valid_to", b.valid_to}, {"entries", e}};
}

BettiTable betti_from_json(const GroupParams& g, const nlohmann::json& j) {
  BettiTable b;
  b.valid_to = j.at("valid_to").get<int>();
  for (const auto& e : j.at("entries"))
    b.entries[{e.at(0).get<int>(), e.at(1).get<int>(), IrrLabel::parse(g, e.at(2).get<std::string>())}] =
        e.at(3).get<long>();
  return b;
}

// -------------------------------------------------------------------- cache

unsigned label_mask(const GroupParams& g, const LabelSet& D) {
  unsigned m = 0;
  for (const auto& l : D) m |= 1u << l.index(g);
  return m;
}

LabelSet mask_labels(const GroupParams& g, unsigned mask) {
  LabelSet D;
  for (int k = 0; k < g.num_irr(); ++k)
    if (mask & (1u << k)) D.insert(IrrLabel::from_index(g, k));
  return D;
}

namespace {

std::string key_string(const GroupParams& g, int N, const IrrLabel& l, const LabelSet& D) {
  std::ostringstream os;
  os << "n=" << g.n << ";N=" << N << ";lambda=" << l.name() << ";D=";
  bool first = true;
  for (const auto& x : D) {
    os << (first ? "" : ",") << x.name();
    first = false;
  }
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

TraceQuotientCache::TraceQuotientCache(int n, int N, std::string dir) : g_(n), N_(N), dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string TraceQuotientCache::cache_file(const IrrLabel& l, const LabelSet& D) const {
  if (dir_.empty()) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key_string(g_, N_, l, D))));
  return (std::filesystem::path(dir_) / (std::string("tq-") + buf + ".json")).string();
}

size_t TraceQuotientCache::disk_hits() const {
  std::lock_guard<std::mutex> lk(const_cast<std::mutex&>(mu_));
  return disk_hits_;
}

std::shared_ptr<TraceQuotientCache::Entry> TraceQuotientCache::entry(const IrrLabel& l, const LabelSet& D) {
  std::lock_guard<std::mutex> lk(mu_);
  auto& e = entries_[{l.index(g_), label_mask(g_, D)}];
  if (!e) e = std::make_shared<Entry>();
  return e;
}

std::shared_ptr<const GradedModule> TraceQuotientCache::module(const IrrLabel& l, const LabelSet& D) {
  auto e = entry(l, D);
  std::call_once(e->module_once,
                 [&] { e->module = std::make_shared<const GradedModule>(trace_quotient_module(g_, l, D, N_)); });
  return e->module;
}

std::shared_ptr<const Resolution> TraceQuotientCache::resolution(const IrrLabel& l, const LabelSet& D) {
  auto e = entry(l, D);
  std::call_once(e->res_once, [&] {
    auto m = module(l, D);
    e->res = std::make_shared<const Resolution>(minimal_resolution(g_, *m));
  });
  return e->res;
}

std::shared_ptr<const GradedModule> TraceQuotientCache::dual(const IrrLabel& l, const LabelSet& D) {
  auto e = entry(l, D);
  std::call_once(e->dual_once, [&] {
    auto m = module(l, D);
    e->dual = std::make_shared<const GradedModule>(dual_module(*m));
  });
  return e->dual;
}

void TraceQuotientCache::ensure_char(const IrrLabel& l, const LabelSet& D, Entry& e) {
  std::call_once(e.char_once, [&] {
    std::string file = cache_file(l, D);
    if (!file.empty()) {
      std::ifstream in(file);
      if (in) {
        try {
          nlohmann::json j = nlohmann::json::parse(in);
          if (j.at("key").get<std::string>() == key_string(g_, N_, l, D)) {
            TruncatedCharacter c = truncated_from_json(g_, j.at("gch"), N_);
            std::lock_guard<std::mutex> lk(e.mu);
            e.chr = std::move(c);
            if (j.contains("betti") && !j.at("betti").is_null()) e.betti = betti_from_json(g_, j.at("betti"));
            std::lock_guard<std::mutex> lk2(mu_);
            ++disk_hits_;
            return;
          }
        } catch (const std::exception&) {
          // unreadable cache file: recompute
        }
      }
    }
    TruncatedCharacter c = module_character(g_, *module(l, D));
    std::lock_guard<std::mutex> lk(e.mu);
    e.chr = std::move(c);
    store(l, D, e);
  });
}

void TraceQuotientCache::store(const IrrLabel& l, const LabelSet& D, Entry& e) {
  std::string file = cache_file(l, D);
  if (file.empty()) return;
  nlohmann::json j;
  j["key"] = key_string(g_, N_, l, D);
  j["gch"] = to_json(g_, *e.chr);
  j["betti"] = e.betti ? to_json(g_, *e.betti) : nlohmann::json();
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  std::string tmp = file + ".tmp." + tid.str();
  {
    std::ofstream out(tmp);
    out << j.dump();
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

TruncatedCharacter TraceQuotientCache::character(const IrrLabel& l, const LabelSet& D) {
  auto e = entry(l, D);
  ensure_char(l, D, *e);
  std::lock_guard<std::mutex> lk(e->mu);
  return *e->chr;
}

BettiTable TraceQuotientCache::betti(const IrrLabel& l, const LabelSet& D) {
  auto e = entry(l, D);
  ensure_char(l, D, *e);
  {
    std::lock_guard<std::mutex> lk(e->mu);
    if (e->betti) return *e->betti;
  }
  BettiTable b = resolution(l, D)->betti;
  std::lock_guard<std::mutex> lk(e->mu);
  if (!e->betti) {
    e->betti = b;
    store(l, D, *e);
  }
  return *e->betti;
}

}  // namespace springer
