#include "springer/springer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

namespace springer {

int default_trunc(int n) { return 3 * n + 6; }

// ------------------------------------------------------------------ Engine

Engine::Engine(int n, int N, std::string cache_dir) : cache_(n, N, std::move(cache_dir)) {
  const GroupParams& g = cache_.params();
  for (const auto& l : all_labels(g)) proj_.push_back(gch_projective(g, l).expand(N));
}

TruncatedCharacter Engine::character(int lambda, std::uint32_t mask) {
  const GroupParams& g = params();
  return cache_.character(IrrLabel::from_index(g, lambda), mask_labels(g, mask));
}

BettiTable Engine::betti(int lambda, std::uint32_t mask) {
  const GroupParams& g = params();
  return cache_.betti(IrrLabel::from_index(g, lambda), mask_labels(g, mask));
}

LabelSet Engine::ext1_targets(int lambda, std::uint32_t mask) {
  LabelSet out;
  for (const auto& [k, v] : betti(lambda, mask).entries)
    if (std::get<0>(k) == 1 && v != 0) out.insert(std::get<2>(k));
  return out;
}

ExtTable Engine::ext_dual(int lambda, std::uint32_t mask, int mu, std::uint32_t umask) {
  std::uint64_t key = static_cast<std::uint64_t>(lambda) | (static_cast<std::uint64_t>(mask) << 8) |
                      (static_cast<std::uint64_t>(mu) << 24) | (static_cast<std::uint64_t>(umask) << 32);
  std::shared_ptr<ExtSlot> slot;
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto& s = ext_[key];
    if (!s) s = std::make_shared<ExtSlot>();
    slot = s;
  }
  std::call_once(slot->once, [&] {
    const GroupParams& g = params();
    try {
      auto res = cache_.resolution(IrrLabel::from_index(g, lambda), mask_labels(g, mask));
      auto dual = cache_.dual(IrrLabel::from_index(g, mu), mask_labels(g, umask));
      slot->table = ext_to_dual(g, *res, *dual);
    } catch (const InsufficientTruncation& e) {
      slot->error = e.what();
    }
  });
  if (!slot->error.empty()) throw InsufficientTruncation(slot->error);
  return slot->table;
}

const TruncatedCharacter& Engine::projective(int lambda) { return proj_.at(lambda); }

// ---------------------------------------------------------------- families

namespace {

int top_of(const TruncatedCharacter& c) {
  int top = -1;
  for (const auto& [l, s] : c.entries)
    for (int d = s.low(); d <= s.trunc(); ++d)
      if (s.coeff(d) != 0) top = std::max(top, d);
  return top;
}

QSeries positive_part(const QSeries& s) {
  QSeries t = s;
  if (t.low() <= 0 && t.trunc() >= 0) t.set_coeff(0, 0);
  return t;
}

}  // namespace

CandidateFamily build_family(Engine& E, const Preorder& p) {
  const GroupParams& g = E.params();
  if (p.size() != g.num_irr()) throw std::invalid_argument("preorder size does not match Irr(W)");
  CandidateFamily f;
  f.p = p;
  for (int i = 0; i < p.size(); ++i) {
    f.up.push_back(p.up_mask(i));
    f.strict.push_back(p.strict_up_mask(i));
    f.K.push_back(E.character(i, f.up[i]));
    f.Kt.push_back(E.character(i, f.strict[i]));
    f.D.push_back(E.ext1_targets(i, f.up[i]));
    f.top.push_back(top_of(f.K[i]));
  }
  return f;
}

CheckResult check_compatibility(Engine& E, const CandidateFamily& fam) {
  const GroupParams& g = E.params();
  std::map<IrrLabel, LabelSet> D;
  for (int i = 0; i < fam.p.size(); ++i) D[IrrLabel::from_index(g, i)] = fam.D[i];
  Preorder q = precsim_K(g, D);
  for (int i = 0; i < fam.p.size(); ++i) {
    std::string name = IrrLabel::from_index(g, i).name();
    if (q.up_mask(i) != fam.up[i] && !char_equal(g, E.character(i, q.up_mask(i)), fam.K[i]))
      return {false, "K_" + name + " differs under the Ext^1 preorder " + describe(g, q)};
    if (q.strict_up_mask(i) != fam.strict[i] && !char_equal(g, E.character(i, q.strict_up_mask(i)), fam.Kt[i]))
      return {false, "Kt_" + name + " differs under the Ext^1 preorder " + describe(g, q)};
  }
  return {};
}

CheckResult check_finite(const GroupParams& g, const CandidateFamily& fam) {
  for (int i = 0; i < fam.p.size(); ++i)
    if (fam.top[i] > g.n)
      return {false, "K_" + IrrLabel::from_index(g, i).name() + " nonzero in degree " + std::to_string(fam.top[i])};
  return {};
}

CheckResult check_filtration_characters(Engine& E, const CandidateFamily& fam) {
  const GroupParams& g = E.params();
  const int m = fam.p.size();
  auto labels = all_labels(g);
  // P_lambda = sum_mu [K_mu:L_lambda] Kt_mu
  for (int l = 0; l < m; ++l)
    for (int v = 0; v < m; ++v) {
      QSeries rhs(0, E.trunc());
      for (int mu = 0; mu < m; ++mu) {
        QSeries a = fam.K[mu].at(labels[l]);
        if (a.is_zero()) continue;
        rhs += a * fam.Kt[mu].at(labels[v]);
      }
      if (!series_equal(E.projective(l).at(labels[v]), rhs))
        return {false, "[P_" + labels[l].name() + ":L_" + labels[v].name() + "] differs from the Kt-filtration count"};
    }
  // Kt_lambda = sum_{mu ~ lambda} [Kt_lambda:L_mu] K_mu
  for (int l = 0; l < m; ++l) {
    for (int mu = 0; mu < m; ++mu) {
      if (!fam.p.equiv(l, mu)) continue;
      for (int nu = 0; nu < m; ++nu) {
        if (!fam.p.equiv(mu, nu)) continue;
        QSeries e = fam.K[mu].at(labels[nu]);
        QSeries want(0, E.trunc());
        if (mu == nu) want.set_coeff(0, 1);
        if (!series_equal(e, want))
          return {false, "[K_" + labels[mu].name() + ":L_" + labels[nu].name() + "] breaks the class triangularity"};
      }
    }
    for (int v = 0; v < m; ++v) {
      QSeries rhs(0, E.trunc());
      for (int mu = 0; mu < m; ++mu) {
        if (!fam.p.equiv(l, mu)) continue;
        QSeries c = fam.Kt[l].at(labels[mu]);
        if (!c.nonnegative()) return {false, "negative K-filtration multiplicity"};
        if (!c.is_zero()) rhs += c * fam.K[mu].at(labels[v]);
      }
      if (!series_equal(fam.Kt[l].at(labels[v]), rhs))
        return {false, "Kt_" + labels[l].name() + " has no K-filtration character at L_" + labels[v].name()};
    }
  }
  return {};
}

CheckResult check_orthogonality(Engine& E, const CandidateFamily& fam) {
  const GroupParams& g = E.params();
  const int m = fam.p.size();
  for (int l = 0; l < m; ++l)
    for (int mu = 0; mu < m; ++mu) {
      ExtTable t = E.ext_dual(l, fam.strict[l], mu, fam.up[mu]);
      std::map<std::pair<int, int>, long> want;
      if (l == mu) want[{0, 0}] = 1;
      if (t.dims != want) {
        std::ostringstream os;
        os << "Ext(Kt_" << IrrLabel::from_index(g, l).name() << ", K_" << IrrLabel::from_index(g, mu).name()
           << "^*) =";
        for (const auto& [k, v] : t.dims) os << " (" << k.first << "," << k.second << "):" << v;
        return {false, os.str()};
      }
    }
  return {};
}

// -------------------------------------------------------------- matrices

SeriesMatrix series_mul(const SeriesMatrix& A, const SeriesMatrix& B) {
  const size_t m = A.size(), k = B.size(), c = B.empty() ? 0 : B[0].size();
  SeriesMatrix R(m, std::vector<QSeries>(c));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < c; ++j) {
      bool first = true;
      for (size_t t = 0; t < k; ++t) {
        QSeries p = A[i][t] * B[t][j];
        if (first) {
          R[i][j] = p;
          first = false;
        } else {
          R[i][j] += p;
        }
      }
    }
  return R;
}

SeriesMatrix series_transpose(const SeriesMatrix& A) {
  if (A.empty()) return A;
  SeriesMatrix R(A[0].size(), std::vector<QSeries>(A.size()));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A[i].size(); ++j) R[j][i] = A[i][j];
  return R;
}

SeriesMatrix series_inverse(const SeriesMatrix& A) {
  const size_t m = A.size();
  int N = 0;
  bool set = false;
  for (const auto& row : A)
    for (const auto& s : row) {
      if (s.low() < 0) throw std::invalid_argument("series matrix has negative exponents");
      N = set ? std::min(N, s.trunc()) : s.trunc();
      set = true;
    }
  SeriesMatrix I(m, std::vector<QSeries>(m, QSeries(0, N))), E(m, std::vector<QSeries>(m));
  for (size_t i = 0; i < m; ++i) {
    I[i][i].set_coeff(0, 1);
    for (size_t j = 0; j < m; ++j) {
      if (A[i][j].coeff(0) != (i == j ? 1 : 0))
        throw std::domain_error("series matrix constant term is not the identity");
      E[i][j] = I[i][j] - A[i][j].truncated(N);
    }
  }
  // (I - E)^{-1} = sum_k E^k; E has valuation >= 1
  SeriesMatrix X = I;
  for (int it = 0; it <= N; ++it) {
    SeriesMatrix EX = series_mul(E, X);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) X[i][j] = (I[i][j] + EX[i][j]).truncated(N);
  }
  return X;
}

bool series_matrix_equal(const SeriesMatrix& A, const SeriesMatrix& B) {
  if (A.size() != B.size()) return false;
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != B[i].size()) return false;
    for (size_t j = 0; j < A[i].size(); ++j)
      if (!series_equal(A[i][j], B[i][j])) return false;
  }
  return true;
}

ReciprocityMatrices reciprocity_matrices(Engine& E, const CandidateFamily& fam) {
  const GroupParams& g = E.params();
  const int m = fam.p.size();
  auto labels = all_labels(g);
  ReciprocityMatrices R;
  auto fill = [&](auto get) {
    SeriesMatrix M(m, std::vector<QSeries>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) M[i][j] = get(i, j);
    return M;
  };
  R.PL = fill([&](int i, int j) { return E.projective(i).at(labels[j]); });
  R.KL = fill([&](int i, int j) { return fam.K[i].at(labels[j]); });
  R.KtL = fill([&](int i, int j) { return fam.Kt[i].at(labels[j]); });
  SeriesMatrix KLinv = series_inverse(R.KL);
  R.KtK = series_mul(series_mul(series_transpose(KLinv), R.PL), KLinv);
  R.PKt = series_mul(R.PL, series_inverse(R.KtL));
  R.PK = series_mul(R.PL, KLinv);
  R.KtK_filtration = fill([&](int i, int j) {
    return fam.p.equiv(i, j) ? fam.Kt[i].at(labels[j]) : QSeries(0, E.trunc());
  });
  return R;
}

CheckResult check_reciprocity(const ReciprocityMatrices& R) {
  if (!series_matrix_equal(R.KtK, series_transpose(R.KtK))) return {false, "(Kt:K) is not symmetric"};
  if (!series_matrix_equal(R.KtK, R.KtK_filtration)) return {false, "(Kt:K) differs from the K-filtration counts"};
  if (!series_matrix_equal(R.PKt, series_transpose(R.KL))) return {false, "(P:Kt) differs from [K:L]^t"};
  if (!series_matrix_equal(R.PK, series_transpose(R.KtL))) return {false, "(P:K) differs from [Kt:L]^t"};
  SeriesMatrix dec = series_mul(series_mul(series_transpose(R.KL), R.KtK_filtration), R.KL);
  if (!series_matrix_equal(R.PL, dec)) return {false, "[P:L] differs from [K:L]^t (Kt:K) [K:L]"};
  return {};
}

CheckResult check_uniqueness(const GroupParams& g, const CandidateFamily& fam) {
  const int m = fam.p.size();
  for (int l = 0; l < m; ++l)
    for (int mu = 0; mu < m; ++mu) {
      if (fam.p.leq(l, mu)) continue;
      bool witness = false;
      for (int a = 0; a < m && !witness; ++a)
        for (int b = 0; b < m && !witness; ++b)
          if (fam.p.equiv(a, l) && fam.p.equiv(b, mu) && !fam.K[a].at(IrrLabel::from_index(g, b)).is_zero())
            witness = true;
      if (!witness)
        return {false, "no multiplicity witness for " + IrrLabel::from_index(g, l).name() + " not below " +
                           IrrLabel::from_index(g, mu).name()};
    }
  return {};
}

// -------------------------------------------------------------- properties

CheckResult check_socle_law(Engine& E, const CandidateFamily& fam) {
  const GroupParams& g = E.params();
  for (int l = 0; l < fam.p.size(); ++l) {
    IrrLabel lab = IrrLabel::from_index(g, l);
    auto mod = E.cache().module(lab, mask_labels(g, fam.up[l]));
    std::set<IrrLabel> types;
    for (const auto& [d, v] : socle(g, *mod))
      for (const auto& [t, k] : v.mults)
        if (k) types.insert(t);
    if (types.size() > 1 || (types.size() == 1 && types.begin()->is_chi()))
      return {false, "socle of (K_" + lab.name() + ")_{>0} is not isotypic of type triv or sgn"};
  }
  return {};
}

CheckResult check_chain_law(const GroupParams& g, const CandidateFamily& fam) {
  for (int l = 0; l < fam.p.size(); ++l)
    for (int i = 1; i <= g.C; ++i) {
      if (positive_part(fam.K[l].at(IrrLabel::chi(g, i))).is_zero()) continue;
      for (int j = 1; j < i; ++j)
        if (positive_part(fam.K[l].at(IrrLabel::chi(g, j))).is_zero())
          return {false, "K_" + IrrLabel::from_index(g, l).name() + " contains chi" + std::to_string(i) +
                             " but not chi" + std::to_string(j) + " in positive degrees"};
    }
  return {};
}

int triv_sgn_orientation(const GroupParams& g, const CandidateFamily& fam) {
  auto holds = [&](const IrrLabel& bottom, const IrrLabel& top) {
    const int b = bottom.index(g);
    for (int l = 0; l < fam.p.size(); ++l) {
      if (!positive_part(fam.K[b].at(IrrLabel::from_index(g, l))).is_zero()) return false;
      if (!positive_part(fam.K[l].at(top)).is_zero()) return false;
    }
    return true;
  };
  return (holds(IrrLabel::triv(), IrrLabel::sgn()) ? 1 : 0) | (holds(IrrLabel::sgn(), IrrLabel::triv()) ? 2 : 0);
}

namespace {

IrrLabel chi_fold(const GroupParams& g, int k) {
  k = ((k % g.n) + g.n) % g.n;
  return IrrLabel::chi(g, k <= g.C ? k : g.n - k);
}

// D-sets allowed when triv sits at the bottom; swap maps to the mirrored list.
bool d_sets_allowed(const GroupParams& g, const CandidateFamily& fam, bool swap) {
  auto tw = [&](const IrrLabel& l) { return swap ? sgn_twist(l) : l; };
  auto D = [&](const IrrLabel& l) {
    LabelSet s;
    for (const auto& x : fam.D[tw(l).index(g)]) s.insert(tw(x));
    return s;
  };
  const IrrLabel triv = IrrLabel::triv(), sgn = IrrLabel::sgn();
  if (D(triv) != LabelSet{IrrLabel::chi(g, 1)}) return false;
  LabelSet ds = D(sgn);
  if (ds != LabelSet{sgn} && ds != LabelSet{IrrLabel::chi(g, 1)}) return false;
  for (int i = 1; i <= g.C; ++i) {
    LabelSet d = D(IrrLabel::chi(g, i));
    IrrLabel next = chi_fold(g, i + 1);
    LabelSet a{next, sgn};
    LabelSet b = i == 1 ? LabelSet{next, triv, sgn} : LabelSet{next, IrrLabel::chi(g, i - 1)};
    if (d != a && d != b) return false;
  }
  return true;
}

}  // namespace

CheckResult check_possible_D(const GroupParams& g, const CandidateFamily& fam) {
  int o = triv_sgn_orientation(g, fam);
  if (o == 0) return {false, "neither triv nor sgn orientation holds"};
  if ((o & 1) && !d_sets_allowed(g, fam, false)) return {false, "D-sets outside the triv-bottom list"};
  if ((o & 2) && !d_sets_allowed(g, fam, true)) return {false, "D-sets outside the sgn-bottom list"};
  return {};
}

CheckResult check_ext1_edges(Engine& E, const CandidateFamily& fam) {
  const GroupParams& g = E.params();
  std::map<IrrLabel, LabelSet> D;
  for (int i = 0; i < fam.p.size(); ++i) D[IrrLabel::from_index(g, i)] = fam.D[i];
  Preorder q = precsim_K(g, D);
  for (int l = 0; l < fam.p.size(); ++l)
    for (const auto& mu : E.ext1_targets(l, fam.strict[l]))
      if (!q.leq(l, mu.index(g)))
        return {false, "Ext^1(Kt_" + IrrLabel::from_index(g, l).name() + ", L_" + mu.name() + ") != 0 off the order"};
  return {};
}

CheckResult check_recovery(const GroupParams& g, const CandidateFamily& fam) {
  std::map<IrrLabel, LabelSet> D;
  for (int i = 0; i < fam.p.size(); ++i) D[IrrLabel::from_index(g, i)] = fam.D[i];
  Preorder q = precsim_K(g, D);
  if (!(q == fam.p)) return {false, "Ext^1 preorder " + describe(g, q) + " differs"};
  return {};
}

// ---------------------------------------------------------------- classify

Verdict evaluate(Engine& E, const Preorder& p) {
  Verdict v;
  v.p = p;
  CandidateFamily fam = build_family(E, p);
  auto fail = [&](const char* what, const CheckResult& r) {
    v.status = Verdict::Status::Fail;
    v.failed = what;
    v.detail = r.detail;
    return v;
  };
  if (auto r = check_compatibility(E, fam); !r.ok) return fail("compatibility", r);
  if (auto r = check_finite(E.params(), fam); !r.ok) return fail("finite", r);
  if (auto r = check_filtration_characters(E, fam); !r.ok) return fail("filtration", r);
  try {
    if (auto r = check_orthogonality(E, fam); !r.ok) return fail("orthogonality", r);
  } catch (const InsufficientTruncation& e) {
    v.status = Verdict::Status::Inconclusive;
    v.failed = "orthogonality";
    v.detail = e.what();
    return v;
  }
  v.status = Verdict::Status::Pass;
  return v;
}

ClassificationReport classify(int n, int N, const ClassifyOptions& opt) {
  Engine E(n, N, opt.cache_dir);
  return classify(E, opt);
}

ClassificationReport classify(Engine& E, const ClassifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  const GroupParams& g = E.params();
  ClassificationReport rep;
  rep.n = g.n;
  rep.trunc = E.trunc();
  std::vector<Preorder> all = enumerate_preorders(g.num_irr());
  rep.scanned = static_cast<long>(all.size());
  std::vector<Verdict> verdicts(all.size());
  std::atomic<size_t> next{0}, done{0};
  std::mutex err_mu;
  std::string err;
  auto worker = [&] {
    for (size_t k; (k = next.fetch_add(1)) < all.size();) {
      try {
        verdicts[k] = evaluate(E, all[k]);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (err.empty()) err = e.what();
        verdicts[k].p = all[k];
        verdicts[k].status = Verdict::Status::Inconclusive;
        verdicts[k].failed = "error";
        verdicts[k].detail = e.what();
      }
      size_t d = ++done;
      if (opt.progress) {
        std::lock_guard<std::mutex> lk(err_mu);
        opt.progress(static_cast<long>(d), rep.scanned);
      }
    }
  };
  int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) { return a.p < b.p; });
  rep.verdicts = std::move(verdicts);
  for (const auto& v : rep.verdicts) {
    if (v.status == Verdict::Status::Pass) rep.passed.push_back(v.p);
    if (v.status == Verdict::Status::Inconclusive) rep.inconclusive.push_back(v.p);
    if (v.status != Verdict::Status::Pass) ++rep.failure_counts[v.failed];
  }
  rep.expected = theorem_patterns(g);
  std::sort(rep.expected.begin(), rep.expected.end());
  rep.match = rep.inconclusive.empty() && rep.passed == rep.expected;

  if (opt.properties) {
    std::map<std::string, PropertyReport> props;
    auto note = [&](const std::string& name, const Preorder& p, const CheckResult& r) {
      auto& pr = props[name];
      pr.name = name;
      if (!r.ok) {
        pr.ok = false;
        pr.detail += describe(g, p) + ": " + r.detail + "; ";
      }
    };
    for (const auto& name : {"reciprocity", "uniqueness", "socle law", "chain law", "D-sets", "triv/sgn dichotomy",
                             "Ext1 edge soundness", "preorder recovery", "swap stability"})
      props[name] = {name, true, ""};
    for (const auto& p : rep.passed) {
      CandidateFamily fam = build_family(E, p);
      ReciprocityMatrices R = reciprocity_matrices(E, fam);
      note("reciprocity", p, check_reciprocity(R));
      rep.matrices[p.key()] = std::move(R);
      note("uniqueness", p, check_uniqueness(g, fam));
      note("socle law", p, check_socle_law(E, fam));
      note("chain law", p, check_chain_law(g, fam));
      note("D-sets", p, check_possible_D(g, fam));
      note("triv/sgn dichotomy", p,
           triv_sgn_orientation(g, fam) ? CheckResult{} : CheckResult{false, "both orientations fail"});
      note("Ext1 edge soundness", p, check_ext1_edges(E, fam));
      note("preorder recovery", p, check_recovery(g, fam));
    }
    std::map<Preorder, Verdict::Status> status;
    for (const auto& v : rep.verdicts) status[v.p] = v.status;
    for (const auto& v : rep.verdicts) {
      Preorder s = swap_triv_sgn(g, v.p);
      if (status.at(s) != v.status) note("swap stability", v.p, {false, "verdict changes under the swap"});
    }
    for (auto& [k, pr] : props) rep.properties.push_back(pr);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------- output

nlohmann::json to_json(const GroupParams& g, const Preorder& p) { return to_pairs(g, p); }

nlohmann::json to_json(const GroupParams& g, const SeriesMatrix& m) {
  (void)g;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& s : r) row.push_back(s.to_string());
    rows.push_back(row);
  }
  return rows;
}

namespace {

const char* status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Pass: return "pass";
    case Verdict::Status::Fail: return "fail";
    case Verdict::Status::Inconclusive: return "inconclusive";
  }
  return "";
}

}  // namespace

nlohmann::json to_json(const ClassificationReport& r) {
  GroupParams g(r.n);
  nlohmann::json j;
  j["n"] = r.n;
  j["trunc"] = r.trunc;
  j["scanned"] = r.scanned;
  auto list = [&](const std::vector<Preorder>& ps) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : ps) a.push_back(to_json(g, p));
    return a;
  };
  j["passed"] = list(r.passed);
  j["expected"] = list(r.expected);
  j["match"] = r.match;
  nlohmann::json inc = nlohmann::json::array();
  for (const auto& v : r.verdicts)
    if (v.status == Verdict::Status::Inconclusive)
      inc.push_back({{"preorder", to_json(g, v.p)}, {"reason", v.detail}});
  j["inconclusive"] = inc;
  nlohmann::json mats = nlohmann::json::object();
  for (const auto& [key, R] : r.matrices) {
    mats[key] = {{"PL", to_json(g, R.PL)},   {"KL", to_json(g, R.KL)}, {"KtL", to_json(g, R.KtL)},
                 {"KtK", to_json(g, R.KtK)}, {"PKt", to_json(g, R.PKt)}, {"PK", to_json(g, R.PK)}};
  }
  j["matrices"] = mats;
  nlohmann::json passed_names = nlohmann::json::array();
  for (const auto& p : r.passed) passed_names.push_back(describe(g, p));
  j["passed_chains"] = passed_names;
  j["failure_counts"] = r.failure_counts;
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : r.properties) props.push_back({{"name", p.name}, {"ok", p.ok}, {"detail", p.detail}});
  j["properties"] = props;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : r.verdicts)
    vs.push_back({{"preorder", to_json(g, v.p)},
                  {"key", v.p.key()},
                  {"status", status_name(v.status)},
                  {"failed", v.failed},
                  {"detail", v.detail}});
  j["verdicts"] = vs;
  j["seconds"] = r.seconds;
  return j;
}

std::string to_table(const ClassificationReport& r) {
  GroupParams g(r.n);
  std::ostringstream os;
  os << "n=" << r.n << " trunc=" << r.trunc << " scanned=" << r.scanned << " passed=" << r.passed.size()
     << " expected=" << r.expected.size() << " match=" << (r.match ? "yes" : "no") << " time=" << r.seconds << "s\n";
  os << "passing preorders:\n";
  for (const auto& p : r.passed)
    os << "  " << describe(g, p) << (theorem_case(g, p) ? "" : "   (not in the theorem list)") << "\n";
  for (const auto& p : r.expected)
    if (!std::binary_search(r.passed.begin(), r.passed.end(), p)) os << "  missing: " << describe(g, p) << "\n";
  os << "first failed condition counts:\n";
  for (const auto& [k, v] : r.failure_counts) os << "  " << k << ": " << v << "\n";
  if (!r.inconclusive.empty()) {
    os << "inconclusive:\n";
    for (const auto& v : r.verdicts)
      if (v.status == Verdict::Status::Inconclusive) os << "  " << describe(g, v.p) << ": " << v.detail << "\n";
  }
  if (!r.properties.empty()) {
    os << "properties of passing families:\n";
    for (const auto& p : r.properties)
      os << "  " << (p.ok ? "ok   " : "FAIL ") << p.name << (p.detail.empty() ? "" : "  " + p.detail) << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& r) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : r)
    a.push_back({{"id", c.id}, {"name", c.name}, {"ok", c.ok}, {"detail", c.detail}, {"seconds", c.seconds}});
  return a;
}

}  // namespace springer
