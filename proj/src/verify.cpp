#include <algorithm>
#include <chrono>
#include <sstream>

#include "springer/springer.hpp"

namespace springer {

namespace {

using Poly = std::map<IrrLabel, LaurentPoly>;

TruncatedCharacter from_polys(const Poly& p, int N) {
  TruncatedCharacter c;
  c.trunc = N;
  for (const auto& [l, f] : p) c.entries[l] = QSeries::from_poly(f, N);
  return c;
}

LaurentPoly mono(int e) { return LaurentPoly::monomial(e); }

TruncatedCharacter char_add(const TruncatedCharacter& a, const TruncatedCharacter& b) {
  TruncatedCharacter c;
  c.trunc = std::min(a.trunc, b.trunc);
  for (const auto* x : {&a, &b})
    for (const auto& [l, s] : x->entries) {
      auto it = c.entries.find(l);
      if (it == c.entries.end())
        c.entries[l] = s.truncated(c.trunc);
      else
        it->second += s;
    }
  return c;
}

TruncatedCharacter char_scale(const QSeries& f, const TruncatedCharacter& a) {
  TruncatedCharacter c;
  c.trunc = std::min(a.trunc, f.trunc());
  for (const auto& [l, s] : a.entries) c.entries[l] = (f * s).truncated(c.trunc);
  return c;
}

QSeries qpow_series(int k, int N) { return QSeries::from_poly(mono(k), N); }

struct Checker {
  bool ok = true;
  std::ostringstream detail;
  long checked = 0;
  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond) {
      if (ok) detail << "first mismatch: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
  std::string summary() const {
    if (ok) return std::to_string(checked) + " comparisons agree";
    return detail.str();
  }
};

std::string nstr(int n) { return "n=" + std::to_string(n) + " "; }

struct Context {
  const VerifyOptions& opt;
  std::map<int, std::unique_ptr<Engine>> engines;
  std::map<int, ClassificationReport> reports;

  Engine& engine(int n) {
    auto& e = engines[n];
    if (!e) e = std::make_unique<Engine>(n, default_trunc(n), opt.cache_dir);
    return *e;
  }
  const ClassificationReport& report(int n) {
    auto it = reports.find(n);
    if (it != reports.end()) return it->second;
    ClassifyOptions co;
    co.jobs = opt.jobs;
    co.cache_dir = opt.cache_dir;
    co.properties = true;
    return reports[n] = classify(engine(n), co);
  }
};

// 1: graded characters of projective covers against the closed forms.
void crit_projective(Context& ctx, Checker& ck) {
  for (int n : ctx.opt.ns) {
    GroupParams g(n);
    int N = default_trunc(n);
    for (const auto& l : all_labels(g)) {
      TruncatedCharacter eng = module_character(g, build_P(g, l, N));
      ck.expect(char_equal(g, eng, gch_projective(g, l).expand(N)), nstr(n) + "gch P_" + l.name());
    }
  }
}

// 2: Molien-type matrix against the projective characters.
void crit_omega(Context& ctx, Checker& ck) {
  for (int n : ctx.opt.ns) {
    GroupParams g(n);
    int N = default_trunc(n);
    OmegaMatrix om = omega(g);
    auto labels = all_labels(g);
    for (const auto& l : labels) {
      TruncatedCharacter eng = module_character(g, build_P(g, l, N));
      for (const auto& mu : labels)
        ck.expect(series_equal(expand(om[l.index(g)][mu.index(g)], N), eng.at(mu)),
                  nstr(n) + "Omega[" + l.name() + "][" + mu.name() + "]");
    }
  }
}

// 3: Ext between simples from the Koszul pattern.
void crit_ext_simples(Context& ctx, Checker& ck) {
  for (int n : ctx.opt.ns) {
    GroupParams g(n);
    Engine& E = ctx.engine(n);
    auto labels = all_labels(g);
    LabelSet every(labels.begin(), labels.end());
    for (const auto& l : labels) {
      BettiTable b = E.cache().betti(l, every);
      for (const auto& mu : labels) {
        std::map<std::pair<int, int>, long> want;
        const IrrLabel layers[3] = {IrrLabel::triv(), IrrLabel::chi(g, 1), IrrLabel::sgn()};
        for (int i = 0; i < 3; ++i)
          if (long m = tensor_decompose(g, layers[i], l).mult(mu)) want[{i, i}] = m;
        ck.expect(ext_to_simple(b, mu) == want, nstr(n) + "Ext(L_" + l.name() + ", L_" + mu.name() + ")");
      }
    }
  }
}

// 4: minimal resolutions of the standard quotients.
void crit_resolutions(Context& ctx, Checker& ck) {
  for (int n : ctx.opt.ns) {
    GroupParams g(n);
    Engine& E = ctx.engine(n);
    const int C = g.C;
    const IrrLabel T = IrrLabel::triv(), S = IrrLabel::sgn();
    auto X = [&](int i) { return IrrLabel::chi(g, i); };
    using Entries = std::map<std::tuple<int, int, IrrLabel>, long>;
    auto check = [&](const IrrLabel& l, const LabelSet& D, const Entries& want, const std::string& name) {
      BettiTable b = E.cache().betti(l, D);
      ck.expect(b.entries == want, nstr(n) + "Betti table of " + name);
    };
    check(T, {S}, {{{0, 0, T}, 1}, {{1, n, S}, 1}}, "F_triv^sgn");
    for (int j = 1; j <= C; ++j)
      check(T, {X(j)}, {{{0, 0, T}, 1}, {{1, j, X(j)}, 1}, {{2, 2 * j, S}, 1}}, "F_triv^chi" + std::to_string(j));
    Entries fs{{{0, 0, S}, 1}, {{1, 2, S}, 1}, {{1, n, S}, 1}, {{2, n + 2, S}, 1}};
    check(S, {S}, fs, "F_sgn^sgn");
    for (int i = 1; i <= C; ++i) {
      Entries w{{{0, 0, X(i)}, 1}};
      w[{1, i, S}] += 1;
      w[{1, n - i, S}] += 1;
      check(X(i), {S}, w, "F_chi" + std::to_string(i) + "^sgn");
      for (int j = i + 1; j <= C; ++j)
        check(X(i), {S, X(j)}, {{{0, 0, X(i)}, 1}, {{1, i, S}, 1}, {{1, j - i, X(j)}, 1}, {{2, 2 * j - i, S}, 1}},
              "F_chi" + std::to_string(i) + "^{sgn,chi" + std::to_string(j) + "}");
    }
    check(X(C), {S, X(C)}, {{{0, 0, X(C)}, 1}, {{1, C, S}, 1}, {{1, 1, X(C)}, 1}, {{2, C + 2, S}, 1}},
          "F_chiC^{sgn,chiC}");
  }
}

// 5: graded characters of the trace quotients bounding K.
void crit_trace_quotients(Context& ctx, Checker& ck) {
  for (int n : ctx.opt.ns) {
    GroupParams g(n);
    Engine& E = ctx.engine(n);
    int N = E.trunc();
    const int C = g.C;
    const IrrLabel T = IrrLabel::triv(), S = IrrLabel::sgn();
    auto X = [&](int i) { return IrrLabel::chi(g, i); };
    for (int i = 1; i <= C; ++i) {
      Poly f{{T, mono(i)}};
      for (int j = 1; j <= i; ++j) f[X(j)] += mono(i - j);
      IrrLabel next = X(i < C ? i + 1 : C);
      ck.expect(char_equal(g, E.cache().character(X(i), {S, next}), from_polys(f, N)),
                nstr(n) + "gch F_chi" + std::to_string(i) + "^{sgn,chi" + std::to_string(i + 1) + "}");
      Poly j = f;
      for (int k = i + 1; k <= C; ++k) j[X(k)] += mono(k - i) + mono(n - k - i);
      ck.expect(char_equal(g, E.cache().character(X(i), {X(i), S}), from_polys(j, N)),
                nstr(n) + "gch J_chi" + std::to_string(i));
    }
    Poly js{{S, mono(0)}, {T, mono(n)}};
    for (int k = 1; k <= C; ++k) js[X(k)] = mono(k) + mono(n - k);
    ck.expect(char_equal(g, E.cache().character(S, {S}), from_polys(js, N)), nstr(n) + "gch J_sgn");
    ck.expect(char_equal(g, E.cache().character(T, {X(1)}), from_polys({{T, mono(0)}}, N)),
              nstr(n) + "gch F_triv^chi1 = [L_triv]");
  }
}

// 6: character identities between filtered quotients.
void crit_filtrations(Context& ctx, Checker& ck) {
  for (int n : ctx.opt.ns) {
    GroupParams g(n);
    Engine& E = ctx.engine(n);
    int N = E.trunc();
    const int C = g.C;
    const IrrLabel T = IrrLabel::triv(), S = IrrLabel::sgn();
    auto X = [&](int i) { return IrrLabel::chi(g, i); };
    auto F = [&](const IrrLabel& l, const LabelSet& D) { return E.cache().character(l, D); };
    for (int j = 1; j <= C; ++j)
      ck.expect(char_equal(g, F(T, {S}), char_add(F(T, {X(j)}), char_scale(qpow_series(j, N), F(X(j), {S})))),
                nstr(n) + "F_triv^sgn vs F_triv^chi" + std::to_string(j));
    for (int i = 1; i <= C; ++i)
      for (int j = i + 1; j <= C; ++j)
        ck.expect(char_equal(g, F(X(i), {S}),
                             char_add(F(X(i), {S, X(j)}), char_scale(qpow_series(j - i, N), F(X(j), {S})))),
                  nstr(n) + "F_chi" + std::to_string(i) + "^sgn vs chi" + std::to_string(j));
    ck.expect(char_equal(g, F(X(C), {S}), char_scale(expand(QRational(mono(0), {1}), N), F(X(C), {S, X(C)}))),
              nstr(n) + "F_chiC^sgn = F_chiC^{sgn,chiC}/(1-q)");
    ck.expect(char_equal(g, E.projective(S.index(g)), char_scale(expand(QRational(mono(0), {2, n}), N), F(S, {S}))),
              nstr(n) + "P_sgn = F_sgn^sgn/((1-q^2)(1-q^n))");
  }
}

// 7: the classification.
void crit_classification(Context& ctx, Checker& ck) {
  static const std::map<int, std::pair<long, long>> counts{{3, {29, 5}}, {5, {355, 9}}, {7, {6942, 17}}};
  for (int n : ctx.opt.ns) {
    const ClassificationReport& r = ctx.report(n);
    auto it = counts.find(n);
    if (it != counts.end()) {
      ck.expect(r.scanned == it->second.first, nstr(n) + "scanned " + std::to_string(r.scanned));
      ck.expect(static_cast<long>(r.passed.size()) == it->second.second,
                nstr(n) + "passed " + std::to_string(r.passed.size()));
    }
    ck.expect(r.inconclusive.empty(), nstr(n) + std::to_string(r.inconclusive.size()) + " inconclusive");
    ck.expect(r.match, nstr(n) + "pass set differs from the theorem list");
  }
}

void crit_property(Context& ctx, Checker& ck, const std::vector<std::string>& names) {
  for (int n : ctx.opt.ns) {
    const ClassificationReport& r = ctx.report(n);
    for (const auto& name : names) {
      bool found = false;
      for (const auto& p : r.properties)
        if (p.name == name) {
          found = true;
          ck.expect(p.ok, nstr(n) + name + ": " + p.detail);
        }
      ck.expect(found, nstr(n) + name + " not evaluated");
    }
  }
}

// 8: reciprocity on every passing family.
void crit_reciprocity(Context& ctx, Checker& ck) {
  crit_property(ctx, ck, {"reciprocity"});
  for (int n : ctx.opt.ns) {
    const ClassificationReport& r = ctx.report(n);
    ck.expect(r.matrices.size() == r.passed.size(), nstr(n) + "matrices missing");
  }
}

// 9: representation-theoretic symmetries and laws of passing families.
void crit_properties(Context& ctx, Checker& ck) {
  for (int n : ctx.opt.ns) {
    GroupParams g(n);
    auto labels = all_labels(g);
    for (const auto& a : labels)
      for (const auto& b : labels)
        ck.expect(mult_in(g, character(g, irr(a)), b) == (a == b ? 1 : 0),
                  nstr(n) + "orthogonality " + a.name() + "," + b.name());
    const IrrLabel c1 = IrrLabel::chi(g, 1);
    for (const auto& a : labels)
      for (const auto& b : labels)
        ck.expect(tensor_decompose(g, b, c1).mult(a) == tensor_decompose(g, a, c1).mult(b),
                  nstr(n) + "[" + b.name() + "(x)chi1:" + a.name() + "] symmetric");
    Engine& E = ctx.engine(n);
    for (const auto& a : labels)
      for (const auto& b : labels)
        ck.expect(series_equal(E.projective(a.index(g)).at(b), E.projective(b.index(g)).at(a)),
                  nstr(n) + "[P_" + a.name() + ":L_" + b.name() + "] symmetric");
  }
  crit_property(ctx, ck,
                {"socle law", "chain law", "D-sets", "triv/sgn dichotomy", "uniqueness", "swap stability",
                 "Ext1 edge soundness", "preorder recovery"});
}

}  // namespace

std::vector<CriterionResult> verify_suite(const VerifyOptions& opt) {
  Context ctx{opt, {}, {}};
  using Fn = void (*)(Context&, Checker&);
  const std::vector<std::tuple<int, const char*, Fn>> crits{
      {1, "projective characters", crit_projective},
      {2, "Omega expansion", crit_omega},
      {3, "Ext between simples", crit_ext_simples},
      {4, "resolution Betti tables", crit_resolutions},
      {5, "trace quotient characters", crit_trace_quotients},
      {6, "filtration identities", crit_filtrations},
      {7, "classification", crit_classification},
      {8, "reciprocity", crit_reciprocity},
      {9, "property suite", crit_properties},
  };
  std::vector<CriterionResult> out;
  for (const auto& [id, name, fn] : crits) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = id;
    r.name = name;
    Checker ck;
    try {
      fn(ctx, ck);
      r.ok = ck.ok;
      r.detail = ck.summary();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  return out;
}

}  // namespace springer
