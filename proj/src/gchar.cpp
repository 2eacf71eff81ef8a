#include "springer/gchar.hpp"

#include <algorithm>

namespace springer {

static QRational zero_rational() { return QRational(); }
static QRational qpow(int k) { return QRational(LaurentPoly::monomial(k)); }

QRational GradedCharacter::at(const IrrLabel& l) const {
  auto it = entries.find(l);
  return it == entries.end() ? zero_rational() : it->second;
}

void GradedCharacter::add(const IrrLabel& l, const QRational& r) {
  auto it = entries.find(l);
  if (it == entries.end())
    entries.emplace(l, r);
  else
    it->second = it->second + r;
}

void GradedCharacter::add(const VirtualRep& v, const QRational& r) {
  for (const auto& [l, m] : v.mults) add(l, QRational(LaurentPoly(m)) * r);
}

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o) {
  for (const auto& [l, r] : o.entries) add(l, r);
  return *this;
}

GradedCharacter& GradedCharacter::operator-=(const GradedCharacter& o) {
  for (const auto& [l, r] : o.entries) add(l, -r);
  return *this;
}

GradedCharacter operator*(const QRational& r, const GradedCharacter& c) {
  GradedCharacter out;
  for (const auto& [l, x] : c.entries) out.entries.emplace(l, r * x);
  return out;
}

GradedCharacter GradedCharacter::simplified() const {
  GradedCharacter out;
  for (const auto& [l, x] : entries) {
    QRational s = x.simplified();
    if (!s.is_zero()) out.entries.emplace(l, s);
  }
  return out;
}

bool GradedCharacter::is_finite() const {
  for (const auto& [l, x] : simplified().entries)
    if (!x.is_polynomial()) return false;
  return true;
}

TruncatedCharacter GradedCharacter::expand(int N) const {
  TruncatedCharacter t;
  t.trunc = N;
  for (const auto& [l, x] : entries) t.entries.emplace(l, springer::expand(x, N));
  return t;
}

QRational GradedCharacter::gdim() const {
  QRational s;
  for (const auto& [l, x] : entries) s = s + QRational(LaurentPoly(l.dim())) * x;
  return s;
}

bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
  std::set<IrrLabel> keys;
  for (const auto& [l, x] : a.entries) keys.insert(l);
  for (const auto& [l, x] : b.entries) keys.insert(l);
  for (const auto& l : keys)
    if (!(a.at(l) == b.at(l))) return false;
  return true;
}

QSeries TruncatedCharacter::at(const IrrLabel& l) const {
  auto it = entries.find(l);
  return it == entries.end() ? QSeries(0, trunc) : it->second;
}

bool TruncatedCharacter::nonnegative() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second.nonnegative(); });
}

bool char_equal(const GroupParams& g, const TruncatedCharacter& a, const TruncatedCharacter& b, int* window) {
  int w = std::min(a.trunc, b.trunc);
  bool ok = true;
  for (const auto& l : all_labels(g)) {
    int wl = 0;
    if (!series_equal(a.at(l), b.at(l), &wl)) ok = false;
    w = std::min(w, wl);
  }
  if (window) *window = w;
  return ok;
}

GradedCharacter gch_simple(const IrrLabel& l) {
  GradedCharacter c;
  c.add(l, QRational(LaurentPoly(1)));
  return c;
}

GradedCharacter gch_simple_virtual(const VirtualRep& v) {
  GradedCharacter c;
  c.add(v, QRational(LaurentPoly(1)));
  return c;
}

GradedCharacter gch_projective(const GroupParams& g, const IrrLabel& l) {
  const int n = g.n;
  GradedCharacter c;
  QRational pref(LaurentPoly(1), {2, n});
  switch (l.kind) {
    case IrrLabel::Kind::Triv:
      c.add(IrrLabel::triv(), pref);
      c.add(IrrLabel::sgn(), pref.shifted(n));
      for (int i = 1; i <= g.C; ++i) c.add(IrrLabel::chi(g, i), pref.shifted(i) + pref.shifted(n - i));
      break;
    case IrrLabel::Kind::Sgn:
      c.add(IrrLabel::sgn(), pref);
      c.add(IrrLabel::triv(), pref.shifted(n));
      for (int j = 1; j <= n - 1; ++j) c.add(fold_index(g, j), pref.shifted(j));
      break;
    case IrrLabel::Kind::Chi:
      for (int j = 0; j <= n - 1; ++j) c.add(fold_index(g, l.i + j), pref.shifted(j));
      for (int j = 1; j <= n; ++j) c.add(fold_index(g, l.i - j), pref.shifted(j));
      break;
  }
  return c.simplified();
}

GradedCharacter gch_projective_chi(const GroupParams& g, long i) {
  GradedCharacter c;
  for (const auto& [l, m] : fold_index(g, i).mults) c += QRational(LaurentPoly(m)) * gch_projective(g, l);
  return c;
}

GradedCharacter gch_F_closed(const GroupParams& g, const IrrLabel& l, const LabelSet& D) {
  const int n = g.n, C = g.C;
  const IrrLabel triv = IrrLabel::triv(), sgn = IrrLabel::sgn();
  auto P = [&](const IrrLabel& x) { return gch_projective(g, x); };
  auto poly = [](std::initializer_list<std::pair<int, long>> ts) {
    LaurentPoly p;
    for (auto [e, c] : ts) p.add_term(e, c);
    return QRational(p);
  };
  GradedCharacter out;
  bool found = true;
  const auto labels = all_labels(g);
  const LabelSet all(labels.begin(), labels.end());
  if (D == all) {
    out = gch_simple(l);
  } else if (l == triv && D == LabelSet{sgn}) {
    out = P(triv) - qpow(n) * P(sgn);
  } else if (l == triv && D.size() == 1 && D.begin()->is_chi()) {
    int j = D.begin()->i;
    out = P(triv) - qpow(j) * P(*D.begin()) + qpow(2 * j) * P(sgn);
  } else if (l == sgn && D == LabelSet{sgn}) {
    out = poly({{0, 1}, {2, -1}, {n, -1}, {n + 2, 1}}) * P(sgn);
  } else if (l.is_chi() && D == LabelSet{sgn}) {
    out = P(l) - poly({{l.i, 1}, {n - l.i, 1}}) * P(sgn);
  } else if (l.is_chi() && D.size() == 2 && D.count(sgn)) {
    IrrLabel other = *D.begin() == sgn ? *D.rbegin() : *D.begin();
    if (!other.is_chi() || other.i < l.i) {
      found = false;
    } else if (other.i > l.i) {
      int i = l.i, j = other.i;
      out = P(l) - qpow(i) * P(sgn) - qpow(j - i) * P(other) + qpow(2 * j - i) * P(sgn);
    } else if (l.i == C) {
      out = poly({{0, 1}, {1, -1}}) * P(l) + poly({{C, -1}, {C + 2, 1}}) * P(sgn);
    } else {
      // J_{chi_i}
      int i = l.i;
      out.add(triv, qpow(i));
      for (int j = 1; j <= i; ++j) out.add(IrrLabel::chi(g, j), qpow(i - j));
      for (int j = i + 1; j <= C; ++j) out.add(IrrLabel::chi(g, j), qpow(j - i) + qpow(n - j - i));
    }
  } else {
    found = false;
  }
  if (!found) throw NoClosedForm("no closed form for F_" + l.name() + " with the given D");
  out = out.simplified();
  for (const auto& [lab, r] : out.entries) {
    bool ok = r.is_polynomial() ? r.num().nonnegative() : expand(r, 4 * n).nonnegative();
    if (!ok) throw std::logic_error("closed form with a negative coefficient");
  }
  return out;
}

// ---------------------------------------------------------------------- omega

namespace {

using CycPoly = std::vector<CycNum>;  // coefficients in q, lowest first

CycPoly cp_mul(const CycPoly& a, const CycPoly& b, int n) {
  CycPoly r(a.size() + b.size() - 1, CycNum(n, 0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

CycPoly cp_from_int(const LaurentPoly& p, int n) {
  CycPoly r(p.is_zero() ? 1 : p.max_degree() + 1, CycNum(n, 0));
  for (const auto& [e, c] : p.terms()) r[e] = CycNum(n, mpq_class(c));
  return r;
}

void cp_add_scaled(CycPoly& acc, const CycPoly& a, const CycNum& s) {
  if (acc.size() < a.size()) acc.resize(a.size(), CycNum(s.modulus(), 0));
  for (size_t i = 0; i < a.size(); ++i) acc[i] += a[i] * s;
}

}  // namespace

OmegaMatrix omega(const GroupParams& g) {
  const int n = g.n, m = g.num_irr();
  auto els = all_elements(g);
  LaurentPoly one_minus_q2 = LaurentPoly(1) - LaurentPoly::monomial(2);
  LaurentPoly one_minus_qn = LaurentPoly(1) - LaurentPoly::monomial(n);
  // Over the common denominator (1-q^2)(1-q^n)^2:
  //   rotation r^j: (sum_k q^k z^{jk})(sum_l q^l z^{-jl}) (1-q^2)
  //   reflection:   (1-q^n)^2
  std::vector<CycPoly> term(els.size());
  for (size_t k = 0; k < els.size(); ++k) {
    if (els[k].refl) {
      term[k] = cp_from_int(one_minus_qn * one_minus_qn, n);
    } else {
      int j = els[k].rot;
      CycPoly a(n, CycNum(n, 0)), b(n, CycNum(n, 0));
      for (int t = 0; t < n; ++t) {
        a[t] = CycNum::zeta(n, static_cast<long>(j) * t);
        b[t] = CycNum::zeta(n, -static_cast<long>(j) * t);
      }
      term[k] = cp_mul(cp_mul(a, b, n), cp_from_int(one_minus_q2, n), n);
    }
  }
  auto labels = all_labels(g);
  OmegaMatrix out(m, std::vector<QRational>(m));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      CycPoly acc;
      for (size_t k = 0; k < els.size(); ++k)
        cp_add_scaled(acc, term[k], char_value(g, labels[x], els[k]) * char_value(g, labels[y], els[k]));
      LaurentPoly num;
      for (size_t e = 0; e < acc.size(); ++e) {
        if (!acc[e].is_rational()) throw std::runtime_error("Molien average is not rational");
        mpq_class v = acc[e].rational_value() / g.order();
        if (v.get_den() != 1) throw std::runtime_error("Molien numerator is not integral");
        num.add_term(static_cast<int>(e), v.get_num());
      }
      out[x][y] = QRational(num, {2, n, n}).simplified();
    }
  }
  return out;
}

// ------------------------------------------------------------------------ gep

LaurentPoly gep_simple(const GroupParams& g, const IrrLabel& l, const IrrLabel& mu) {
  LaurentPoly p;
  p.add_term(0, mult_in(g, tensor_decompose(g, IrrLabel::triv(), l), mu));
  p.add_term(-1, -mult_in(g, tensor_decompose(g, IrrLabel::chi(g, 1), l), mu));
  p.add_term(-2, mult_in(g, tensor_decompose(g, IrrLabel::sgn(), l), mu));
  return p;
}

LaurentPoly gep(const GroupParams& g, const GradedCharacter& M, const IrrLabel& mu) {
  GradedCharacter s = M.simplified();
  if (!s.is_finite()) throw std::invalid_argument("gep requires a finite-dimensional character");
  auto mult = [&](const IrrLabel& l, int d) -> mpz_class {
    auto it = s.entries.find(l);
    return it == s.entries.end() ? mpz_class(0) : it->second.num().coeff(d);
  };
  int lo = 0, hi = 0;
  for (const auto& [l, r] : s.entries) {
    lo = std::min(lo, r.num().min_degree());
    hi = std::max(hi, r.num().max_degree());
  }
  IrrLabel smu = sgn_twist(mu);
  VirtualRep chi_mu = tensor_decompose(g, IrrLabel::chi(g, 1), mu);
  LaurentPoly out;
  for (int d = lo; d <= hi + 2; ++d) {
    mpz_class v = mult(mu, d) + mult(smu, d - 2);
    for (const auto& [l, m] : chi_mu.mults) v -= m * mult(l, d - 1);
    out.add_term(-d, v);
  }
  return out;
}

bool gch_diff_check(const GroupParams& g, long i, int N) {
  GradedCharacter lhs = gch_projective_chi(g, i) - qpow(1) * gch_projective_chi(g, i + 1);
  GradedCharacter rhs;
  QRational geo(LaurentPoly(1), {g.n});
  for (int k = 0; k <= g.n - 1; ++k) rhs.add(fold_index(g, i - k), geo.shifted(k));
  lhs = lhs.simplified();
  rhs = rhs.simplified();
  if (!(lhs == rhs)) return false;
  return char_equal(g, lhs.expand(N), rhs.expand(N));
}

// ----------------------------------------------------------------------- json

nlohmann::json to_json(const GroupParams& g, const GradedCharacter& c) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& l : all_labels(g)) j[l.name()] = to_json(c.at(l));
  return j;
}

nlohmann::json to_json(const GroupParams& g, const TruncatedCharacter& c) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& l : all_labels(g)) j[l.name()] = to_json(c.at(l));
  return j;
}

GradedCharacter character_from_json(const GroupParams& g, const nlohmann::json& j) {
  GradedCharacter c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    QRational r = rational_from_json(it.value());
    if (!r.is_zero()) c.entries.emplace(IrrLabel::parse(g, it.key()), r);
  }
  return c;
}

TruncatedCharacter truncated_from_json(const GroupParams& g, const nlohmann::json& j, int trunc) {
  TruncatedCharacter c;
  c.trunc = trunc;
  for (auto it = j.begin(); it != j.end(); ++it) c.entries.emplace(IrrLabel::parse(g, it.key()), series_from_json(it.value(), trunc));
  return c;
}

}  // namespace springer
