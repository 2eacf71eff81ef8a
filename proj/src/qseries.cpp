#include "springer/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace springer {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& c) {
  LaurentPoly p;
  p.add_term(exp, c);
  return p;
}

mpz_class LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int exp, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

static void append_term(std::ostringstream& os, bool first, const mpz_class& c, int e) {
  mpz_class a = abs(c);
  if (c < 0)
    os << (first ? "-" : " - ");
  else if (!first)
    os << " + ";
  bool unit = (a == 1);
  if (e == 0) {
    os << a.get_str();
    return;
  }
  if (!unit) os << a.get_str() << "*";
  os << "q";
  if (e != 1) os << "^" << e;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, c, e);
    first = false;
  }
  return os.str();
}

LaurentPoly bar_involution(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

// -------------------------------------------------------------------- QSeries

QSeries::QSeries(int low, int trunc) : low_(low), trunc_(trunc) {
  if (trunc >= low) c_.assign(trunc - low + 1, 0);
}

QSeries QSeries::from_poly(const LaurentPoly& p, int trunc) {
  int low = p.is_zero() ? 0 : std::min(0, p.min_degree());
  QSeries s(low, trunc);
  for (const auto& [e, c] : p.terms())
    if (e <= trunc) s.c_[e - low] = c;
  return s;
}

mpz_class QSeries::coeff(int exp) const {
  if (exp > trunc_) throw std::out_of_range("QSeries coefficient beyond truncation");
  if (exp < low_) return 0;
  return c_[exp - low_];
}

void QSeries::set_coeff(int exp, const mpz_class& c) {
  if (exp > trunc_) return;
  if (exp < low_) {
    if (c == 0) return;
    c_.insert(c_.begin(), low_ - exp, mpz_class(0));
    low_ = exp;
  }
  c_[exp - low_] = c;
}

void QSeries::add_coeff(int exp, const mpz_class& c) {
  if (exp > trunc_ || c == 0) return;
  set_coeff(exp, coeff(exp) + c);
}

QSeries QSeries::truncated(int n) const {
  QSeries r(low_, std::min(n, trunc_));
  for (int e = low_; e <= r.trunc_; ++e) r.c_[e - low_] = c_[e - low_];
  return r;
}

QSeries QSeries::shifted(int k) const {
  QSeries r = *this;
  r.low_ += k;
  r.trunc_ += k;
  return r;
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return x == 0; });
}

bool QSeries::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return x >= 0; });
}

int QSeries::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return low_ + static_cast<int>(k);
  return trunc_ + 1;
}

LaurentPoly QSeries::to_poly() const {
  LaurentPoly p;
  for (size_t k = 0; k < c_.size(); ++k) p.add_term(low_ + static_cast<int>(k), c_[k]);
  return p;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  int t = std::min(trunc_, o.trunc_);
  QSeries r(std::min(low_, o.low_), t);
  for (int e = r.low_; e <= t; ++e) r.c_[e - r.low_] = coeff(e) + o.coeff(e);
  return *this = r;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  // Product coefficient at e needs a up to e-low(b) and b up to e-low(a).
  int t = std::min({a.trunc_, b.trunc_, a.trunc_ + b.low_, b.trunc_ + a.low_});
  QSeries r(a.low_ + b.low_, t);
  for (int i = a.low_; i <= a.trunc_; ++i) {
    const mpz_class& x = a.c_[i - a.low_];
    if (x == 0) continue;
    for (int j = b.low_; j <= b.trunc_ && i + j <= t; ++j) {
      const mpz_class& y = b.c_[j - b.low_];
      if (y != 0) r.c_[i + j - r.low_] += x * y;
    }
  }
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeries QSeries::inverse() const {
  if (low_ < 0) {
    for (int e = low_; e < 0; ++e)
      if (coeff(e) != 0) throw std::domain_error("series with negative valuation is not inverted here");
  }
  mpz_class c0 = trunc_ >= 0 ? coeff(0) : mpz_class(0);
  if (c0 != 1 && c0 != -1) throw std::domain_error("series constant term is not a unit");
  QSeries r(0, trunc_);
  for (int e = 0; e <= trunc_; ++e) {
    mpz_class acc = (e == 0) ? mpz_class(1) : mpz_class(0);
    for (int k = 1; k <= e; ++k) acc -= coeff(k) * r.c_[e - k];
    r.c_[e] = acc * c0;  // c0 is its own inverse
  }
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    append_term(os, first, c_[k], low_ + static_cast<int>(k));
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << trunc_ + 1 << ")";
  return os.str();
}

bool series_equal(const QSeries& a, const QSeries& b, int* window) {
  int t = std::min(a.trunc(), b.trunc());
  if (window) *window = t;
  for (int e = std::min(a.low(), b.low()); e <= t; ++e)
    if (a.coeff(e) != b.coeff(e)) return false;
  return true;
}

// ------------------------------------------------------------------ QRational

QRational::QRational(LaurentPoly num, std::vector<int> denom) : num_(std::move(num)), denom_(std::move(denom)) {
  for (int k : denom_)
    if (k <= 0) throw std::invalid_argument("denominator factor must be positive");
  std::sort(denom_.begin(), denom_.end());
}

static LaurentPoly one_minus(int k) { return LaurentPoly(1) - LaurentPoly::monomial(k); }

static LaurentPoly product_one_minus(const std::vector<int>& ks) {
  LaurentPoly p(1);
  for (int k : ks) p = p * one_minus(k);
  return p;
}

QRational QRational::shifted(int k) const { return QRational(num_.shifted(k), denom_); }

bool divide_one_minus(const LaurentPoly& p, int k, LaurentPoly& quotient) {
  // p = (1 - q^k) * Q  <=>  Q_e = p_e + Q_{e-k}
  quotient = LaurentPoly();
  if (p.is_zero()) return true;
  int lo = p.min_degree(), hi = p.max_degree();
  std::map<int, mpz_class> q;
  for (int e = lo; e <= hi; ++e) {
    mpz_class v = p.coeff(e);
    auto it = q.find(e - k);
    if (it != q.end()) v += it->second;
    if (v != 0) q[e] = v;
  }
  // Remainder check: terms of Q beyond hi-k must vanish.
  for (const auto& [e, c] : q)
    if (e > hi - k) return false;
  for (const auto& [e, c] : q) quotient.add_term(e, c);
  return true;
}

QRational QRational::simplified() const {
  LaurentPoly num = num_;
  std::vector<int> kept;
  for (int k : denom_) {
    LaurentPoly quo;
    if (divide_one_minus(num, k, quo))
      num = quo;
    else
      kept.push_back(k);
  }
  if (num.is_zero()) kept.clear();
  return QRational(num, kept);
}

// Multiset union with maximal multiplicities.
static std::vector<int> common_denominator(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j]))
      r.push_back(a[i++]);
    else if (i == a.size() || b[j] < a[i])
      r.push_back(b[j++]);
    else {
      r.push_back(a[i]);
      ++i, ++j;
    }
  }
  return r;
}

static std::vector<int> multiset_minus(const std::vector<int>& big, const std::vector<int>& small) {
  std::vector<int> r;
  std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(r));
  return r;
}

QRational operator+(const QRational& a, const QRational& b) {
  std::vector<int> d = common_denominator(a.denom_, b.denom_);
  LaurentPoly n = a.num_ * product_one_minus(multiset_minus(d, a.denom_)) +
                  b.num_ * product_one_minus(multiset_minus(d, b.denom_));
  return QRational(n, d);
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
  std::vector<int> d = a.denom_;
  d.insert(d.end(), b.denom_.begin(), b.denom_.end());
  return QRational(a.num_ * b.num_, d);
}

QRational QRational::operator-() const { return QRational(-num_, denom_); }

bool operator==(const QRational& a, const QRational& b) {
  return a.num_ * product_one_minus(b.denom_) == b.num_ * product_one_minus(a.denom_);
}

std::string QRational::to_string() const {
  if (denom_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  for (size_t i = 0; i < denom_.size(); ++i) os << (i ? "(1-q^" : "(1-q^") << denom_[i] << ")";
  os << ")";
  return os.str();
}

QSeries expand(const QRational& r, int N) {
  QSeries s = QSeries::from_poly(r.num(), N);
  for (int k : r.denom()) {
    // multiply by 1/(1-q^k): s_e += s_{e-k}, ascending
    for (int e = s.low() + k; e <= N; ++e) s.add_coeff(e, s.coeff(e - k));
  }
  return s;
}

// --------------------------------------------------------------------- CycNum

namespace {

std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  // den is monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  std::vector<mpz_class> q(std::max(0, nn - dn + 1), 0);
  for (int i = nn; i >= dn; --i) {
    mpz_class c = num[i];
    q[i - dn] = c;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (int i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

std::vector<mpz_class> compute_cyclotomic(int n) {
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d));
  return p;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto p = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

CycNum::CycNum(int n, const mpq_class& c) : n_(n) {
  a_.assign(cyclotomic_poly(n).size() - 1, 0);
  if (!a_.empty()) a_[0] = c;
}

void CycNum::reduce_from(std::vector<mpq_class> poly) {
  const auto& phi = cyclotomic_poly(n_);
  int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
    if (poly[i] == 0) continue;
    mpq_class c = poly[i];
    for (int j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg, 0);
  a_ = std::move(poly);
}

CycNum CycNum::from_poly(int n, std::vector<mpq_class> poly) {
  CycNum z(n);
  z.reduce_from(std::move(poly));
  return z;
}

CycNum CycNum::zeta(int n, long k) {
  CycNum z(n);
  long e = ((k % n) + n) % n;
  std::vector<mpq_class> poly(e + 1, 0);
  poly[e] = 1;
  z.reduce_from(std::move(poly));
  return z;
}

bool CycNum::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const mpq_class& x) { return x == 0; });
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < a_.size(); ++i)
    if (a_[i] != 0) return false;
  return true;
}

mpq_class CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return a_.empty() ? mpq_class(0) : a_[0];
}

CycNum CycNum::conj() const {
  std::vector<mpq_class> poly(n_ + 1, 0);
  for (size_t i = 0; i < a_.size(); ++i) poly[(n_ - static_cast<int>(i)) % n_] += a_[i];
  CycNum r(n_);
  r.reduce_from(std::move(poly));
  return r;
}

static void check_same(const CycNum& a, const CycNum& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("cyclotomic moduli differ");
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same(*this, o);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same(*this, o);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  check_same(*this, o);
  std::vector<mpq_class> poly(a_.size() + o.a_.size(), 0);
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] == 0) continue;
    for (size_t j = 0; j < o.a_.size(); ++j) poly[i + j] += a_[i] * o.a_[j];
  }
  reduce_from(std::move(poly));
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << a_[i].get_str();
    else
      os << "(" << a_[i].get_str() << ")*z^" << i;
  }
  return first ? "0" : os.str();
}

CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// r = a mod b, qout = a div b
void poly_divmod(QPoly a, const QPoly& b, QPoly& qout, QPoly& r) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  qout.assign(std::max<int>(0, static_cast<int>(a.size()) - db), 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    mpq_class c = a[i] / b[db];
    qout[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  r = a;
  trim(qout);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

CycNum cyc_inv(const CycNum& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  int n = a.modulus();
  QPoly phi;
  for (const auto& c : cyclotomic_poly(n)) phi.push_back(mpq_class(c));
  // Extended Euclid on (phi, a), tracking the coefficient of a.
  QPoly r0 = phi, r1 = a.coords(), s0, s1{1};
  trim(r1);
  while (r1.size() > 1) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    if (r.empty()) throw std::logic_error("cyclotomic polynomial reducible");
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  for (auto& x : s1) x /= r1[0];
  return CycNum::from_poly(n, s1);
}

// ------------------------------------------------------------------------ json

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c.fits_slong_p())
      j[std::to_string(e)] = c.get_si();
    else
      j[std::to_string(e)] = c.get_str();
  }
  return j;
}

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json j = to_json(s.to_poly());
  return j;
}

nlohmann::json to_json(const QRational& r) {
  return nlohmann::json{{"num", to_json(r.num())}, {"denom", r.denom()}};
}

static mpz_class mpz_from_json(const nlohmann::json& v) {
  if (v.is_string()) return mpz_class(v.get<std::string>());
  return mpz_class(v.get<long>());
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) p.add_term(std::stoi(it.key()), mpz_from_json(it.value()));
  return p;
}

QSeries series_from_json(const nlohmann::json& j, int trunc) { return QSeries::from_poly(laurent_from_json(j), trunc); }

QRational rational_from_json(const nlohmann::json& j) {
  return QRational(laurent_from_json(j.at("num")), j.at("denom").get<std::vector<int>>());
}

}  // namespace springer
