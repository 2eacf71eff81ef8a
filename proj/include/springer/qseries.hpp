#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace springer {

// Finite Laurent polynomial in q with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // constant
  static LaurentPoly monomial(int exp, const mpz_class& c = 1);

  const std::map<int, mpz_class>& terms() const { return terms_; }
  mpz_class coeff(int exp) const;
  void add_term(int exp, const mpz_class& c);

  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;  // requires !is_zero()
  int max_degree() const;
  bool nonnegative() const;

  LaurentPoly shifted(int k) const;  // q^k * this

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<int, mpz_class> terms_;
};

LaurentPoly bar_involution(const LaurentPoly& p);

// Truncated Laurent series: coefficients for exponents low..trunc are known.
class QSeries {
 public:
  QSeries() = default;
  QSeries(int low, int trunc);  // zero series
  static QSeries from_poly(const LaurentPoly& p, int trunc);

  int low() const { return low_; }
  int trunc() const { return trunc_; }
  mpz_class coeff(int exp) const;  // 0 below low; exp must be <= trunc
  void set_coeff(int exp, const mpz_class& c);
  void add_coeff(int exp, const mpz_class& c);

  QSeries truncated(int n) const;
  QSeries shifted(int k) const;
  bool is_zero() const;  // within window
  bool nonnegative() const;
  // Leading exponent with nonzero coefficient, or trunc+1 if none.
  int valuation() const;
  LaurentPoly to_poly() const;  // all known terms

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;

  // Requires the coefficient at exponent 0 to be +-1 and low >= 0.
  QSeries inverse() const;

  std::string to_string() const;

 private:
  int low_ = 0;
  int trunc_ = -1;
  std::vector<mpz_class> c_;  // c_[k] is the coefficient of q^(low_+k)
};

// Equality on the overlapping window; optionally reports the compared bound.
bool series_equal(const QSeries& a, const QSeries& b, int* window = nullptr);

// num / prod_k (1 - q^k)
class QRational {
 public:
  QRational() = default;
  QRational(LaurentPoly num, std::vector<int> denom = {});

  const LaurentPoly& num() const { return num_; }
  const std::vector<int>& denom() const { return denom_; }
  bool is_polynomial() const { return denom_.empty(); }
  bool is_zero() const { return num_.is_zero(); }

  QRational shifted(int k) const;
  // Cancels (1-q^k) factors that divide the numerator exactly.
  QRational simplified() const;

  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b);
  friend QRational operator*(const QRational& a, const QRational& b);
  QRational operator-() const;
  // Exact equality as rational functions.
  friend bool operator==(const QRational& a, const QRational& b);

  std::string to_string() const;

 private:
  LaurentPoly num_;
  std::vector<int> denom_;  // sorted
};

QSeries expand(const QRational& r, int N);

// Exact division of p by (1 - q^k); returns false if not divisible.
bool divide_one_minus(const LaurentPoly& p, int k, LaurentPoly& quotient);

// Element of Q(zeta_n) in the power basis of Q[x]/Phi_n.
class CycNum {
 public:
  CycNum() = default;
  CycNum(int n, const mpq_class& c = 0);
  static CycNum zeta(int n, long k = 1);
  // Reduces an arbitrary polynomial in zeta (lowest degree first).
  static CycNum from_poly(int n, std::vector<mpq_class> poly);

  int modulus() const { return n_; }
  const std::vector<mpq_class>& coords() const { return a_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()
  CycNum conj() const;               // zeta -> zeta^{-1}

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  CycNum operator-() const;
  friend bool operator==(const CycNum& a, const CycNum& b);

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<mpq_class> a_;  // length phi(n)
  void reduce_from(std::vector<mpq_class> poly);
};

CycNum cyc_add(const CycNum& a, const CycNum& b);
CycNum cyc_mul(const CycNum& a, const CycNum& b);
CycNum cyc_inv(const CycNum& a);  // throws std::domain_error on zero

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_poly(int n);

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const QSeries& s);
nlohmann::json to_json(const QRational& r);
LaurentPoly laurent_from_json(const nlohmann::json& j);
QSeries series_from_json(const nlohmann::json& j, int trunc);
QRational rational_from_json(const nlohmann::json& j);

}  // namespace springer
