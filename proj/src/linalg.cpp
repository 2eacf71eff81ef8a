#include "springer/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<mpq_class> Matrix::row(int i) const {
  return std::vector<mpq_class>(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

std::vector<mpq_class> Matrix::col(int j) const {
  std::vector<mpq_class> v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const mpq_class& x) { return x == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const mpq_class& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.c_; ++j)
        if (b(k, j) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m = a;
  for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m = a;
  for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
  return m;
}

Vec apply(const Matrix& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("vector length mismatch");
  Vec out(m.rows());
  for (int j = 0; j < m.cols(); ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) out[i] += m(i, j) * v[j];
  }
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    mpq_class inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      mpq_class f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> nullspace(const Matrix& m0) {
  Matrix m = m0;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return out;
}

// ------------------------------------------------------------------- Subspace

Subspace Subspace::span(int dim, const std::vector<Vec>& vs) {
  Subspace s(dim);
  s.add(vs);
  return s;
}

Subspace Subspace::whole(int dim) {
  Subspace s(dim);
  for (int i = 0; i < dim; ++i) {
    Vec v(dim);
    v[i] = 1;
    s.rows_.push_back(std::move(v));
    s.piv_.push_back(i);
  }
  return s;
}

void Subspace::rebuild(std::vector<Vec> vs) {
  Matrix m(static_cast<int>(vs.size()), dim_);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (static_cast<int>(vs[i].size()) != dim_) throw std::invalid_argument("subspace vector length mismatch");
    for (int j = 0; j < dim_; ++j) m(static_cast<int>(i), j) = vs[i][j];
  }
  piv_ = rref(m);
  rows_.clear();
  for (size_t r = 0; r < piv_.size(); ++r) rows_.push_back(m.row(static_cast<int>(r)));
}

bool Subspace::add(const std::vector<Vec>& vs) {
  std::vector<Vec> all = rows_;
  bool any = false;
  for (const auto& v : vs) {
    Vec r = reduce(v);
    if (!is_zero(r)) {
      all.push_back(std::move(r));
      any = true;
    }
  }
  if (!any) return false;
  int before = dim();
  rebuild(std::move(all));
  return dim() > before;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const mpq_class f = r[piv_[k]];
    if (f == 0) continue;
    const Vec& row = rows_[k];
    for (int j = 0; j < dim_; ++j)
      if (row[j] != 0) r[j] -= f * row[j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::vector<int> Subspace::free_columns() const {
  std::vector<bool> is_piv(dim_, false);
  for (int c : piv_) is_piv[c] = true;
  std::vector<int> out;
  for (int j = 0; j < dim_; ++j)
    if (!is_piv[j]) out.push_back(j);
  return out;
}

Vec Subspace::quotient_coords(const Vec& v) const {
  Vec r = reduce(v);
  std::vector<int> fc = free_columns();
  Vec out(fc.size());
  for (size_t k = 0; k < fc.size(); ++k) out[k] = r[fc[k]];
  return out;
}

}  // namespace springer
