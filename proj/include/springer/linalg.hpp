#pragma once

#include <gmpxx.h>

#include <vector>

namespace springer {

// Dense matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  mpq_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const mpq_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  std::vector<mpq_class> row(int i) const;
  std::vector<mpq_class> col(int j) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<mpq_class> a_;
};

using Vec = std::vector<mpq_class>;

Vec apply(const Matrix& m, const Vec& v);
bool is_zero(const Vec& v);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vec> nullspace(const Matrix& m);

// Subspace of Q^dim kept as reduced echelon rows.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int dim) : dim_(dim) {}
  static Subspace span(int dim, const std::vector<Vec>& vs);
  static Subspace whole(int dim);

  int ambient() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

  // Adds vectors and re-reduces; returns true if the span grew.
  bool add(const std::vector<Vec>& vs);
  bool contains(const Vec& v) const;
  Vec reduce(const Vec& v) const;  // v minus its projection along pivots
  // Coordinates of v in the complement basis (non-pivot unit vectors) after reduction.
  Vec quotient_coords(const Vec& v) const;
  std::vector<int> free_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.dim_ == b.dim_ && a.rows_ == b.rows_; }

 private:
  int dim_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
  void rebuild(std::vector<Vec> vs);
};

}  // namespace springer
