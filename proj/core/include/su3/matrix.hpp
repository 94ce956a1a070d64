#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "su3/errors.hpp"
#include "su3/scalar.hpp"

namespace su3 {

/// Dense row-major matrix over a commutative ring.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  R trace() const {
    R t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + (*this)(i, i);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    Matrix<decltype(f(std::declval<const R&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DegreeOverflow("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    using su3::is_zero;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] + b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = c.data_[i] - b.data_[i];
    return c;
  }
  friend Matrix operator*(const R& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }
  Matrix operator-() const {
    Matrix c = *this;
    for (auto& x : c.data_) x = -x;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using ScalarVector = std::vector<Scalar>;

// -------------------------------------------------------------- linear algebra

/// Reduced row echelon form. Float pivots below `zero_tolerance` count as
/// zero; a float pivot between the tolerance and 1e-20 makes the rank
/// ambiguous and raises InexactScalars.
struct Echelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  bool inexact = false;
};

Echelon row_reduce(ScalarMatrix m);
std::size_t rank(const ScalarMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<ScalarVector> nullspace(const ScalarMatrix& m);
/// Some solution of m x = b, or nothing when inconsistent.
std::optional<ScalarVector> solve(const ScalarMatrix& m, const ScalarVector& b);
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);
Scalar determinant(ScalarMatrix m);

bool is_zero(const ScalarMatrix& m);
bool is_symmetric(const ScalarMatrix& m);
/// Exact for exact entries, within `tolerance` for floats.
bool approx_equal(const ScalarMatrix& a, const ScalarMatrix& b, const BigFloat& tolerance);
/// Sylvester criterion on leading minors.
bool is_positive_definite(const ScalarMatrix& m);
ScalarMatrix parse_matrix(std::string_view text);
std::string to_string(const ScalarMatrix& m);

}  // namespace su3
