#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicdisc/scalar.hpp"

namespace cubicdisc {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const;
  Matrix conj() const;
  T trace() const;
  bool is_zero() const;
  Matrix column(std::size_t j) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const T& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(Matrix x, const T& s) { return x *= s; }
  friend Matrix operator*(const T& s, Matrix x) { return x *= s; }
  friend Matrix operator*(const Matrix& x, const Matrix& y) { return x.multiply(y); }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  Matrix multiply(const Matrix& o) const;

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::conj() const {
  Matrix t(*this);
  for (auto& x : t.data_) x = x.conj();
  return t;
}

template <class T>
T Matrix<T>::trace() const {
  T s;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

template <class T>
bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x.is_zero(); });
}

template <class T>
Matrix<T> Matrix<T>::column(std::size_t j) const {
  Matrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

template <class T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator*=(const T& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

template <class T>
Matrix<T> Matrix<T>::operator-() const {
  Matrix t(*this);
  for (auto& x : t.data_) x = -x;
  return t;
}

template <class T>
Matrix<T> Matrix<T>::multiply(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const T& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const T& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

template <class T>
T trace_of_product(const Matrix<T>& x, const Matrix<T>& y) {
  T s;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) s += x(i, k) * y(k, i);
  return s;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& x, const Matrix<T>& y) {
  return x * y - y * x;
}

// Sum of squared magnitudes, computed in double precision.
template <class T>
double frobenius(const Matrix<T>& m) {
  double s = 0;
  for (const auto& x : m.data()) {
    double v = x.magnitude();
    s += v * v;
  }
  return std::sqrt(s);
}

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  double threshold = 0;
  if constexpr (!is_exact_v<T>) {
    double scale = 0;
    for (const auto& x : m.data()) scale = std::max(scale, x.magnitude());
    threshold = ScalarTraits<T>::pivot_eps * std::max(scale, 1.0);
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = m.rows();
    if constexpr (is_exact_v<T>) {
      for (std::size_t r = row; r < m.rows(); ++r)
        if (!m(r, col).is_zero()) {
          piv = r;
          break;
        }
    } else {
      double best = threshold;
      for (std::size_t r = row; r < m.rows(); ++r) {
        double v = m(r, col).magnitude();
        if (v > best) {
          best = v;
          piv = r;
        }
      }
    }
    if (piv == m.rows()) {
      if constexpr (!is_exact_v<T>)
        for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T();
      continue;
    }
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const T inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const T f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      m(r, col) = T();
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return row_reduce(m).size();
}

// Columns form a basis of {x : m x = 0}.
template <class T>
Matrix<T> nullspace(Matrix<T> m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<T> basis(m.cols(), m.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free);
    ++k;
  }
  return basis;
}

template <class T>
std::optional<Matrix<T>> try_inverse(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  auto r = try_inverse(m);
  if (!r) throw std::domain_error("singular matrix");
  return *r;
}

// One solution of a x = b, or nullopt when inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  const auto pivots = row_reduce(aug);
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  }
  return x;
}

}  // namespace cubicdisc
