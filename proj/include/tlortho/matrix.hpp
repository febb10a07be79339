/**
 * @file matrix.hpp
 * @brief Small dense matrices over a coefficient field, with exact rank.
 */

#pragma once

#include "field.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlortho {

template <CoefficientField K> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto &x : data_)
      if (!x.is_zero())
        return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix &operator+=(const Matrix &o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  Matrix &operator*=(const K &c) {
    for (auto &x : data_)
      x = x * c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(Matrix a, const K &c) { return a *= c; }
  friend Matrix operator*(const K &c, Matrix a) { return a *= c; }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K &x = a(i, k);
        if (x.is_zero())
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero())
            r(i, j) += x * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;

  void check_same(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: dimension mismatch");
  }
};

/// Rank by Gaussian elimination over the exact field K.
template <CoefficientField K> std::size_t rank(Matrix<K> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero())
      ++piv;
    if (piv == m.rows())
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(piv, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero())
        continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero())
          m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// True iff m is diagonal with every diagonal entry nonzero.
template <CoefficientField K> bool is_nonsingular_diagonal(const Matrix<K> &m) {
  if (m.rows() != m.cols())
    return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if ((i == j) == m(i, j).is_zero())
        return false;
  return true;
}

} // namespace tlortho
