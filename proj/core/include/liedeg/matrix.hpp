#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liedeg/scalar.hpp"

namespace liedeg {

/// Dense matrix over an exact field K (Scalar, RatFunc). All elimination is
/// exact; there are no tolerances anywhere.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& v = (*this)(r, k);
        if (v.is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) {
          if (o(k, c).is_zero()) continue;
          p(r, c) += v * o(k, c);
        }
      }
    return p;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    assert(v.size() == cols_);
    std::vector<K> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  /// In-place reduced row echelon form. Returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
      std::size_t sel = rows_;
      for (std::size_t i = r; i < rows_; ++i)
        if (!(*this)(i, col).is_zero()) {
          sel = i;
          break;
        }
      if (sel == rows_) continue;
      swap_rows(r, sel);
      K inv = (*this)(r, col).inverse();
      for (std::size_t c = col; c < cols_; ++c)
        if (!(*this)(r, c).is_zero()) (*this)(r, c) = (*this)(r, c) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const K f = (*this)(i, col);
        if (f.is_zero()) continue;
        for (std::size_t c = col; c < cols_; ++c) {
          if ((*this)(r, c).is_zero()) continue;
          (*this)(i, c) -= f * (*this)(r, c);
        }
      }
      piv.push_back(col);
      ++r;
    }
    return piv;
  }

  std::size_t rank() const {
    Matrix tmp = *this;
    return tmp.rref().size();
  }

  /// Basis of the right kernel, returned as columns of a cols x nullity matrix.
  Matrix kernel() const {
    Matrix R = *this;
    std::vector<std::size_t> piv = R.rref();
    std::vector<std::size_t> free;
    {
      std::size_t pi = 0;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (pi < piv.size() && piv[pi] == c)
          ++pi;
        else
          free.push_back(c);
      }
    }
    Matrix ker(cols_, free.size());
    for (std::size_t fi = 0; fi < free.size(); ++fi) {
      ker(free[fi], fi) = K(1);
      for (std::size_t ri = 0; ri < piv.size(); ++ri)
        ker(piv[ri], fi) = -R(ri, free[fi]);
    }
    return ker;
  }

  K det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    Matrix m = *this;
    K d(1);
    for (std::size_t col = 0, r = 0; col < cols_; ++col, ++r) {
      std::size_t sel = rows_;
      for (std::size_t i = r; i < rows_; ++i)
        if (!m(i, col).is_zero()) {
          sel = i;
          break;
        }
      if (sel == rows_) return K(0);
      if (sel != r) {
        m.swap_rows(r, sel);
        d = -d;
      }
      d = d * m(r, col);
      K inv = m(r, col).inverse();
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (m(i, col).is_zero()) continue;
        K f = m(i, col) * inv;
        for (std::size_t c = col; c < cols_; ++c) {
          if (m(r, c).is_zero()) continue;
          m(i, c) -= f * m(r, c);
        }
      }
    }
    return d;
  }

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
      aug(r, cols_ + r) = K(1);
    }
    std::vector<std::size_t> piv = aug.rref();
    if (piv.size() != rows_ || piv.back() >= cols_)
      throw std::domain_error("matrix is singular");
    Matrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = aug(r, cols_ + c);
    return inv;
  }

  /// Solve A x = b; returns empty if inconsistent, else one solution (free
  /// variables set to zero).
  std::vector<std::vector<K>> solve(const std::vector<K>& b) const {
    assert(b.size() == rows_);
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
      aug(r, cols_) = b[r];
    }
    std::vector<std::size_t> piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return {};  // inconsistent
    std::vector<K> x(cols_);
    for (std::size_t ri = 0; ri < piv.size(); ++ri) x[piv[ri]] = aug(ri, cols_);
    return {std::move(x)};
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

using Mat = Matrix<Scalar>;

}  // namespace liedeg
