#pragma once
// Dense exact matrices.

#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace gtmod {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, F(0)) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  int rows() const { return r_; }
  int cols() const { return c_; }
  F& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("shape mismatch");
    Matrix m(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        if (x(i, k) == F(0)) continue;
        for (int j = 0; j < y.c_; ++j) m(i, j) += x(i, k) * y(k, j);
      }
    return m;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    for (size_t t = 0; t < x.a_.size(); ++t) x.a_[t] -= y.a_[t];
    return x;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (size_t t = 0; t < x.a_.size(); ++t) x.a_[t] += y.a_[t];
    return x;
  }
  Matrix scaled(const F& s) const {
    Matrix m = *this;
    for (auto& v : m.a_) v *= s;
    return m;
  }
  Matrix pow(int e) const {
    Matrix r = identity(r_), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  bool is_zero() const {
    for (auto& v : a_)
      if (!(v == F(0))) return false;
    return true;
  }
  // stack rows
  static Matrix vstack(const std::vector<Matrix>& ms) {
    int c = ms.empty() ? 0 : ms.front().c_, r = 0;
    for (auto& m : ms) r += m.r_;
    Matrix out(r, c);
    int off = 0;
    for (auto& m : ms) {
      for (int i = 0; i < m.r_; ++i)
        for (int j = 0; j < c; ++j) out(off + i, j) = m(i, j);
      off += m.r_;
    }
    return out;
  }

  // reduced row echelon form; returns pivot columns
  std::vector<int> rref() {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int p = -1;
      for (int i = row; i < r_; ++i)
        if (!((*this)(i, col) == F(0))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      for (int j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      F inv = F(1) / (*this)(row, col);
      for (int j = 0; j < c_; ++j) (*this)(row, j) *= inv;
      for (int i = 0; i < r_; ++i) {
        if (i == row || (*this)(i, col) == F(0)) continue;
        F f = (*this)(i, col);
        for (int j = 0; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      piv.push_back(col);
      ++row;
    }
    return piv;
  }
  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }
  // basis of the right kernel, as columns
  std::vector<std::vector<F>> kernel() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::vector<F>> out;
    for (int f = 0; f < c_; ++f) {
      if (is_piv[f]) continue;
      std::vector<F> v(c_, F(0));
      v[f] = F(1);
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
      out.push_back(v);
    }
    return out;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<F> a_;
};

using QMatrix = Matrix<Q>;

}  // namespace gtmod
