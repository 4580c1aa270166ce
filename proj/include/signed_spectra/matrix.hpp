#pragma once

// Minimal dense matrix over an exact scalar type (cpp_int, cpp_rational, or
// plain ints in tests). Only what the spectral kernels need.

#include <stdexcept>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T(0))
      : r_(rows), c_(cols), a_(size_t(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
      for (int j = i + 1; j < c_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const T& x : a_)
      if (x != T(0)) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& aik = (*this)(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < o.c_; ++j) p(i, j) += aik * o(k, j);
      }
    return p;
  }

  Matrix operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_)
      throw std::invalid_argument("Matrix: dimension mismatch in sum");
    Matrix s = *this;
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
    return s;
  }

  Matrix operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_)
      throw std::invalid_argument("Matrix: dimension mismatch in difference");
    Matrix s = *this;
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
    return s;
  }

  T trace() const {
    T t(0);
    for (int i = 0; i < r_ && i < c_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> adjacency_matrix(const SignedGraph& g) {
  Matrix<T> a(g.order(), g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (int s = g.at(i, j); s != 0) a(i, j) = T(s);
  return a;
}

}  // namespace signed_spectra
