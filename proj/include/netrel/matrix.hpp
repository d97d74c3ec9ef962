#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netrel/unipoly.hpp"

namespace netrel {

/// Small dense matrix over a commutative ring R.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> rows) : r_(rows.size()) {
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw std::invalid_argument("ragged matrix initializer");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }
  static Matrix row(std::vector<R> v) {
    Matrix m(1, v.size());
    m.a_ = std::move(v);
    return m;
  }
  static Matrix column(std::vector<R> v) {
    Matrix m(v.size(), 1);
    m.a_ = std::move(v);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const R& xik = x(i, k);
        if (xik == R(0)) continue;
        for (std::size_t j = 0; j < y.c_; ++j) z(i, j) = z(i, j) + xik * y(k, j);
      }
    return z;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = z.a_[i] + y.a_[i];
    return z;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = z.a_[i] - y.a_[i];
    return z;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

  Matrix pow(unsigned e) const {
    Matrix r = identity(r_), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return r;
  }

  /// Entrywise image under f (e.g. substitution or ring change).
  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<R>()))> {
    using S = decltype(f(std::declval<R>()));
    Matrix<S> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j);
      os << "]\n";
    }
    return os.str();
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<R> a_;
};

/**
 * Fraction-free (Bareiss) determinant; needs exact_div(R, R).
 * Zero pivots are handled by row exchange.
 */
template <class R>
R determinant(Matrix<R> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == R(0)) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == R(0)) ++piv;
      if (piv == n) return R(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(R(m(i, j) * m(k, k) - m(i, k) * m(k, j)), prev);
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return negate ? R(R(0) - d) : d;
}

/// det(x I - M) as a polynomial in x.
template <class R>
UniPoly<R> characteristic_polynomial(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  Matrix<UniPoly<R>> xm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      UniPoly<R> e(R(R(0) - m(i, j)));
      if (i == j) e += UniPoly<R>::x();
      xm(i, j) = e;
    }
  return determinant(xm);
}

}  // namespace netrel
