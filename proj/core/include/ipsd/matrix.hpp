#ifndef IPSD_MATRIX_HPP
#define IPSD_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ipsd/rational.hpp"

namespace ipsd {

// Dense matrix over exact rationals. Sized for desk-scale state spaces;
// everything here is exact, no floating point.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix operator+(const RatMatrix& o) const {
    check_same_shape(o);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }
  RatMatrix operator-(const RatMatrix& o) const {
    check_same_shape(o);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }
  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rational& b = o(k, j);
          if (b != 0) r(i, j) += a * b;
        }
      }
    return r;
  }
  RatMatrix operator*(const Rational& s) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
  }
  friend RatMatrix operator*(const Rational& s, const RatMatrix& m) { return m * s; }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  RatMatrix transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  // Location and value of an entry with largest |numerator/denominator|,
  // used to report residual witnesses.
  struct Witness {
    std::size_t row = 0, col = 0;
    Rational value = 0;
  };
  Witness max_abs_entry() const {
    Witness w;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        Rational v = (*this)(i, j);
        if (abs(v) > abs(w.value)) { w.row = i; w.col = j; w.value = v; }
      }
    return w;
  }

  // Gauss-Jordan inverse, exact. Throws if singular.
  RatMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix: inverse of non-square");
    std::size_t n = rows_;
    RatMatrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) throw std::runtime_error("RatMatrix: singular matrix");
      if (piv != col) { a.swap_rows(piv, col); inv.swap_rows(piv, col); }
      Rational d = a(col, col);
      for (std::size_t j = 0; j < n; ++j) { a(col, j) /= d; inv(col, j) /= d; }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col) == 0) continue;
        Rational f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  // Solve A x = b exactly (square A).
  std::vector<Rational> solve(std::vector<Rational> b) const {
    if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("RatMatrix: solve shape");
    std::size_t n = rows_;
    RatMatrix a = *this;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) throw std::runtime_error("RatMatrix: singular system");
      if (piv != col) { a.swap_rows(piv, col); std::swap(b[piv], b[col]); }
      Rational d = a(col, col);
      for (std::size_t j = col; j < n; ++j) a(col, j) /= d;
      b[col] /= d;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col) == 0) continue;
        Rational f = a(i, col);
        for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        b[i] -= f * b[col];
      }
    }
    return b;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

 private:
  void check_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("RatMatrix: dimension mismatch");
  }
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

inline RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

}  // namespace ipsd

#endif
