#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qpflow/errors.hpp"
#include "qpflow/polynomial.hpp"
#include "qpflow/rational.hpp"

namespace qpflow {

// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (auto const& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(std::vector<std::vector<T>> const& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.entries_.reserve(m.rows_ * m.cols_);
    for (auto const& r : rows) {
      if (r.size() != m.cols_) throw InvalidArgument("rows differ in length");
      m.entries_.insert(m.entries_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  T const& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<T const> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::vector<T> row_vector(std::size_t i) const {
    auto const r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(Matrix const&, Matrix const&) = default;

  friend Matrix operator+(Matrix const& a, Matrix const& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
    return r;
  }
  friend Matrix operator-(Matrix const& a, Matrix const& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
    return r;
  }
  friend Matrix operator-(Matrix const& a) {
    Matrix r = a;
    for (auto& e : r.entries_) e = -e;
    return r;
  }
  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix shapes do not chain");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        T const& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(T const& s, Matrix const& a) {
    Matrix r = a;
    for (auto& e : r.entries_) e *= s;
    return r;
  }

 private:
  static void check_same_shape(Matrix const& a, Matrix const& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw InvalidArgument("matrix shapes differ");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(IntMatrix const& m);
// Defined only when every entry is an integer.
std::optional<IntMatrix> to_integer(RatMatrix const& m);

// Exact determinant by fraction-free Bareiss elimination.
Integer integer_det(IntMatrix const& m);
Rational det(RatMatrix const& m);
std::size_t rank(RatMatrix const& m);
std::optional<RatMatrix> inverse(RatMatrix const& m);

// Row vector x with x * m = b, for nonsingular square m.
std::vector<Rational> solve_left(RatMatrix const& m, std::span<Rational const> b);

// The unique x with x * m = b for m with independent rows, or nullopt when b
// is outside the row space of m.
std::optional<std::vector<Rational>> solve_in_row_space(RatMatrix const& m,
                                                        std::span<Rational const> b);

// det(zI - m), monic of degree n.
RatPoly characteristic_polynomial(RatMatrix const& m);

// Least common multiple of all entry denominators.
Integer common_denominator(RatMatrix const& m);

}  // namespace qpflow
