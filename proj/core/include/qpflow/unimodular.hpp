#pragma once

#include <optional>

#include "qpflow/matrix.hpp"

namespace qpflow {

// A square integer matrix with determinant +-1, i.e. an element of GL(n, Z).
class UnimodularMatrix {
 public:
  // nullopt unless m is square with determinant +-1.
  static std::optional<UnimodularMatrix> make(IntMatrix m);
  static UnimodularMatrix identity(std::size_t n);

  IntMatrix const& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  int determinant() const { return det_; }
  Integer const& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  UnimodularMatrix inverse() const;

  friend bool operator==(UnimodularMatrix const&, UnimodularMatrix const&) = default;
  friend UnimodularMatrix operator*(UnimodularMatrix const& a, UnimodularMatrix const& b);
  friend UnimodularMatrix operator-(UnimodularMatrix const& a);

 private:
  UnimodularMatrix(IntMatrix m, int det) : m_(std::move(m)), det_(det) {}

  IntMatrix m_;
  int det_ = 1;
};

}  // namespace qpflow
