#include "qpflow/hnf.hpp"

#include <utility>

namespace qpflow {

namespace {

void subtract_multiple(IntVector& target, IntVector const& source, Integer const& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

Integer floor_div(Integer const& a, Integer const& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix hnf(std::vector<IntVector> const& input) {
  if (input.empty()) throw InvalidArgument("hnf of an empty row set");
  std::size_t const cols = input.front().size();
  for (auto const& r : input) {
    if (r.size() != cols) throw InvalidArgument("hnf rows differ in length");
  }
  std::vector<IntVector> a = input;
  std::size_t const m = a.size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m; ++col) {
    // Euclid on column `col` over rows [row, m).
    while (true) {
      std::size_t pivot = m;
      std::size_t nonzero = 0;
      for (std::size_t i = row; i < m; ++i) {
        if (a[i][col] == 0) continue;
        ++nonzero;
        if (pivot == m || abs(a[i][col]) < abs(a[pivot][col])) pivot = i;
      }
      if (nonzero == 0) break;
      std::swap(a[row], a[pivot]);
      if (nonzero == 1) break;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        Integer const q = floor_div(a[i][col], a[row][col]);
        subtract_multiple(a[i], a[row], q);
      }
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0) {
      for (auto& e : a[row]) e = -e;
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer const q = floor_div(a[i][col], a[row][col]);
      subtract_multiple(a[i], a[row], q);
    }
    ++row;
  }
  a.resize(row);
  if (a.empty()) return IntMatrix(0, cols);
  return IntMatrix::from_rows(a);
}

IntMatrix hnf(IntMatrix const& m) { return hnf(m.to_rows()); }

bool hnf_contains(IntMatrix const& h, IntVector v) {
  if (v.size() != h.cols()) throw InvalidArgument("vector length does not match lattice");
  std::size_t col = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    while (col < h.cols() && h(r, col) == 0) {
      if (v[col] != 0) return false;
      ++col;
    }
    if (col == h.cols()) break;
    if (!mpz_divisible_p(v[col].get_mpz_t(), h(r, col).get_mpz_t())) return false;
    Integer const q = v[col] / h(r, col);
    for (std::size_t j = col; j < h.cols(); ++j) v[j] -= q * h(r, j);
    ++col;
  }
  for (auto const& e : v) {
    if (e != 0) return false;
  }
  return true;
}

}  // namespace qpflow
