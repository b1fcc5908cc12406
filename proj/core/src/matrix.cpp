#include "qpflow/matrix.hpp"

#include <utility>

namespace qpflow {

RatMatrix to_rational(IntMatrix const& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::optional<IntMatrix> to_integer(RatMatrix const& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Integer integer_det(IntMatrix const& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  std::size_t const n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer const v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = v / prev;  // exact by Sylvester's identity
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Gaussian elimination to row echelon form; returns rank and sign of the
// permutation applied.
std::pair<std::size_t, int> eliminate(RatMatrix& a) {
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational const f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return {r, sign};
}

}  // namespace

Rational det(RatMatrix const& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  RatMatrix a = m;
  auto const [r, sign] = eliminate(a);
  if (r < a.rows()) return 0;
  Rational d = sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

std::size_t rank(RatMatrix const& m) {
  RatMatrix a = m;
  return eliminate(a).first;
}

std::optional<RatMatrix> inverse(RatMatrix const& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  std::size_t const n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    Rational const pivot_inv = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= pivot_inv;
      inv(c, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational const f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> solve_left(RatMatrix const& m, std::span<Rational const> b) {
  auto const inv = inverse(m);
  if (!inv) throw InvalidArgument("singular system");
  if (b.size() != m.rows()) throw InvalidArgument("right-hand side has wrong length");
  std::vector<Rational> x(m.rows(), Rational(0));
  for (std::size_t k = 0; k < m.rows(); ++k)
    for (std::size_t j = 0; j < m.cols(); ++j) x[j] += b[k] * (*inv)(k, j);
  return x;
}

std::optional<std::vector<Rational>> solve_in_row_space(RatMatrix const& m,
                                                        std::span<Rational const> b) {
  if (b.size() != m.cols()) throw InvalidArgument("right-hand side has wrong length");
  std::size_t const unknowns = m.rows();
  // Augmented system m^T x = b^T.
  RatMatrix a(m.cols(), unknowns + 1);
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) a(i, j) = m(j, i);
    a(i, unknowns) = b[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < unknowns && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j <= unknowns; ++j) std::swap(a(p, j), a(r, j));
    Rational const inv = 1 / a(r, c);
    for (std::size_t j = 0; j <= unknowns; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational const f = a(i, c);
      for (std::size_t j = 0; j <= unknowns; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < unknowns) throw InvalidArgument("rows are linearly dependent");
  for (std::size_t i = r; i < a.rows(); ++i) {
    if (a(i, unknowns) != 0) return std::nullopt;
  }
  std::vector<Rational> x(unknowns);
  for (std::size_t k = 0; k < r; ++k) x[pivots[k]] = a(k, unknowns);
  return x;
}

RatPoly characteristic_polynomial(RatMatrix const& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  if (!m.is_square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  std::size_t const n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    RatMatrix const am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return RatPoly(std::move(c));
}

Integer common_denominator(RatMatrix const& m) {
  Integer d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto const& q : m.row(i)) {
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    }
  return d;
}

}  // namespace qpflow

#include "qpflow/unimodular.hpp"

namespace qpflow {

std::optional<UnimodularMatrix> UnimodularMatrix::make(IntMatrix m) {
  if (!m.is_square() || m.rows() == 0) return std::nullopt;
  Integer const d = integer_det(m);
  if (d != 1 && d != -1) return std::nullopt;
  return UnimodularMatrix(std::move(m), d == 1 ? 1 : -1);
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) {
  return UnimodularMatrix(IntMatrix::identity(n), 1);
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  auto const inv = qpflow::inverse(to_rational(m_));
  // The adjugate is integral and det = +-1, so the inverse is integral.
  return UnimodularMatrix(*to_integer(*inv), det_);
}

UnimodularMatrix operator*(UnimodularMatrix const& a, UnimodularMatrix const& b) {
  return UnimodularMatrix(a.m_ * b.m_, a.det_ * b.det_);
}

UnimodularMatrix operator-(UnimodularMatrix const& a) {
  int const sign = a.size() % 2 == 0 ? 1 : -1;
  return UnimodularMatrix(-a.m_, a.det_ * sign);
}

}  // namespace qpflow
