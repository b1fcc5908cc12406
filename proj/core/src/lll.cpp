#include "qpflow/lll.hpp"

#include <utility>

namespace qpflow {

namespace {

Integer dot(IntVector const& a, IntVector const& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// State for Cohen, Algorithm 2.6.7.  Indices are 1-based to follow the
// classical presentation; d[0] = 1.
class IntegralLll {
 public:
  explicit IntegralLll(std::vector<IntVector> basis)
      : n_(basis.size()),
        b_(std::move(basis)),
        d_(n_ + 1, Integer(0)),
        lambda_(n_ + 1, std::vector<Integer>(n_ + 1, Integer(0))) {}

  std::vector<IntVector> run() {
    if (n_ == 0) return b_;
    d_[0] = 1;
    d_[1] = dot(b(1), b(1));
    if (d_[1] == 0) throw InvalidArgument("lll_reduce: dependent rows");
    std::size_t k = 2;
    std::size_t kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        gram_schmidt_row(k);
      }
      while (true) {
        reduce(k, k - 1);
        // Lovasz test with delta = 3/4, scaled by 4 to stay integral.
        Integer const lhs = 4 * d_[k] * d_[k - 2];
        Integer const rhs = 3 * d_[k - 1] * d_[k - 1] - 4 * lambda_[k][k - 1] * lambda_[k][k - 1];
        if (lhs < rhs) {
          swap(k, kmax);
          if (k > 2) --k;
          continue;
        }
        for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
        ++k;
        break;
      }
    }
    return b_;
  }

 private:
  IntVector& b(std::size_t i) { return b_[i - 1]; }

  void gram_schmidt_row(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      Integer u = dot(b(k), b(j));
      for (std::size_t i = 1; i < j; ++i) {
        u = (d_[i] * u - lambda_[k][i] * lambda_[j][i]) / d_[i - 1];
      }
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        d_[k] = u;
        if (u == 0) throw InvalidArgument("lll_reduce: dependent rows");
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    if (abs(2 * lambda_[k][l]) <= d_[l]) return;
    // q = nearest integer to lambda / d
    Integer q;
    Integer const num = 2 * lambda_[k][l] + d_[l];
    Integer const den = 2 * d_[l];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    IntVector& bk = b(k);
    IntVector const& bl = b(l);
    for (std::size_t c = 0; c < bk.size(); ++c) bk[c] -= q * bl[c];
    lambda_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(b(k), b(k - 1));
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    Integer const lambda = lambda_[k][k - 1];
    Integer const big_b = (d_[k - 2] * d_[k] + lambda * lambda) / d_[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer const t = lambda_[i][k];
      lambda_[i][k] = (d_[k] * lambda_[i][k - 1] - lambda * t) / d_[k - 1];
      lambda_[i][k - 1] = (big_b * t + lambda * lambda_[i][k]) / d_[k];
    }
    d_[k - 1] = big_b;
  }

  std::size_t n_;
  std::vector<IntVector> b_;
  std::vector<Integer> d_;
  std::vector<std::vector<Integer>> lambda_;
};

}  // namespace

std::vector<IntVector> lll_reduce(std::vector<IntVector> basis) {
  if (!basis.empty()) {
    std::size_t const dim = basis.front().size();
    for (auto const& v : basis) {
      if (v.size() != dim) throw InvalidArgument("lll_reduce: rows differ in length");
    }
    if (basis.size() > dim) throw InvalidArgument("lll_reduce: dependent rows");
  }
  return IntegralLll(std::move(basis)).run();
}

}  // namespace qpflow
