#include "qpflow/irreducible.hpp"

#include <cstdint>
#include <vector>

#include "qpflow/errors.hpp"

namespace qpflow {

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      Integer const e = n / d;
      if (e != d) large.push_back(e);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Values of p at a few small integers, used to prune candidate factors: a
// factor q must satisfy q(v) | p(v) whenever p(v) != 0.
struct Probe {
  std::int64_t at;
  Integer value;
};

class FactorSearch {
 public:
  explicit FactorSearch(IntPoly const& p) : p_(p) {
    Integer sum_sq = 0;
    for (auto const& c : p.coefficients()) sum_sq += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), sum_sq.get_mpz_t());
    norm_bound_ = root + 1;
    for (std::int64_t v : {1, -1, 2, -2}) {
      Integer const value = p.evaluate(Integer(v));
      if (value != 0) probes_.push_back({v, value});
    }
  }

  std::optional<std::pair<IntPoly, IntPoly>> run() {
    int const n = p_.degree();
    if (p_.coefficient(0) == 0) {
      IntPoly const z{Integer(0), Integer(1)};
      return std::make_pair(z, *divide_exact(p_, z));
    }
    auto const leads = positive_divisors(p_.leading());
    auto const consts = positive_divisors(p_.coefficient(0));
    for (int k = 1; k <= n / 2; ++k) {
      std::vector<Integer> bounds(static_cast<std::size_t>(k) + 1);
      for (int j = 0; j <= k; ++j) bounds[static_cast<std::size_t>(j)] = binomial(k, j) * norm_bound_;
      for (auto const& lead : leads) {
        for (auto const& c0 : consts) {
          for (int s : {1, -1}) {
            candidate_.assign(static_cast<std::size_t>(k) + 1, Integer(0));
            candidate_[0] = s * c0;
            candidate_[static_cast<std::size_t>(k)] = lead;
            if (auto hit = search_middle(1, k, bounds)) return hit;
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<std::pair<IntPoly, IntPoly>> search_middle(int j, int k,
                                                           std::vector<Integer> const& bounds) {
    if (j == k) return try_candidate();
    Integer const& b = bounds[static_cast<std::size_t>(j)];
    for (Integer c = -b; c <= b; ++c) {
      candidate_[static_cast<std::size_t>(j)] = c;
      if (auto hit = search_middle(j + 1, k, bounds)) return hit;
    }
    return std::nullopt;
  }

  std::optional<std::pair<IntPoly, IntPoly>> try_candidate() {
    for (auto const& probe : probes_) {
      Integer qv = 0;
      for (auto it = candidate_.rbegin(); it != candidate_.rend(); ++it) qv = qv * probe.at + *it;
      if (qv == 0 || !mpz_divisible_p(probe.value.get_mpz_t(), qv.get_mpz_t())) {
        return std::nullopt;
      }
    }
    IntPoly const q(candidate_);
    if (auto quotient = divide_exact(p_, q)) {
      return std::make_pair(q, std::move(*quotient));
    }
    return std::nullopt;
  }

  IntPoly const& p_;
  Integer norm_bound_;
  std::vector<Probe> probes_;
  std::vector<Integer> candidate_;
};

}  // namespace

std::optional<std::pair<IntPoly, IntPoly>> find_factor(IntPoly const& p) {
  if (p.degree() < 1) throw InvalidArgument("irreducibility of a constant polynomial");
  if (p.degree() > kMaxIrreducibilityDegree) {
    throw InvalidArgument("irreducibility test limited to degree <= 8");
  }
  return FactorSearch(p).run();
}

bool poly_irreducible(IntPoly const& p) {
  if (p.degree() >= 1 && content(p) != 1) {
    throw InvalidArgument("poly_irreducible expects a primitive polynomial");
  }
  return !find_factor(p).has_value();
}

}  // namespace qpflow
