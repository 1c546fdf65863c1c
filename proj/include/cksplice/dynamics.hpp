#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cksplice/binary_matrix.hpp"
#include "cksplice/exact_linalg.hpp"
#include "cksplice/int_matrix.hpp"
#include "cksplice/polynomial.hpp"

namespace cksplice {

/// Default truncation order for zeta consistency checks.
inline constexpr std::size_t kDefaultZetaOrder = 8;

/// Power series with exact rational coefficients, truncated after z^order.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

  /// 1 / p modulo z^{order+1}; p must have a nonzero constant term.
  static RationalSeries inverse_of(const Polynomial& p, std::size_t order) {
    if (p.coefficient(0) == 0) throw std::domain_error("series inverse: constant term is zero");
    RationalSeries q(order);
    const Rational c0(p.coefficient(0));
    q[0] = Rational(1) / c0;
    for (std::size_t n = 1; n <= order; ++n) {
      Rational acc = 0;
      for (std::size_t k = 1; k <= n; ++k) acc += Rational(p.coefficient(k)) * q[n - k];
      q[n] = -acc / c0;
    }
    return q;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// Strong connectivity of the graph with an edge i -> j whenever A(i, j) = 1.
/// Paths must have positive length, so a single vertex needs its loop.
inline bool is_irreducible(const BinaryMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a(0, 0);
  auto reaches_all = [&](bool reversed) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        const bool edge = reversed ? a(w, v) : a(v, w);
        if (edge && !seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(false) && reaches_all(true);
}

inline bool is_permutation_matrix(const BinaryMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.row_sum(i) != 1 || a.col_sum(i) != 1) return false;
  }
  return true;
}

/// Number of points of period n of the two-sided shift: trace(A^n).
inline Integer periodic_point_count(const BinaryMatrix& a, std::uint64_t n) {
  return mat_power_trace(a.to_int_matrix(), n);
}

/// exp(sum_{n>=1} p_n z^n / n) truncated after z^order.
///
/// With f = exp(g) we have f' = g' f, so n f_n = sum_{k=1}^{n} p_k f_{n-k}.
inline RationalSeries zeta_series(const BinaryMatrix& a, std::size_t order) {
  if (order == 0) throw std::invalid_argument("zeta_series: order must be positive");
  std::vector<Integer> p(order + 1);
  for (std::size_t k = 1; k <= order; ++k) p[k] = periodic_point_count(a, k);
  RationalSeries f(order);
  f[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(p[k]) * f[n - k];
    f[n] = acc / Rational(static_cast<long long>(n));
  }
  return f;
}

/// Whether the exponential series agrees with 1 / det(1 - zA) through z^order.
inline bool zeta_consistency(const BinaryMatrix& a, std::size_t order = kDefaultZetaOrder) {
  return zeta_series(a, order) == RationalSeries::inverse_of(char_denominator(a), order);
}

enum class ConjugacyEvidence { distinguished, inconclusive };

inline const char* to_string(ConjugacyEvidence e) {
  return e == ConjugacyEvidence::distinguished ? "distinguished" : "inconclusive";
}

/// Distinct zeta functions rule out topological conjugacy of the two-sided
/// shifts; equal ones prove nothing.
inline ConjugacyEvidence conjugacy_distinguisher(const BinaryMatrix& a, const BinaryMatrix& b) {
  return char_denominator(a) == char_denominator(b) ? ConjugacyEvidence::inconclusive
                                                    : ConjugacyEvidence::distinguished;
}

}  // namespace cksplice
