#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cksplice/binary_matrix.hpp"
#include "cksplice/errors.hpp"
#include "cksplice/int_matrix.hpp"
#include "cksplice/polynomial.hpp"

namespace cksplice {

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("det: matrix must be square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees exact division.
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// det(1 - A).
inline Integer det_one_minus(const BinaryMatrix& a) { return det(one_minus(a)); }

/// The polynomial det(1 - zA), i.e. the reciprocal of the zeta function.
///
/// Evaluates det(1 - tA) at t = 0..N and recovers the degree-N polynomial by
/// Newton interpolation over the rationals. The result must come out integral.
inline Polynomial char_denominator(const BinaryMatrix& a) {
  const std::size_t n = a.size();
  const IntMatrix am = a.to_int_matrix();
  const IntMatrix id = IntMatrix::identity(n);

  std::vector<Rational> table;
  table.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    IntMatrix scaled = am;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= static_cast<long long>(t);
    }
    table.emplace_back(det(id - scaled));
  }

  // Divided differences on nodes 0, 1, ..., n; the spacing is 1 so the
  // k-th pass divides by k.
  std::vector<Rational> newton(n + 1);
  newton[0] = table[0];
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = n; i >= k; --i) {
      table[i] = (table[i] - table[i - 1]) / Rational(static_cast<long long>(k));
    }
    newton[k] = table[k];
  }

  // Horner expansion of sum_k newton[k] * prod_{j<k} (z - j).
  std::vector<Rational> coeffs{newton[n]};
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rational> next(coeffs.size() + 1);
    const Rational node(static_cast<long long>(k));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= node * coeffs[i];
    }
    next[0] += newton[k];
    coeffs = std::move(next);
  }

  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (const Rational& c : coeffs) {
    if (denominator(c) != 1) {
      throw std::logic_error("char_denominator: interpolation produced a non-integral coefficient");
    }
    out.push_back(numerator(c));
  }
  return Polynomial(std::move(out));
}

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... .
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  /// Diagonal entries greater than one.
  std::vector<Integer> invariant_factors;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    const std::size_t k = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
    return d;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const Integer& d : diagonal()) r += (d != 0);
    return r;
  }
};

namespace detail {

// Nonzero entry of minimal absolute value in the trailing submatrix starting
// at (t, t); ties go to the lowest (row, col) in row-major order.
inline std::optional<std::pair<std::size_t, std::size_t>> snf_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer mag = abs(d(i, j));
      if (!best || mag < best_abs) {
        best = {i, j};
        best_abs = std::move(mag);
      }
    }
  }
  return best;
}

}  // namespace detail

/// Smith normal form with transforms. Deterministic for a fixed input.
inline SnfDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    bool exhausted = false;
    for (;;) {
      auto pivot = detail::snf_pivot(d, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      auto [pr, pc] = *pivot;
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;

      // The pivot must divide everything left; otherwise fold the offending
      // row into row t and reduce again with a strictly smaller remainder.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < d.rows() && !offender; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) break;
      d.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SnfDecomposition out{std::move(u), std::move(v), std::move(d), {}};
  for (const Integer& x : out.diagonal()) {
    if (x > 1) out.invariant_factors.push_back(x);
  }
  return out;
}

/// trace(A^n) for n >= 1.
inline Integer mat_power_trace(const IntMatrix& a, std::uint64_t n) {
  if (!a.is_square()) throw DimensionError("mat_power_trace: matrix must be square");
  if (n == 0) throw std::invalid_argument("mat_power_trace: exponent must be positive");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  for (std::uint64_t e = n;;) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e == 0) break;
    base = base * base;
  }
  Integer tr = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) tr += result(i, i);
  return tr;
}

}  // namespace cksplice
