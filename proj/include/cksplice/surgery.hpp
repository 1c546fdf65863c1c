#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cksplice/abelian.hpp"
#include "cksplice/binary_matrix.hpp"
#include "cksplice/errors.hpp"
#include "cksplice/int_matrix.hpp"

// Matrix surgery on 0/1 transition matrices. Throughout, vertex N is the last
// vertex of the input; the gadgets are attached there.

namespace cksplice {

namespace detail {

inline void copy_block(const BinaryMatrix& src, BinaryMatrix& dst, std::size_t rows) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) dst.set(i, j, src(i, j));
  }
}

}  // namespace detail

/// The Cuntz splice A_-: a size N+2 matrix that keeps A, adds the edge
/// N -> N+1, and appends rows (0..0,1,1,1) and (0..0,0,1,1).
inline BinaryMatrix cuntz_splice(const BinaryMatrix& a) {
  const std::size_t n = a.size();
  BinaryMatrix s(n + 2);
  detail::copy_block(a, s, n);
  s.set(n - 1, n, 1);
  s.set(n, n - 1, 1);
  s.set(n, n, 1);
  s.set(n, n + 1, 1);
  s.set(n + 1, n, 1);
  s.set(n + 1, n + 1, 1);
  return s;
}

/// The Parry-Sullivan expansion A°: vertex N is routed through a new vertex
/// N+1, which inherits the old outgoing edges of N.
inline BinaryMatrix ps_expansion(const BinaryMatrix& a) {
  const std::size_t n = a.size();
  BinaryMatrix e(n + 1);
  detail::copy_block(a, e, n - 1);
  e.set(n - 1, n, 1);
  for (std::size_t j = 0; j < n; ++j) e.set(n, j, a(n - 1, j));
  return e;
}

/// The bar construction, written out block by block (size N+3). Equals
/// cuntz_splice(ps_expansion(a)).
inline BinaryMatrix bar_construction(const BinaryMatrix& a) {
  const std::size_t n = a.size();
  BinaryMatrix b(n + 3);
  detail::copy_block(a, b, n - 1);
  b.set(n - 1, n, 1);
  for (std::size_t j = 0; j < n; ++j) b.set(n, j, a(n - 1, j));
  b.set(n, n + 1, 1);
  b.set(n + 1, n, 1);
  b.set(n + 1, n + 1, 1);
  b.set(n + 1, n + 2, 1);
  b.set(n + 2, n + 1, 1);
  b.set(n + 2, n + 2, 1);
  return b;
}

/// The tilde construction: the bar matrix with entry (N+2, N+2) cleared.
inline BinaryMatrix tilde_construction(const BinaryMatrix& a) {
  const std::size_t n = a.size();
  BinaryMatrix t(n + 3);
  detail::copy_block(a, t, n - 1);
  t.set(n - 1, n, 1);
  for (std::size_t j = 0; j < n; ++j) t.set(n, j, a(n - 1, j));
  t.set(n, n + 1, 1);
  t.set(n + 1, n, 1);
  t.set(n + 1, n + 2, 1);
  t.set(n + 2, n + 1, 1);
  t.set(n + 2, n + 2, 1);
  return t;
}

/// Replaces row N+2 of a bar matrix, which equals E_{N+1} + row N+3, by
/// E_{N+1} + E_{N+3}. Only this one instance of a primitive transfer is
/// supported; `n` is the size of the matrix the bar matrix was built from.
inline BinaryMatrix primitive_transfer_bar_to_tilde(const BinaryMatrix& bar, std::size_t n) {
  if (n == 0 || bar.size() != n + 3) {
    throw StructuralError("primitive transfer: expected a matrix of size N+3");
  }
  // 0-based: rows n, n+1, n+2 are rows N+1, N+2, N+3.
  const std::size_t r_mid = n + 1;
  const std::size_t r_last = n + 2;
  for (std::size_t j = 0; j < bar.size(); ++j) {
    const int expected = (j == n ? 1 : 0) + (bar(r_last, j) ? 1 : 0);
    if ((bar(r_mid, j) ? 1 : 0) != expected) {
      throw StructuralError("primitive transfer: row N+2 is not E_{N+1} plus row N+3; input is not a bar matrix");
    }
  }
  BinaryMatrix out = bar;
  for (std::size_t j = 0; j < bar.size(); ++j) out.set(r_mid, j, (j == n || j == r_last) ? 1 : 0);
  return out;
}

/// Validates a 1-based image list as a permutation of {1..n}; returns it 0-based.
inline std::vector<std::size_t> checked_permutation(std::span<const std::size_t> one_based, std::size_t n) {
  if (one_based.size() != n) throw DimensionError("permutation length does not match matrix size");
  std::vector<std::size_t> perm(n);
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = one_based[i];
    if (v < 1 || v > n || seen[v - 1]) throw std::invalid_argument("invalid permutation");
    seen[v - 1] = 1;
    perm[i] = v - 1;
  }
  return perm;
}

/// P A P^{-1} where P e_j = e_{perm(j)}; `perm` is a 1-based image list.
/// Equivalently, entry (perm(i), perm(j)) of the result is A(i, j).
inline BinaryMatrix permutation_conjugate(const BinaryMatrix& a, std::span<const std::size_t> perm) {
  const auto p = checked_permutation(perm, a.size());
  BinaryMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c.set(p[i], p[j], a(i, j));
  }
  return c;
}

/// (x_1, ..., x_{N-1}, x_N, x_{N+1}) -> (x_1, ..., x_{N-1}, x_N + x_{N+1}).
inline IntVector eta_map(std::span<const Integer> x) {
  if (x.size() < 2) throw DimensionError("eta_map: expected a vector of length N+1 with N >= 1");
  IntVector y(x.begin(), x.end() - 1);
  y.back() += x.back();
  return y;
}

/// (x_1, ..., x_N) -> (x_1, ..., x_N, 0, 0).
inline IntVector xi_map(std::span<const Integer> x) {
  if (x.empty()) throw DimensionError("xi_map: expected a nonempty vector");
  IntVector y(x.begin(), x.end());
  y.resize(x.size() + 2, Integer(0));
  return y;
}

/// A representative in Z^{N+3} of Phi([v]) for the isomorphism
/// G(A) -> G(bar A): lift along eta by appending 0, then apply xi.
inline IntVector phi_representative(std::span<const Integer> v) {
  IntVector lifted(v.begin(), v.end());
  lifted.push_back(0);
  return xi_map(lifted);
}

/// G(A) = Z^N / (1 - A^t) Z^N.
inline FgAbelianGroup g_group(const BinaryMatrix& a) { return cokernel_group(one_minus(a.transposed())); }

/// Whether xi((1, ..., 1, 0)) and the all-ones vector have the same class in G(bar A).
inline bool phi_check(const BinaryMatrix& a) {
  const std::size_t n = a.size();
  const BinaryMatrix bar = bar_construction(a);
  const FgAbelianGroup g = g_group(bar);
  IntVector expanded_unit(n + 1, Integer(1));
  expanded_unit.back() = 0;
  const IntVector image = xi_map(expanded_unit);
  const IntVector ones(n + 3, Integer(1));
  return project_element(g, image) == project_element(g, ones);
}

}  // namespace cksplice
