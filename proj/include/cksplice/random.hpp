#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "cksplice/binary_matrix.hpp"
#include "cksplice/dynamics.hpp"
#include "cksplice/errors.hpp"

namespace cksplice {

template <class Rng>
BinaryMatrix random_binary_matrix(std::size_t n, double density, Rng& rng) {
  std::bernoulli_distribution bit(density);
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, bit(rng));
  }
  return m;
}

/// Rejection-samples an irreducible non-permutation matrix of size n. For
/// n = 1 the only irreducible matrix is [1], a permutation matrix.
template <class Rng>
BinaryMatrix random_classifiable_matrix(std::size_t n, Rng& rng) {
  if (n < 2) throw DomainError("random_classifiable_matrix: size must be at least 2");
  std::uniform_real_distribution<double> density(0.3, 0.7);
  for (;;) {
    BinaryMatrix m = random_binary_matrix(n, density(rng), rng);
    if (is_irreducible(m) && !is_permutation_matrix(m)) return m;
  }
}

/// Uniform permutation of {1..n} as a 1-based image list.
template <class Rng>
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace cksplice
