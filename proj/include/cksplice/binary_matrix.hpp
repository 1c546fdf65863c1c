#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "cksplice/errors.hpp"
#include "cksplice/int_matrix.hpp"

namespace cksplice {

/// Square 0/1 transition matrix of a topological Markov shift.
class BinaryMatrix {
 public:
  explicit BinaryMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {
    if (n == 0) throw DimensionError("BinaryMatrix: size must be positive");
  }

  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) : BinaryMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw DimensionError("BinaryMatrix: matrix must be square");
      std::size_t j = 0;
      for (int v : row) set(i, j++, v);
      ++i;
    }
  }

  /// Accepts an integer matrix whose entries are all 0 or 1.
  static BinaryMatrix from_int_matrix(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("BinaryMatrix: matrix must be square");
    BinaryMatrix b(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Integer& v = m(i, j);
        if (v != 0 && v != 1) throw DimensionError("BinaryMatrix: entries must be 0 or 1");
        b.set(i, j, v == 1);
      }
    }
    return b;
  }

  std::size_t size() const noexcept { return n_; }

  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }

  void set(std::size_t i, std::size_t j, int value) {
    if (value != 0 && value != 1) throw DimensionError("BinaryMatrix: entries must be 0 or 1");
    bits_[i * n_ + j] = static_cast<std::uint8_t>(value);
  }

  std::size_t row_sum(std::size_t i) const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j);
    return s;
  }

  std::size_t col_sum(std::size_t j) const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, j);
    return s;
  }

  IntMatrix to_int_matrix() const {
    IntMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j) ? 1 : 0;
    }
    return m;
  }

  BinaryMatrix transposed() const {
    BinaryMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t.set(j, i, (*this)(i, j));
    }
    return t;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BinaryMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.n_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.n_; ++j) os << (j ? "," : "") << int(m(i, j));
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

/// 1 - A as an integer matrix.
inline IntMatrix one_minus(const BinaryMatrix& a) {
  return IntMatrix::identity(a.size()) - a.to_int_matrix();
}

}  // namespace cksplice
