#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cksplice/errors.hpp"

namespace cksplice {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("IntMatrix: rows and cols must be positive");
    }
  }

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw DimensionError("IntMatrix: ragged initializer");
      }
      std::size_t c = 0;
      for (long long v : row) {
        (*this)(r, c++) = v;
      }
      ++r;
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap((*this)(a, c), (*this)(b, c));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      std::swap((*this)(r, a), (*this)(r, b));
    }
  }

  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      (*this)(dst, c) += factor * (*this)(src, c);
    }
  }

  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
      (*this)(r, dst) += factor * (*this)(r, src);
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      (*this)(r, c) = -(*this)(r, c);
    }
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("IntMatrix: product shape mismatch");
    }
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          p(i, j) += aik * b(k, j);
        }
      }
    }
    return p;
  }

  friend IntVector operator*(const IntMatrix& a, std::span<const Integer> x) {
    if (a.cols_ != x.size()) {
      throw DimensionError("IntMatrix: matrix-vector shape mismatch");
    }
    IntVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        y[i] += a(i, k) * x[k];
      }
    }
    return y;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw DimensionError("IntMatrix: difference shape mismatch");
    }
    IntMatrix d = a;
    for (std::size_t i = 0; i < d.data_.size(); ++i) {
      d.data_[i] -= b.data_[i];
    }
    return d;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) {
        os << (c ? "," : "") << m(r, c);
      }
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

inline IntVector to_int_vector(std::initializer_list<long long> values) {
  return IntVector(values.begin(), values.end());
}

}  // namespace cksplice
