#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "cksplice/int_matrix.hpp"

namespace cksplice {

/// Integer polynomial in z; coefficient i multiplies z^i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<long long> coefficients)
      : coeffs_(coefficients.begin(), coefficients.end()) {
    trim();
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  Integer evaluate(const Integer& z) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * z + *it;
    }
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << '0';
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      const Integer& c = p.coeffs_[i];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << 'z';
      if (i >= 2) os << '^' << i;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

}  // namespace cksplice
