#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace corz {

/// Power series in q truncated after q^degree, with coefficients of type T.
///
/// Only the operations needed for eta-quotient style products are provided:
/// multiplication and division by binomials (1 - q^m). Both run in place in
/// O(degree) and are exact for any ring T.
template <typename T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t degree, T constant = T(1)) : coeffs_(degree + 1, T(0)) {
    coeffs_[0] = constant;
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<T>& coefficients() const& { return coeffs_; }
  std::vector<T> coefficients() && { return std::move(coeffs_); }

  /// this *= (1 - q^m)
  TruncatedSeries& mul_one_minus(std::size_t m) {
    if (m == 0) throw std::invalid_argument("TruncatedSeries: (1 - q^0) is not allowed");
    for (std::size_t i = degree(); i >= m; --i) {
      coeffs_[i] -= coeffs_[i - m];
      if (i == m) break;
    }
    return *this;
  }

  /// this /= (1 - q^m), i.e. multiply by 1 + q^m + q^{2m} + ...
  TruncatedSeries& div_one_minus(std::size_t m) {
    if (m == 0) throw std::invalid_argument("TruncatedSeries: (1 - q^0) is not invertible");
    for (std::size_t i = m; i <= degree(); ++i) coeffs_[i] += coeffs_[i - m];
    return *this;
  }

 private:
  std::vector<T> coeffs_;
};

/// Coefficients of prod_{k>=1} (1 - q^{step*k})^power / (1 - q^k) up to q^degree.
/// step = 0 means the numerator is omitted (plain partition generating function).
template <typename T>
std::vector<T> eta_quotient_coefficients(std::size_t degree, std::size_t step, std::size_t power) {
  TruncatedSeries<T> s(degree);
  for (std::size_t k = 1; k <= degree; ++k) s.div_one_minus(k);
  if (step > 0) {
    for (std::size_t m = step; m <= degree; m += step)
      for (std::size_t e = 0; e < power; ++e) s.mul_one_minus(m);
  }
  return std::move(s).coefficients();
}

}  // namespace corz
