#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fcont/error.hpp"

namespace fcont {

__extension__ typedef __int128 int128;

/// Largest supported continuation order. Beyond this the expanded Hermite
/// coefficients lose too much accuracy in double precision.
inline constexpr int kMaxOrder = 30;

/// Largest binomial row kept exact, enough for C(2r+2, r) at r = kMaxOrder.
inline constexpr int kMaxBinomialRow = 2 * kMaxOrder + 2;

/// Exact binomial coefficient C(i, j) for 0 <= j <= i <= kMaxBinomialRow.
inline int128 binomial(int i, int j) {
  detail::require(i >= 0 && j >= 0 && j <= i && i <= kMaxBinomialRow,
                  ErrorCode::invalid_parameter,
                  "binomial(" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  j = std::min(j, i - j);
  int128 result = 1;
  // result * (i - k) is divisible by (k + 1) at every step
  for (int k = 0; k < j; ++k) result = result * (i - k) / (k + 1);
  return result;
}

/// Checks sum_{k=0}^{n} (-1)^k C(r+1,k) C(r+n-k, r) == 0 exactly.
inline bool verify_binomial_identity(int r, int n) {
  detail::require(r >= 0 && n >= 1 && n <= r + 1 && r + n <= kMaxBinomialRow,
                  ErrorCode::invalid_parameter, "binomial identity needs 1 <= n <= r+1");
  int128 sum = 0;
  for (int k = 0; k <= n; ++k) {
    const int128 term = binomial(r + 1, k) * binomial(r + n - k, r);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum == 0;
}

inline int128 factorial(int m) {
  detail::require(m >= 0 && m <= kMaxBinomialRow, ErrorCode::invalid_parameter,
                  "factorial argument out of range");
  int128 result = 1;
  for (int k = 2; k <= m; ++k) result *= k;
  return result;
}

/// Smoothness order r and extension width b of a continuation. Only b = 2 is built.
class ContinuationSpec {
 public:
  explicit ContinuationSpec(int r, double b = 2.0) : r_(r), b_(b) {
    detail::require(r >= 0, ErrorCode::invalid_parameter, "order r must be non-negative");
    detail::require(r <= kMaxOrder, ErrorCode::unsupported_order,
                    "order r = " + std::to_string(r) + " exceeds " + std::to_string(kMaxOrder));
    detail::require(b == 2.0, ErrorCode::invalid_parameter, "only extension width b = 2 is supported");
  }

  int r() const noexcept { return r_; }
  double b() const noexcept { return b_; }

 private:
  int r_;
  double b_;
};

/// The 2 x (r+1) matrix of endpoint derivative values. Row 0 holds f^(m)(0),
/// row 1 holds f^(m)(1).
class BoundaryDataMatrix {
 public:
  explicit BoundaryDataMatrix(int r) : r_(r), entries_(2 * static_cast<std::size_t>(r + 1), 0.0) {
    detail::require(r >= 0, ErrorCode::invalid_parameter, "order r must be non-negative");
  }

  BoundaryDataMatrix(std::initializer_list<double> left, std::initializer_list<double> right)
      : BoundaryDataMatrix(static_cast<int>(left.size()) - 1) {
    detail::require(left.size() == right.size() && left.size() > 0, ErrorCode::invalid_parameter,
                    "boundary rows must have equal, non-zero length");
    std::copy(left.begin(), left.end(), entries_.begin());
    std::copy(right.begin(), right.end(), entries_.begin() + r_ + 1);
    check_finite();
  }

  int r() const noexcept { return r_; }
  int columns() const noexcept { return r_ + 1; }

  double operator()(int row, int m) const { return entries_[index(row, m)]; }
  double& operator()(int row, int m) { return entries_[index(row, m)]; }

  double max_norm() const {
    double norm = 0.0;
    for (double v : entries_) norm = std::max(norm, std::abs(v));
    return norm;
  }

  void check_finite() const {
    for (double v : entries_)
      detail::require(std::isfinite(v), ErrorCode::invalid_parameter,
                      "boundary data matrix has a non-finite entry");
  }

  BoundaryDataMatrix& operator+=(const BoundaryDataMatrix& other) {
    detail::require(other.r_ == r_, ErrorCode::order_mismatch, "matrix orders differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }

  BoundaryDataMatrix& operator-=(const BoundaryDataMatrix& other) {
    detail::require(other.r_ == r_, ErrorCode::order_mismatch, "matrix orders differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
  }

  BoundaryDataMatrix& operator*=(double alpha) {
    for (double& v : entries_) v *= alpha;
    return *this;
  }

  friend BoundaryDataMatrix operator+(BoundaryDataMatrix a, const BoundaryDataMatrix& b) { return a += b; }
  friend BoundaryDataMatrix operator-(BoundaryDataMatrix a, const BoundaryDataMatrix& b) { return a -= b; }
  friend BoundaryDataMatrix operator*(double alpha, BoundaryDataMatrix a) { return a *= alpha; }
  friend bool operator==(const BoundaryDataMatrix&, const BoundaryDataMatrix&) = default;

 private:
  std::size_t index(int row, int m) const {
    detail::require((row == 0 || row == 1) && m >= 0 && m <= r_, ErrorCode::invalid_parameter,
                    "boundary matrix index out of range");
    return static_cast<std::size_t>(row * (r_ + 1) + m);
  }

  int r_;
  std::vector<double> entries_;
};

/// Upper bound 2 C(2r+2, r) on the induced norm of the Hermite continuation operator.
inline double operator_norm_bound(int r) {
  detail::require(r >= 0, ErrorCode::invalid_parameter, "order r must be non-negative");
  detail::require(r <= kMaxOrder, ErrorCode::unsupported_order, "order exceeds kMaxOrder");
  return 2.0 * static_cast<double>(binomial(2 * r + 2, r));
}

/// Largest s such that columns 0..s of `approx` match `exact` within `tol`;
/// -1 when column 0 already differs, r when the matrices agree entirely.
inline int s_exactness(const BoundaryDataMatrix& approx, const BoundaryDataMatrix& exact, double tol) {
  detail::require(approx.r() == exact.r(), ErrorCode::order_mismatch, "matrix orders differ");
  for (int m = 0; m <= approx.r(); ++m) {
    for (int row = 0; row < 2; ++row) {
      if (!(std::abs(approx(row, m) - exact(row, m)) <= tol)) return m - 1;
    }
  }
  return approx.r();
}

}  // namespace fcont
