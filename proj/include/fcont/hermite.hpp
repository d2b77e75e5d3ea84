#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fcont/core.hpp"
#include "fcont/error.hpp"

namespace fcont {

/// Polynomial stored as ascending monomial coefficients.
using Monomials = std::vector<double>;

inline double horner(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

/// Coefficients of the ell-th derivative.
inline Monomials differentiate(std::span<const double> coeffs, int ell) {
  if (ell < 0) throw Error(ErrorCode::invalid_parameter, "negative derivative order");
  if (static_cast<std::size_t>(ell) >= coeffs.size()) return {0.0};
  Monomials out(coeffs.size() - static_cast<std::size_t>(ell));
  for (std::size_t i = 0; i < out.size(); ++i) {
    double falling = 1.0;
    for (std::size_t k = i + 1; k <= i + static_cast<std::size_t>(ell); ++k) falling *= static_cast<double>(k);
    out[i] = coeffs[i + static_cast<std::size_t>(ell)] * falling;
  }
  return out;
}

/// Monomial coefficients of the 2r+2 two-point Hermite basis polynomials on
/// [-1, 0]. P_m^0 carries the m-th derivative at x = 0, P_m^1 the m-th
/// derivative at x = -1.
struct HermiteBasisSet {
  int r = 0;
  // numerators0[m][i] / m! is the x^i coefficient of P_m^0
  std::vector<std::vector<int128>> numerators0;
  std::vector<std::vector<int128>> numerators1;
  std::vector<Monomials> basis0;
  std::vector<Monomials> basis1;
  // binomials[i][j] = C(i, j), i <= 2r+2
  std::vector<std::vector<int128>> binomials;

  std::size_t degree() const noexcept { return static_cast<std::size_t>(2 * r + 1); }
};

namespace detail {

inline std::vector<int128> multiply(const std::vector<int128>& a, const std::vector<int128>& b) {
  std::vector<int128> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<int128> binomial_power(int k) {
  std::vector<int128> out(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) out[static_cast<std::size_t>(i)] = binomial(k, i);
  return out;
}

inline Monomials to_floating(const std::vector<int128>& numerators, int128 denominator) {
  Monomials out(numerators.size());
  const auto den = static_cast<long double>(denominator);
  for (std::size_t i = 0; i < numerators.size(); ++i)
    out[i] = static_cast<double>(static_cast<long double>(numerators[i]) / den);
  return out;
}

}  // namespace detail

/// Expands the Hermite basis in exact integers; the 1/m! scaling is applied
/// once when converting to double.
inline HermiteBasisSet hermite_basis(int r) {
  detail::require(r >= 0, ErrorCode::invalid_parameter, "order r must be non-negative");
  detail::require(r <= kMaxOrder, ErrorCode::unsupported_order,
                  "order r = " + std::to_string(r) + " exceeds " + std::to_string(kMaxOrder));
  HermiteBasisSet set;
  set.r = r;
  const auto terms = static_cast<std::size_t>(2 * r + 2);

  set.binomials.resize(terms + 1);
  for (int i = 0; i <= 2 * r + 2; ++i) set.binomials[static_cast<std::size_t>(i)] = detail::binomial_power(i);

  const std::vector<int128> one_plus_x_pow = detail::binomial_power(r + 1);
  for (int m = 0; m <= r; ++m) {
    // x^m (1+x)^{r+1} sum_n (-x)^n C(r+n, n)
    std::vector<int128> tail(static_cast<std::size_t>(r + 1), 0);
    for (int n = 0; n <= r - m; ++n) {
      const int128 c = binomial(r + n, n);
      tail[static_cast<std::size_t>(m + n)] = (n % 2 == 0) ? c : -c;
    }
    std::vector<int128> p0 = detail::multiply(one_plus_x_pow, tail);
    p0.resize(terms, 0);

    // (-x)^{r+1} sum_n C(r+n, n) (1+x)^{m+n}
    std::vector<int128> inner(static_cast<std::size_t>(r + 1), 0);
    for (int n = 0; n <= r - m; ++n) {
      const int128 c = binomial(r + n, n);
      for (int i = 0; i <= m + n; ++i) inner[static_cast<std::size_t>(i)] += c * binomial(m + n, i);
    }
    std::vector<int128> p1(terms, 0);
    const int128 sign = (r % 2 == 0) ? -1 : 1;
    for (std::size_t i = 0; i < inner.size(); ++i) p1[i + static_cast<std::size_t>(r + 1)] = sign * inner[i];

    const int128 denom = factorial(m);
    set.basis0.push_back(detail::to_floating(p0, denom));
    set.basis1.push_back(detail::to_floating(p1, denom));
    set.numerators0.push_back(std::move(p0));
    set.numerators1.push_back(std::move(p1));
  }
  return set;
}

/// The continuation polynomial P_r(F) on [-1, 0] for a fixed boundary matrix.
///
/// Values use the factored form (1+x)^{r+1} Q0(x) + (-x)^{r+1} Q1(1+x), whose
/// factor polynomials have sign-definite terms on [-1, 0]. Derivatives use the
/// expanded basis, centred at 0 for x >= -1/2 and at -1 otherwise.
class HermiteContinuation {
 public:
  HermiteContinuation(const BoundaryDataMatrix& data, const HermiteBasisSet& basis) : r_(basis.r) {
    detail::require(data.r() == basis.r, ErrorCode::order_mismatch,
                    "boundary matrix order " + std::to_string(data.r()) + " does not match basis order " +
                        std::to_string(basis.r));
    data.check_finite();
    const auto cols = static_cast<std::size_t>(r_ + 1);
    const auto terms = basis.degree() + 1;

    std::vector<double> inv_factorial(cols);
    for (int m = 0; m <= r_; ++m)
      inv_factorial[static_cast<std::size_t>(m)] =
          static_cast<double>(1.0L / static_cast<long double>(factorial(m)));

    left_factor_.assign(cols, 0.0);
    right_factor_.assign(cols, 0.0);
    for (int i = 0; i <= r_; ++i) {
      for (int m = 0; m <= i; ++m) {
        const auto c = static_cast<double>(basis.binomials[static_cast<std::size_t>(r_ + i - m)]
                                                          [static_cast<std::size_t>(i - m)]);
        const double w = c * inv_factorial[static_cast<std::size_t>(m)];
        left_factor_[static_cast<std::size_t>(i)] += ((i - m) % 2 == 0 ? w : -w) * data(0, m);
        right_factor_[static_cast<std::size_t>(i)] += w * data(1, m);
      }
    }

    about_zero_.assign(terms, 0.0);
    about_minus_one_.assign(terms, 0.0);
    for (int m = 0; m <= r_; ++m) {
      const auto& b0 = basis.basis0[static_cast<std::size_t>(m)];
      const auto& b1 = basis.basis1[static_cast<std::size_t>(m)];
      for (std::size_t i = 0; i < terms; ++i) {
        about_zero_[i] += data(0, m) * b0[i] + data(1, m) * b1[i];
        // P_m^0(x) = (-1)^m P_m^1(-1-x) and vice versa
        const double sign = ((static_cast<std::size_t>(m) + i) % 2 == 0) ? 1.0 : -1.0;
        about_minus_one_[i] += sign * (data(0, m) * b1[i] + data(1, m) * b0[i]);
      }
    }
  }

  int r() const noexcept { return r_; }

  double value(double x) const {
    check_domain(x);
    const double t = 1.0 + x;
    const double mx = -x;
    double pow_t = 1.0;
    double pow_mx = 1.0;
    for (int i = 0; i <= r_; ++i) {
      pow_t *= t;
      pow_mx *= mx;
    }
    return pow_t * horner(left_factor_, x) + pow_mx * horner(right_factor_, t);
  }

  double derivative(int ell, double x) const {
    check_domain(x);
    detail::require(ell >= 0 && ell <= 2 * r_ + 1, ErrorCode::invalid_parameter,
                    "derivative order must lie in [0, 2r+1]");
    if (x >= -0.5) return horner(differentiate(about_zero_, ell), x);
    return horner(differentiate(about_minus_one_, ell), 1.0 + x);
  }

  /// Expanded monomial coefficients of P_r(F) in powers of x.
  const Monomials& monomials() const noexcept { return about_zero_; }

 private:
  static void check_domain(double x) {
    detail::require(x >= -1.0 && x <= 0.0, ErrorCode::domain_violation,
                    "continuation is defined on [-1, 0], got x = " + std::to_string(x));
  }

  int r_;
  Monomials left_factor_;
  Monomials right_factor_;
  Monomials about_zero_;
  Monomials about_minus_one_;
};

inline double eval_continuation(const BoundaryDataMatrix& data, const HermiteBasisSet& basis, double x) {
  return HermiteContinuation(data, basis).value(x);
}

inline double eval_continuation_derivative(const BoundaryDataMatrix& data, const HermiteBasisSet& basis,
                                           int ell, double x) {
  return HermiteContinuation(data, basis).derivative(ell, x);
}

}  // namespace fcont
