#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcont/core.hpp"
#include "fcont/error.hpp"
#include "fcont/finite_diff.hpp"
#include "fcont/hermite.hpp"
#include "fcont/spectral.hpp"

namespace fcont {

/// Interpolating Fourier continuation approximant of samples f(j/n), j = 0..n.
struct FcApproximant {
  TrigCoefficients coefficients;
  ContinuationSpec spec{0};
  // accuracy order of the boundary stencils; empty when the boundary matrix was supplied
  std::optional<int> p;
  int n = 0;
  BoundaryDataMatrix boundary{0};
};

namespace detail {
inline int grid_half_size(std::span<const double> samples) {
  require(samples.size() >= 3, ErrorCode::insufficient_samples,
          "need n + 1 >= 3 samples, got " + std::to_string(samples.size()));
  return static_cast<int>(samples.size() - 1);
}
}  // namespace detail

/// Continues f_0..f_n to the 2n-point grid on [-1, 1), ordered j = -n..n-1:
/// entries j >= 0 are the samples, entries j < 0 are P_r(boundary)(j/n).
/// f_n is not stored; it reappears at j = -n when column 0 of `boundary` is exact.
inline std::vector<double> continue_samples(std::span<const double> samples, const BoundaryDataMatrix& boundary) {
  const int n = detail::grid_half_size(samples);
  const HermiteContinuation poly(boundary, hermite_basis(boundary.r()));
  std::vector<double> out(2 * static_cast<std::size_t>(n));
  for (int j = -n; j < 0; ++j)
    out[static_cast<std::size_t>(j + n)] = poly.value(static_cast<double>(j) / static_cast<double>(n));
  std::copy(samples.begin(), samples.end() - 1, out.begin() + n);
  return out;
}

inline std::vector<double> discrete_continuation(std::span<const double> samples, int r, int p,
                                                 double weight_perturbation = 0.0) {
  detail::grid_half_size(samples);
  ContinuationSpec spec(r);
  return continue_samples(samples, boundary_derivatives(samples, spec.r(), p, weight_perturbation));
}

/// Approximant from a caller-supplied boundary matrix (exact or perturbed).
inline FcApproximant fc_approximate_with_boundary(std::span<const double> samples,
                                                  const BoundaryDataMatrix& boundary) {
  FcApproximant approx;
  approx.spec = ContinuationSpec(boundary.r());
  approx.n = detail::grid_half_size(samples);
  approx.boundary = boundary;
  approx.coefficients = dft_forward(continue_samples(samples, boundary));
  return approx;
}

inline FcApproximant fc_approximate(std::span<const double> samples, int r, int p,
                                    double weight_perturbation = 0.0) {
  detail::grid_half_size(samples);
  ContinuationSpec spec(r);
  FcApproximant approx =
      fc_approximate_with_boundary(samples, boundary_derivatives(samples, spec.r(), p, weight_perturbation));
  approx.p = p;
  return approx;
}

inline double evaluate(const FcApproximant& approx, double x) {
  detail::require(x >= 0.0 && x <= 1.0, ErrorCode::domain_violation,
                  "approximant is evaluated on [0, 1], got x = " + std::to_string(x));
  return eval_series(approx.coefficients, x);
}

/// Values at z_j = j/N, j = 0..N.
inline std::vector<double> evaluate_dense(const FcApproximant& approx, int N) {
  detail::require(N >= approx.n, ErrorCode::undersampling,
                  "dense grid N = " + std::to_string(N) + " is coarser than n = " + std::to_string(approx.n));
  const std::vector<double> full = resample(approx.coefficients, N);
  std::vector<double> out(full.begin() + N, full.end());
  out.push_back(eval_series(approx.coefficients, 1.0));
  return out;
}

/// Piecewise polynomial f_c: `left` on [-1, 0], `right` on [0, 1], both as
/// ascending monomial coefficients in x.
struct PiecewisePolyContinuation {
  Monomials left;
  Monomials right;
};

/// f_c for a polynomial f on [0, 1] continued with P_r(boundary).
inline PiecewisePolyContinuation make_poly_continuation(Monomials right, const BoundaryDataMatrix& boundary) {
  const HermiteContinuation poly(boundary, hermite_basis(boundary.r()));
  return {poly.monomials(), std::move(right)};
}

namespace detail {

/// int_a^b p(x) e^{s x} dx for s != 0, by repeated integration by parts:
/// sum_j (-1)^j [p^(j)(x) e^{s x}]_a^b / s^{j+1}.
inline Complex poly_exp_integral(std::span<const double> p, double a, double b, Complex s) {
  const Complex ea = std::exp(s * a);
  const Complex eb = std::exp(s * b);
  Complex sum = 0.0;
  Complex s_power = s;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Monomials dj = differentiate(p, static_cast<int>(j));
    const Complex term = (horner(dj, b) * eb - horner(dj, a) * ea) / s_power;
    sum += (j % 2 == 0) ? term : -term;
    s_power *= s;
  }
  return sum;
}

inline double poly_integral(std::span<const double> p, double a, double b) {
  double sum = 0.0;
  double pa = a;
  double pb = b;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += p[i] * (pb - pa) / static_cast<double>(i + 1);
    pa *= a;
    pb *= b;
  }
  return sum;
}

}  // namespace detail

/// c_k(f_c) = (1/2) int_{-1}^{1} f_c(x) e^{-i pi k x} dx in closed form.
inline Complex continuous_coefficient_ppoly(const PiecewisePolyContinuation& fc, long k) {
  detail::require(std::labs(k) <= 1'000'000, ErrorCode::invalid_parameter, "|k| must not exceed 1e6");
  if (k == 0)
    return 0.5 * (detail::poly_integral(fc.left, -1.0, 0.0) + detail::poly_integral(fc.right, 0.0, 1.0));
  const Complex s(0.0, -std::numbers::pi * static_cast<double>(k));
  return 0.5 * (detail::poly_exp_integral(fc.left, -1.0, 0.0, s) + detail::poly_exp_integral(fc.right, 0.0, 1.0, s));
}

}  // namespace fcont
