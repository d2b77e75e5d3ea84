#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fcont/core.hpp"
#include "fcont/error.hpp"

namespace fcont {

using Rational = boost::multiprecision::cpp_rational;

enum class StencilSide { forward, backward };

/// Derivative order m, accuracy order p and direction of a one-sided stencil.
struct StencilSpec {
  int m = 1;
  int p = 1;
  StencilSide side = StencilSide::forward;

  static constexpr int kMaxLength = 64;

  int length() const noexcept { return m + p; }

  void validate() const {
    detail::require(m >= 1 && p >= 1 && m + p <= kMaxLength, ErrorCode::unsupported_stencil,
                    "stencil needs m >= 1, p >= 1 and m + p <= " + std::to_string(kMaxLength) +
                        " (got m = " + std::to_string(m) + ", p = " + std::to_string(p) + ")");
  }
};

/// Weights w_k, k = 0..m+p-1, with sum_k w_k k^q = q! delta_{qm}. The grid
/// factor (+-n)^m is applied by the caller.
struct Stencil {
  StencilSpec spec;
  std::vector<Rational> exact_weights;
  std::vector<double> weights;
};

namespace detail {

/// Gauss-Jordan elimination over the rationals; the system must be nonsingular.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
  const std::size_t size = rhs.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    require(pivot < size, ErrorCode::unsupported_stencil, "singular moment system");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < size; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j < size; ++j) a[row][j] -= factor * a[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace detail

inline Stencil make_stencil(const StencilSpec& spec) {
  spec.validate();
  const auto length = static_cast<std::size_t>(spec.length());

  // row q: sum_k k^q w_k = q! delta_{qm}
  std::vector<std::vector<Rational>> moments(length, std::vector<Rational>(length));
  for (std::size_t k = 0; k < length; ++k) {
    Rational power = 1;
    for (std::size_t q = 0; q < length; ++q) {
      moments[q][k] = power;
      power *= static_cast<long long>(k);
    }
  }
  std::vector<Rational> rhs(length, Rational(0));
  Rational m_factorial = 1;
  for (int i = 2; i <= spec.m; ++i) m_factorial *= i;
  rhs[static_cast<std::size_t>(spec.m)] = m_factorial;

  Stencil stencil{spec, detail::solve_exact(moments, rhs), {}};

  for (std::size_t q = 0; q < length; ++q) {
    Rational sum = 0;
    for (std::size_t k = 0; k < length; ++k) sum += moments[q][k] * stencil.exact_weights[k];
    detail::require(sum == rhs[q], ErrorCode::unsupported_stencil, "stencil failed its moment check");
  }

  stencil.weights.reserve(length);
  for (const Rational& w : stencil.exact_weights) stencil.weights.push_back(w.convert_to<double>());
  return stencil;
}

/// Applies a stencil at the left (forward) or right (backward) end of the
/// equispaced samples f_0..f_n on [0, 1].
inline double apply_stencil(const Stencil& stencil, std::span<const double> samples) {
  const std::size_t n = samples.size() - 1;
  const auto length = stencil.weights.size();
  detail::require(samples.size() >= length, ErrorCode::insufficient_samples,
                  "stencil of length " + std::to_string(length) + " needs at least that many samples");
  double sum = 0.0;
  for (std::size_t k = 0; k < length; ++k) {
    const double f = stencil.spec.side == StencilSide::forward ? samples[k] : samples[n - k];
    sum += stencil.weights[k] * f;
  }
  const double step = stencil.spec.side == StencilSide::forward ? static_cast<double>(n) : -static_cast<double>(n);
  return std::pow(step, stencil.spec.m) * sum;
}

/// Builds the 0-exact boundary data matrix F_{n,p} from samples f_j = f(j/n),
/// j = 0..n. Column 0 is copied from the data, columns 1..r come from
/// one-sided stencils of accuracy p.
///
/// `weight_perturbation` is added to every w_0 and exists only as a negative
/// control for the self test.
inline BoundaryDataMatrix boundary_derivatives(std::span<const double> samples, int r, int p,
                                               double weight_perturbation = 0.0) {
  detail::require(samples.size() >= 2, ErrorCode::insufficient_samples, "need at least two samples");
  detail::require(r >= 0 && p >= 1, ErrorCode::invalid_parameter, "need r >= 0 and p >= 1");
  detail::require(r <= kMaxOrder, ErrorCode::unsupported_order, "order exceeds kMaxOrder");
  detail::require(samples.size() >= static_cast<std::size_t>(r + p), ErrorCode::insufficient_samples,
                  std::to_string(samples.size()) + " samples cannot hold a stencil of length " +
                      std::to_string(r + p));
  for (double v : samples)
    detail::require(std::isfinite(v), ErrorCode::invalid_parameter, "samples must be finite");

  BoundaryDataMatrix out(r);
  out(0, 0) = samples.front();
  out(1, 0) = samples.back();
  for (int m = 1; m <= r; ++m) {
    Stencil forward = make_stencil({m, p, StencilSide::forward});
    forward.weights[0] += weight_perturbation;
    Stencil backward = forward;
    backward.spec.side = StencilSide::backward;
    out(0, m) = apply_stencil(forward, samples);
    out(1, m) = apply_stencil(backward, samples);
  }
  return out;
}

}  // namespace fcont
