#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "fcont/error.hpp"

namespace fcont {

using Complex = std::complex<double>;

inline bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

/// In-place iterative radix-2 transform, unnormalized. sign = -1 forward, +1 inverse.
inline void fft_radix2(std::vector<Complex>& data, int sign) {
  const std::size_t size = data.size();
  for (std::size_t i = 1, j = 0; i < size; ++i) {
    std::size_t bit = size >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  // twiddles evaluated directly, no recurrence
  std::vector<Complex> twiddle(size / 2);
  for (std::size_t k = 0; k < size / 2; ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(size);
    twiddle[k] = Complex(std::cos(angle), std::sin(angle));
  }
  for (std::size_t len = 2; len <= size; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = size / len;
    for (std::size_t start = 0; start < size; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = data[start + k];
        const Complex v = data[start + k + half] * twiddle[k * stride];
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

inline void dft_direct(std::vector<Complex>& data, int sign) {
  const std::size_t size = data.size();
  std::vector<Complex> out(size);
  for (std::size_t k = 0; k < size; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
      const double angle =
          sign * 2.0 * std::numbers::pi * static_cast<double>((j * k) % size) / static_cast<double>(size);
      acc += data[j] * Complex(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  data = std::move(out);
}

inline void transform(std::vector<Complex>& data, int sign) {
  if (is_power_of_two(data.size()))
    fft_radix2(data, sign);
  else
    dft_direct(data, sign);
}

}  // namespace detail

/// Coefficients c_k, k = -n..n-1, of a period-2 trigonometric interpolant.
class TrigCoefficients {
 public:
  TrigCoefficients() = default;

  TrigCoefficients(int n, std::vector<Complex> values) : n_(n), values_(std::move(values)) {
    detail::require(n >= 1 && values_.size() == 2 * static_cast<std::size_t>(n), ErrorCode::invalid_parameter,
                    "trigonometric coefficients need 2n values with n >= 1");
  }

  int n() const noexcept { return n_; }

  Complex operator[](int k) const { return values_.at(static_cast<std::size_t>(k + n_)); }
  Complex& operator[](int k) { return values_.at(static_cast<std::size_t>(k + n_)); }

  /// Stored in order k = -n..n-1.
  std::span<const Complex> values() const noexcept { return values_; }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& c : values_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  int n_ = 0;
  std::vector<Complex> values_;
};

namespace detail {
inline int half_length(std::span<const double> g) {
  require(!g.empty(), ErrorCode::empty_input, "transform input is empty");
  require(g.size() % 2 == 0, ErrorCode::invalid_parameter,
          "transform input must have even length 2n, got " + std::to_string(g.size()));
  return static_cast<int>(g.size() / 2);
}
}  // namespace detail

/// c_k = (1/2n) sum_{j=-n}^{n-1} g_j e^{-i pi j k / n}, with g stored in order
/// j = -n..n-1. The shift j -> j+n turns into the exact phase (-1)^k.
inline TrigCoefficients dft_forward(std::span<const double> g) {
  const int n = detail::half_length(g);
  const std::size_t size = g.size();
  std::vector<Complex> work(g.begin(), g.end());
  detail::transform(work, -1);
  std::vector<Complex> c(size);
  const double scale = 1.0 / static_cast<double>(size);
  for (int k = -n; k < n; ++k) {
    const std::size_t slot = static_cast<std::size_t>((k + static_cast<int>(size)) % static_cast<int>(size));
    const double phase = (k % 2 == 0) ? scale : -scale;
    c[static_cast<std::size_t>(k + n)] = work[slot] * phase;
  }
  return {n, std::move(c)};
}

/// Direct O(n^2) evaluation of the same sum.
inline TrigCoefficients naive_dft_forward(std::span<const double> g) {
  const int n = detail::half_length(g);
  const long two_n = 2L * n;
  std::vector<Complex> c(g.size());
  for (int k = -n; k < n; ++k) {
    Complex acc = 0.0;
    for (int j = -n; j < n; ++j) {
      const long reduced = ((static_cast<long>(j) * k) % two_n + two_n) % two_n;
      const double angle = -std::numbers::pi * static_cast<double>(reduced) / n;
      acc += g[static_cast<std::size_t>(j + n)] * Complex(std::cos(angle), std::sin(angle));
    }
    c[static_cast<std::size_t>(k + n)] = acc / static_cast<double>(two_n);
  }
  return {n, std::move(c)};
}

/// Real part of sum_k c_k e^{i pi k x}, with the unpaired k = -n term taken as
/// Re(c_{-n}) cos(pi n x).
inline double eval_series(const TrigCoefficients& c, double x) {
  detail::require(x >= -1.0 && x <= 1.0, ErrorCode::domain_violation,
                  "series is evaluated on [-1, 1], got x = " + std::to_string(x));
  const int n = c.n();
  double sum = c[-n].real() * std::cos(std::numbers::pi * n * x);
  for (int k = -n + 1; k < n; ++k) {
    const double angle = std::numbers::pi * k * x;
    const Complex ck = c[k];
    sum += ck.real() * std::cos(angle) - ck.imag() * std::sin(angle);
  }
  return sum;
}

/// Values of eval_series at x = -1 + j/M, j = 0..2M-1, by zero padding the
/// spectrum into a length-2M inverse transform.
inline std::vector<double> resample(const TrigCoefficients& c, int M) {
  const int n = c.n();
  detail::require(M >= n, ErrorCode::undersampling,
                  "resampling to M = " + std::to_string(M) + " < n = " + std::to_string(n));
  const int size = 2 * M;
  std::vector<Complex> spectrum(static_cast<std::size_t>(size), 0.0);
  auto slot = [size](int k) { return static_cast<std::size_t>(((k % size) + size) % size); };
  // x = -1 + j/M contributes e^{-i pi k} = (-1)^k
  auto sign = [](int k) { return (k % 2 == 0) ? 1.0 : -1.0; };
  for (int k = -n + 1; k < n; ++k) spectrum[slot(k)] += sign(k) * c[k];
  const Complex nyquist = 0.5 * sign(n) * c[-n];
  spectrum[slot(-n)] += nyquist;
  spectrum[slot(n)] += nyquist;

  detail::transform(spectrum, +1);
  std::vector<double> out(static_cast<std::size_t>(size));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = spectrum[j].real();
  return out;
}

}  // namespace fcont
