#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcont/core.hpp"
#include "fcont/error.hpp"
#include "fcont/pipeline.hpp"
#include "fcont/taylor.hpp"

namespace fcont {

/// A function on [0, 1] with exact values and, where defined, exact derivatives.
struct TestFunction {
  std::string name;
  std::string description;
  // regularity class on [0, 1], for display only
  std::string smoothness;
  std::function<double(double)> value;
  // Taylor expansion of the given order at x, empty where derivatives do not exist
  std::function<std::optional<Taylor>(double, int)> expansion;

  double operator()(double x) const { return value(x); }

  std::optional<double> derivative(int m, double x) const {
    if (m == 0) return value(x);
    if (m < 0) return std::nullopt;
    const std::optional<Taylor> t = expansion(x, m);
    if (!t) return std::nullopt;
    return t->derivative(static_cast<std::size_t>(m));
  }
};

namespace detail {

template <class F>
TestFunction smooth_function(std::string name, std::string description, std::string smoothness, F f) {
  return {std::move(name), std::move(description), std::move(smoothness), [f](double x) { return f(x); },
          [f](double x, int order) -> std::optional<Taylor> {
            return f(Taylor::variable(x, static_cast<std::size_t>(order)));
          }};
}

/// sign(x - center) (x - center)^power: C^{power-1}, smooth on either side of center.
inline TestFunction kinked_function(std::string name, std::string description, std::string smoothness,
                                    double center, int power) {
  auto value = [center, power](double x) {
    const double d = x - center;
    const double t = std::pow(d, power);
    return d < 0.0 ? -t : t;
  };
  auto expansion = [center, power](double x, int order) -> std::optional<Taylor> {
    const double d = x - center;
    const auto ord = static_cast<std::size_t>(order);
    if (d == 0.0) {
      if (order >= power) return std::nullopt;
      return Taylor(ord, 0.0);
    }
    const Taylor t = Taylor::variable(x, ord) - center;
    Taylor out(ord, 1.0);
    for (int i = 0; i < power; ++i) out = out * t;
    return d < 0.0 ? -out : out;
  };
  return {std::move(name), std::move(description), std::move(smoothness), value, expansion};
}

}  // namespace detail

/// Built-in functions used by the convergence experiments.
inline std::vector<TestFunction> builtin_catalog() {
  using detail::kinked_function;
  using detail::smooth_function;
  std::vector<TestFunction> out;
  out.push_back(smooth_function("sin20", "sin(20x)", "C^inf", [](const auto& x) {
    using std::sin;
    return sin(20.0 * x);
  }));
  for (int k : {50, 100, 200}) {
    const double kk = k;
    out.push_back(smooth_function("expcos" + std::to_string(k), "exp(-2cos(" + std::to_string(k) + "x))", "C^inf",
                                  [kk](const auto& x) {
                                    using std::cos;
                                    using std::exp;
                                    return exp(-2.0 * cos(kk * x));
                                  }));
  }
  out.push_back(kinked_function("kink3", "|x-1/3|(x-1/3)^2", "D^{2,1}([0,1])", 1.0 / 3.0, 3));
  for (const auto& [tag, eps] : {std::pair{"1", 1.0}, std::pair{"0.1", 0.1}, std::pair{"0.01", 0.01}}) {
    const double e2 = eps * eps;
    out.push_back(smooth_function(std::string("runge") + tag,
                                  std::string("((x-1/3)^2 + ") + tag + "^2)^-1", "C^inf",
                                  [e2](const auto& x) {
                                    const auto d = x - 1.0 / 3.0;
                                    return 1.0 / (d * d + e2);
                                  }));
  }
  out.push_back(smooth_function("x", "x", "C^inf", [](const auto& x) { return x; }));
  out.push_back(smooth_function("const", "1", "C^inf", [](const auto& x) { return 0.0 * x + 1.0; }));
  out.push_back(kinked_function("kink_half0", "|x-1/2|", "D_0^{0,1}([0,1])", 0.5, 1));
  out.push_back(kinked_function("kink_half1", "(x-1/2)|x-1/2|", "D^{1,1}([0,1])", 0.5, 2));
  out.push_back(kinked_function("kink_half2", "(x-1/2)^2|x-1/2|", "D^{2,1}([0,1])", 0.5, 3));
  return out;
}

inline TestFunction lookup_function(const std::string& name) {
  for (TestFunction& f : builtin_catalog())
    if (f.name == name) return std::move(f);
  throw Error(ErrorCode::unknown_name, "no built-in function named '" + name + "'");
}

/// f(j/n), j = 0..n.
inline std::vector<double> sample(const TestFunction& f, int n) {
  detail::require(n >= 1, ErrorCode::invalid_parameter, "grid size n must be positive");
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) out[static_cast<std::size_t>(j)] = f(static_cast<double>(j) / n);
  return out;
}

/// F with entries f^(m)(0) and f^(m)(1), m = 0..r.
inline BoundaryDataMatrix exact_boundary_matrix(const TestFunction& f, int r) {
  detail::require(r >= 0 && r <= kMaxOrder, ErrorCode::unsupported_order, "order outside [0, kMaxOrder]");
  BoundaryDataMatrix out(r);
  for (int row = 0; row < 2; ++row) {
    const std::optional<Taylor> t = f.expansion(static_cast<double>(row), r);
    detail::require(t.has_value(), ErrorCode::derivative_unavailable,
                    f.name + " has no derivatives through order " + std::to_string(r) + " at x = " +
                        std::to_string(row));
    for (int m = 0; m <= r; ++m) out(row, m) = t->derivative(static_cast<std::size_t>(m));
  }
  return out;
}

inline constexpr int kDefaultDenseGrid = 1 << 13;

/// max_j |T(z_j) - f(z_j)| / max_j |f(z_j)| over z_j = j/N, j = 0..N.
inline double relative_error(const FcApproximant& approx, const TestFunction& f, int N = kDefaultDenseGrid) {
  const std::vector<double> values = evaluate_dense(approx, N);
  double err = 0.0;
  double scale = 0.0;
  for (int j = 0; j <= N; ++j) {
    const double exact = f(static_cast<double>(j) / N);
    err = std::max(err, std::abs(values[static_cast<std::size_t>(j)] - exact));
    scale = std::max(scale, std::abs(exact));
  }
  return scale > 0.0 ? err / scale : err;
}

/// Errors below this are treated as round-off and carry no rate information.
inline constexpr double kNoiseFloor = 5e-14;

struct ConvergenceRecord {
  int n = 0;
  double e_n = 0.0;
  // previous error over current error; empty on the first row
  std::optional<double> ratio;
  std::optional<double> order;
  bool noise_floor = false;
};

struct StudyOptions {
  int dense_grid = kDefaultDenseGrid;
  double weight_perturbation = 0.0;
};

inline std::vector<ConvergenceRecord> records_from_errors(std::span<const int> n_values,
                                                          std::span<const double> errors) {
  std::vector<ConvergenceRecord> out;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    ConvergenceRecord rec;
    rec.n = n_values[i];
    rec.e_n = errors[i];
    rec.noise_floor = rec.e_n < kNoiseFloor;
    if (i > 0) {
      rec.ratio = errors[i - 1] / errors[i];
      rec.order = std::log2(*rec.ratio);
    }
    out.push_back(rec);
  }
  return out;
}

inline std::vector<ConvergenceRecord> convergence_study(const TestFunction& f, int r, int p,
                                                        std::span<const int> n_values,
                                                        const StudyOptions& options = {}) {
  for (std::size_t i = 1; i < n_values.size(); ++i)
    detail::require(n_values[i] > n_values[i - 1], ErrorCode::invalid_parameter,
                    "grid sizes must be strictly increasing");
  std::vector<double> errors;
  for (int n : n_values) {
    const FcApproximant approx = fc_approximate(sample(f, n), r, p, options.weight_perturbation);
    errors.push_back(relative_error(approx, f, std::max(options.dense_grid, n)));
  }
  return records_from_errors(n_values, errors);
}

inline std::vector<int> powers_of_two(int first_exponent, int last_exponent) {
  detail::require(first_exponent >= 1 && first_exponent <= last_exponent && last_exponent <= 24,
                  ErrorCode::invalid_parameter, "exponent range must satisfy 1 <= a <= b <= 24");
  std::vector<int> out;
  for (int a = first_exponent; a <= last_exponent; ++a) out.push_back(1 << a);
  return out;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  detail::require(xs.size() == ys.size() && xs.size() >= 2, ErrorCode::invalid_parameter,
                  "slope fit needs at least two matching points");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

/// Empirical order -d log e_n / d log n fitted over the given rows.
inline double fitted_order(std::span<const ConvergenceRecord> records) {
  std::vector<double> ns;
  std::vector<double> es;
  for (const ConvergenceRecord& rec : records) {
    ns.push_back(rec.n);
    es.push_back(rec.e_n);
  }
  return -loglog_slope(ns, es);
}

}  // namespace fcont
