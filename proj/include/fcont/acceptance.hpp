#pragma once

// Acceptance checks shared by the acceptance test binary and `fcont selftest`.
// Reference errors are known-good e_n values for each (function, r, p) column.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fcont/analysis.hpp"
#include "fcont/core.hpp"
#include "fcont/finite_diff.hpp"
#include "fcont/hermite.hpp"
#include "fcont/pipeline.hpp"
#include "fcont/spectral.hpp"

namespace fcont::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct Options {
  // forwarded to boundary_derivatives; nonzero only for the negative control
  double weight_perturbation = 0.0;
};

/// One column of a reference table: e_n for n = 2^6 .. 2^(6 + size - 1).
struct ReferenceColumn {
  const char* function;
  int r;
  int p;
  std::vector<double> errors;
  double expected_order;
};

inline constexpr double kReferenceFactor = 2.0;
inline constexpr double kOrderTolerance = 0.3;

inline const std::vector<ReferenceColumn>& sin_p3_table() {
  static const std::vector<ReferenceColumn> t = {
      {"sin20", 1, 3, {1.17e-3, 3.20e-4, 8.24e-5, 2.07e-5, 5.20e-6, 1.22e-6, 2.92e-7}, 2.0},
      {"sin20", 2, 3, {2.39e-4, 1.90e-5, 1.68e-6, 1.73e-7, 2.15e-8, 2.69e-9, 3.36e-10}, 3.0},
      {"sin20", 3, 3, {1.93e-4, 1.24e-5, 7.85e-7, 4.93e-8, 3.09e-9, 1.86e-10, 1.16e-11}, 4.0},
  };
  return t;
}

inline const std::vector<ReferenceColumn>& sin_p4_table() {
  static const std::vector<ReferenceColumn> t = {
      {"sin20", 2, 4, {1.42e-4, 1.28e-5, 1.44e-6, 1.75e-7, 2.16e-8, 2.69e-9, 3.37e-10}, 3.0},
      {"sin20", 3, 4, {6.94e-5, 2.53e-6, 1.02e-7, 4.64e-9, 2.32e-10, 1.27e-11, 7.46e-13}, 4.0},
      {"sin20", 4, 4, {4.03e-5, 1.42e-6, 4.59e-8, 1.44e-9, 4.51e-11, 1.32e-12, 7.67e-14}, 5.0},
  };
  return t;
}

inline const std::vector<ReferenceColumn>& kink_tables() {
  // smoothness caps the order at 3
  static const std::vector<ReferenceColumn> t = {
      {"kink3", 2, 1, {1.54e-4, 3.88e-5, 9.74e-6, 2.43e-6, 6.08e-7, 1.46e-7, 3.65e-8}, 2.0},
      {"kink3", 2, 2, {3.20e-6, 4.02e-7, 5.05e-8, 6.32e-9, 7.81e-10, 9.77e-11, 1.22e-11}, 3.0},
      {"kink3", 2, 3, {3.29e-6, 4.18e-7, 5.26e-8, 6.59e-9, 8.17e-10, 1.02e-10, 1.28e-11}, 3.0},
      {"kink3", 3, 1, {1.56e-4, 3.91e-5, 9.79e-6, 2.44e-6, 6.09e-7, 1.46e-7, 3.66e-8}, 2.0},
      {"kink3", 3, 2, {2.60e-6, 3.15e-7, 3.88e-8, 4.79e-9, 5.97e-10, 7.15e-11, 8.93e-12}, 3.0},
      {"kink3", 3, 3, {8.13e-7, 1.01e-7, 1.27e-8, 1.58e-9, 1.98e-10, 2.27e-11, 2.84e-12}, 3.0},
  };
  return t;
}

namespace detail {

inline std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

/// Compares a computed study against a reference column: every row within
/// kReferenceFactor, and the order fitted over the last three rows above the noise
/// floor within kOrderTolerance.
inline bool check_column(const ReferenceColumn& ref, const Options& options, std::ostringstream& log) {
  const TestFunction f = lookup_function(ref.function);
  const std::vector<int> ns = powers_of_two(6, 6 + static_cast<int>(ref.errors.size()) - 1);
  const std::vector<ConvergenceRecord> recs =
      convergence_study(f, ref.r, ref.p, ns, {kDefaultDenseGrid, options.weight_perturbation});
  bool ok = true;
  double worst_factor = 1.0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const double factor = std::max(recs[i].e_n / ref.errors[i], ref.errors[i] / recs[i].e_n);
    worst_factor = std::max(worst_factor, std::isfinite(factor) ? factor : 1e300);
    if (!(factor <= kReferenceFactor)) ok = false;
  }
  std::vector<ConvergenceRecord> above_floor;
  for (const ConvergenceRecord& rec : recs)
    if (!rec.noise_floor) above_floor.push_back(rec);
  double order = std::nan("");
  if (above_floor.size() >= 3)
    order = fitted_order(std::span(above_floor).last(3));
  if (!(std::abs(order - ref.expected_order) <= kOrderTolerance)) ok = false;
  log << ref.function << " r=" << ref.r << " p=" << ref.p << ": worst factor " << fmt("%.2f", worst_factor)
      << ", order " << fmt("%.2f", order) << " (want " << fmt("%.0f", ref.expected_order) << "); ";
  return ok;
}

inline CriterionResult table_criterion(int id, std::string title, const std::vector<ReferenceColumn>& cols,
                                       const Options& options) {
  std::ostringstream log;
  bool ok = true;
  for (const ReferenceColumn& col : cols) ok = check_column(col, options, log) && ok;
  return {id, std::move(title), ok, log.str()};
}

inline double study_error(const char* name, int r, int p, int n, const Options& options) {
  const TestFunction f = lookup_function(name);
  const FcApproximant approx = fc_approximate(sample(f, n), r, p, options.weight_perturbation);
  return relative_error(approx, f);
}

}  // namespace detail

inline CriterionResult sin_p3_errors(const Options& options = {}) {
  return detail::table_criterion(1, "sin(20x) reference errors, p=3, r=1..3", sin_p3_table(), options);
}

inline CriterionResult sin_p4_errors(const Options& options = {}) {
  return detail::table_criterion(2, "sin(20x) reference errors, p=4, r=2..4", sin_p4_table(), options);
}

inline CriterionResult kink_smoothness_cap(const Options& options = {}) {
  return detail::table_criterion(3, "|x-1/3|(x-1/3)^2 smoothness cap", kink_tables(), options);
}

inline CriterionResult expcos_resolution(const Options& options = {}) {
  using detail::fmt;
  const TestFunction f = lookup_function("expcos50");
  const std::vector<ConvergenceRecord> recs =
      convergence_study(f, 4, 4, powers_of_two(11, 12), {kDefaultDenseGrid, options.weight_perturbation});
  const double e12 = recs[1].e_n;
  const double order = *recs[1].order;
  const double e200 = detail::study_error("expcos200", 4, 4, 1 << 8, options);
  const bool ok = e12 <= 5e-12 && order >= 4.6 && order <= 5.4 && e200 >= 1e-2;
  return {4, "exp(-2cos kx) resolution, r=4, p=4", ok,
          "k=50: e_4096 = " + fmt("%.3g", e12) + " (<= 5e-12), last order " + fmt("%.2f", order) +
              " (in [4.6, 5.4]); k=200: e_256 = " + fmt("%.3g", e200) + " (>= 1e-2)"};
}

inline CriterionResult runge_thresholds(const Options& options = {}) {
  using detail::fmt;
  const double e_wide = detail::study_error("runge1", 4, 4, 1 << 9, options);
  const double e_narrow_256 = detail::study_error("runge0.01", 4, 4, 1 << 8, options);
  const double e_narrow_1024 = detail::study_error("runge0.01", 4, 4, 1 << 10, options);
  const bool ok = e_wide <= 2e-13 && e_narrow_1024 <= 1e-12 && e_narrow_256 >= 1e-4;
  return {5, "((x-1/3)^2 + eps^2)^-1 thresholds", ok,
          "eps=1: e_512 = " + fmt("%.3g", e_wide) + " (<= 2e-13); eps=0.01: e_256 = " + fmt("%.3g", e_narrow_256) +
              " (>= 1e-4), e_1024 = " + fmt("%.3g", e_narrow_1024) + " (<= 1e-12)"};
}

inline CriterionResult hermite_properties() {
  using detail::fmt;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  double worst_endpoint = 0.0;
  for (int r = 0; r <= 10; ++r) {
    const HermiteBasisSet basis = hermite_basis(r);
    for (int trial = 0; trial < 100; ++trial) {
      BoundaryDataMatrix data(r);
      for (int row = 0; row < 2; ++row)
        for (int m = 0; m <= r; ++m) data(row, m) = unit(rng);
      const HermiteContinuation poly(data, basis);
      for (int ell = 0; ell <= r; ++ell) {
        worst_endpoint = std::max(worst_endpoint, std::abs(poly.derivative(ell, 0.0) - data(0, ell)));
        worst_endpoint = std::max(worst_endpoint, std::abs(poly.derivative(ell, -1.0) - data(1, ell)));
      }
    }
  }

  bool identity = true;
  for (int r = 0; r <= 20; ++r)
    for (int n = 1; n <= r + 1; ++n) identity = identity && verify_binomial_identity(r, n);

  int violations = 0;
  std::uniform_int_distribution<int> order_dist(0, 10);
  std::uniform_real_distribution<double> point(-1.0, 0.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = order_dist(rng);
    BoundaryDataMatrix data(r);
    for (int row = 0; row < 2; ++row)
      for (int m = 0; m <= r; ++m) data(row, m) = unit(rng);
    if (std::abs(eval_continuation(data, hermite_basis(r), point(rng))) > operator_norm_bound(r)) ++violations;
  }

  const bool ok = worst_endpoint <= 1e-9 && identity && violations == 0;
  return {6, "Hermite operator properties", ok,
          "endpoint error " + fmt("%.2e", worst_endpoint) + " (<= 1e-9), binomial identity " +
              (identity ? "holds" : "FAILS") + ", norm-bound violations " + std::to_string(violations)};
}

inline CriterionResult oracle_equivalences() {
  using detail::fmt;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  double fft_error = 0.0;
  for (std::size_t size = 8; size <= 1024; size *= 2) {
    std::vector<double> g(size);
    for (double& v : g) v = unit(rng);
    const TrigCoefficients fast = dft_forward(g);
    const TrigCoefficients slow = naive_dft_forward(g);
    double diff = 0.0;
    for (int k = -fast.n(); k < fast.n(); ++k) diff = std::max(diff, std::abs(fast[k] - slow[k]));
    fft_error = std::max(fft_error, diff / slow.max_abs());
  }

  double resample_error = 0.0;
  {
    const int n = 64;
    const int M = 256;
    std::vector<Complex> values(2 * n);
    for (Complex& c : values) c = Complex(unit(rng), unit(rng));
    const TrigCoefficients c(n, values);
    const std::vector<double> dense = resample(c, M);
    for (int j = 0; j < 2 * M; ++j) {
      const double x = -1.0 + static_cast<double>(j) / M;
      resample_error = std::max(resample_error, std::abs(dense[static_cast<std::size_t>(j)] - eval_series(c, x)));
    }
  }

  double stencil_error = 0.0;
  for (int m = 1; m <= 4; ++m) {
    for (int p = 1; p <= 4; ++p) {
      const int degree = m + p - 1;
      std::vector<double> coeffs(static_cast<std::size_t>(degree + 1));
      for (double& a : coeffs) a = unit(rng);
      const Monomials dm = differentiate(coeffs, m);
      for (int n : {m + p, 16}) {
        std::vector<double> samples(static_cast<std::size_t>(n + 1));
        for (int j = 0; j <= n; ++j) samples[static_cast<std::size_t>(j)] = horner(coeffs, static_cast<double>(j) / n);
        const Stencil fwd = make_stencil({m, p, StencilSide::forward});
        const Stencil bwd = make_stencil({m, p, StencilSide::backward});
        const double exact0 = horner(dm, 0.0);
        const double exact1 = horner(dm, 1.0);
        stencil_error = std::max(stencil_error, std::abs(apply_stencil(fwd, samples) - exact0) /
                                                    std::max(1.0, std::abs(exact0)));
        stencil_error = std::max(stencil_error, std::abs(apply_stencil(bwd, samples) - exact1) /
                                                    std::max(1.0, std::abs(exact1)));
      }
    }
  }

  const bool ok = fft_error <= 1e-12 && resample_error <= 1e-12 && stencil_error <= 1e-9;
  return {7, "Oracle equivalences (FFT, resampling, stencils)", ok,
          "FFT vs direct " + fmt("%.2e", fft_error) + ", resample vs pointwise " + fmt("%.2e", resample_error) +
              ", stencil on polynomials " + fmt("%.2e", stencil_error)};
}

/// Envelope max(|c_k|, |c_{k+1}|) so that parity-vanishing coefficients do not
/// spoil the log-log fit.
inline double coefficient_decay_slope(const PiecewisePolyContinuation& fc, long k_first, long k_last) {
  std::vector<double> ks;
  std::vector<double> mags;
  for (long k = k_first; k <= k_last; ++k) {
    const double env = std::max(std::abs(continuous_coefficient_ppoly(fc, k)),
                                std::abs(continuous_coefficient_ppoly(fc, k + 1)));
    ks.push_back(static_cast<double>(k));
    mags.push_back(env);
  }
  return loglog_slope(ks, mags);
}

inline CriterionResult decay_property() {
  using detail::fmt;
  const TestFunction identity = lookup_function("x");
  bool ok = true;
  std::string detail_text;
  for (int r = 0; r <= 2; ++r) {
    const PiecewisePolyContinuation fc = make_poly_continuation({0.0, 1.0}, exact_boundary_matrix(identity, r));
    const double slope = coefficient_decay_slope(fc, 16, 512);
    const double want = -(r + 2.0);
    ok = ok && std::abs(slope - want) <= 0.4;
    detail_text += "r=" + std::to_string(r) + ": slope " + fmt("%.2f", slope) + " (want " + fmt("%.0f", want) + "); ";
  }
  return {8, "Coefficient decay of exact continuations of f(x)=x", ok, detail_text};
}

inline CriterionResult s_exactness_degradation() {
  using detail::fmt;
  const TestFunction f = lookup_function("sin20");
  const int r = 4;
  const BoundaryDataMatrix exact = exact_boundary_matrix(f, r);
  const std::vector<int> ns = powers_of_two(7, 12);
  bool ok = true;
  std::string detail_text;
  for (int s = 0; s <= 2; ++s) {
    BoundaryDataMatrix perturbed = exact;
    perturbed(0, s + 1) += 1.0;
    perturbed(1, s + 1) += 1.0;
    std::vector<double> errors;
    for (int n : ns) errors.push_back(relative_error(fc_approximate_with_boundary(sample(f, n), perturbed), f));
    const double order = fitted_order(records_from_errors(ns, errors));
    ok = ok && std::abs(order - (s + 1.0)) <= 0.4;
    detail_text += "s=" + std::to_string(s) + ": order " + fmt("%.2f", order) + " (want " + std::to_string(s + 1) + "); ";
  }
  return {9, "s-exact boundary data limits the order to s+1", ok, detail_text};
}

inline std::vector<std::function<CriterionResult()>> all_criteria(const Options& options = {}) {
  return {
      [options] { return sin_p3_errors(options); },
      [options] { return sin_p4_errors(options); },
      [options] { return kink_smoothness_cap(options); },
      [options] { return expcos_resolution(options); },
      [options] { return runge_thresholds(options); },
      [] { return hermite_properties(); },
      [] { return oracle_equivalences(); },
      [] { return decay_property(); },
      [] { return s_exactness_degradation(); },
  };
}

/// Runs every criterion, printing one line each. Returns true when all pass.
inline bool run_all(std::ostream& out, const Options& options = {}) {
  bool all = true;
  for (const auto& criterion : all_criteria(options)) {
    CriterionResult res;
    try {
      res = criterion();
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("threw: ") + e.what();
    }
    all = all && res.passed;
    out << (res.passed ? "[PASS] " : "[FAIL] ") << res.id << ". " << res.title << " -- " << res.detail << '\n';
  }
  out << (all ? "all acceptance criteria passed" : "acceptance criteria FAILED") << '\n';
  return all;
}

}  // namespace fcont::acceptance
