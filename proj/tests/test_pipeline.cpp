#include <gtest/gtest.h>

#include <cmath>

#include "fcont/pipeline.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fcont;

namespace {

template <class F>
std::vector<double> samples_of(F f, int n) {
  std::vector<double> out;
  for (int j = 0; j <= n; ++j) out.push_back(f(static_cast<double>(j) / n));
  return out;
}

}  // namespace

TEST(Continuation, LayoutOnTheDoubledGrid) {
  const int n = 8;
  const std::vector<double> f = samples_of([](double x) { return std::exp(x); }, n);
  const std::vector<double> g = discrete_continuation(f, 3, 3);
  ASSERT_EQ(g.size(), static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) EXPECT_EQ(g[static_cast<std::size_t>(n + j)], f[static_cast<std::size_t>(j)]);
  // x = -1 carries the right endpoint value
  EXPECT_NEAR(g[0], f.back(), 1e-14);
}

TEST(Continuation, IdentityWithOrderOne) {
  const std::vector<double> f = samples_of([](double x) { return x; }, 4);
  const std::vector<double> g = discrete_continuation(f, 1, 1);
  const std::vector<double> expected{1.0, 0.9375, 0.5, 0.0625};
  for (std::size_t j = 0; j < expected.size(); ++j) EXPECT_NEAR(g[j], expected[j], 1e-14) << j;
}

TEST(Approximant, InterpolatesTheSamples) {
  const int n = 32;
  const std::vector<double> f = samples_of([](double x) { return std::sin(5.0 * x) + x * x; }, n);
  const FcApproximant a = fc_approximate(f, 4, 4);
  EXPECT_EQ(a.n, n);
  EXPECT_EQ(a.spec.r(), 4);
  ASSERT_TRUE(a.p.has_value());
  EXPECT_EQ(*a.p, 4);
  for (int j = 0; j <= n; ++j)
    EXPECT_NEAR(evaluate(a, static_cast<double>(j) / n), f[static_cast<std::size_t>(j)], 1e-13) << j;
}

TEST(Approximant, DenseEvaluationMatchesPointwise) {
  const int n = 16;
  const FcApproximant a = fc_approximate(samples_of([](double x) { return std::cos(3.0 * x); }, n), 2, 3);
  const int N = 100;
  const std::vector<double> dense = evaluate_dense(a, N);
  ASSERT_EQ(dense.size(), static_cast<std::size_t>(N + 1));
  for (int j = 0; j <= N; ++j)
    EXPECT_NEAR(dense[static_cast<std::size_t>(j)], evaluate(a, static_cast<double>(j) / N), 1e-13) << j;
}

TEST(Approximant, ExactBoundaryDataIsRecorded) {
  const int n = 16;
  const std::vector<double> f = samples_of([](double x) { return x * x; }, n);
  const BoundaryDataMatrix b({0.0, 0.0, 2.0}, {1.0, 2.0, 2.0});
  const FcApproximant a = fc_approximate_with_boundary(f, b);
  EXPECT_FALSE(a.p.has_value());
  EXPECT_TRUE(a.boundary == b);
  EXPECT_EQ(a.spec.r(), 2);
}

TEST(Approximant, ConvergesForSmoothData) {
  auto error = [](int n) {
    auto fn = [](double x) { return std::exp(std::sin(3.0 * x)); };
    const FcApproximant a = fc_approximate(samples_of(fn, n), 3, 4);
    const int N = 4096;
    const std::vector<double> dense = evaluate_dense(a, N);
    double e = 0.0;
    for (int j = 0; j <= N; ++j) e = std::max(e, std::fabs(dense[static_cast<std::size_t>(j)] - fn(j / double(N))));
    return e;
  };
  const double order = std::log2(error(512) / error(1024));
  EXPECT_NEAR(order, 4.0, 0.5);
}

TEST(Approximant, Errors) {
  EXPECT_EQ(code_of([] { fc_approximate(std::vector<double>{1.0, 2.0}, 0, 1); }), ErrorCode::insufficient_samples);
  const std::vector<double> f = samples_of([](double x) { return x; }, 8);
  EXPECT_EQ(code_of([&] { fc_approximate(f, kMaxOrder + 1, 1); }), ErrorCode::unsupported_order);
  EXPECT_EQ(code_of([&] { fc_approximate(f, -1, 1); }), ErrorCode::invalid_parameter);
  EXPECT_EQ(code_of([&] { fc_approximate(f, 6, 4); }), ErrorCode::insufficient_samples);
  const FcApproximant a = fc_approximate(f, 1, 1);
  EXPECT_EQ(code_of([&] { evaluate(a, 1.5); }), ErrorCode::domain_violation);
  EXPECT_EQ(code_of([&] { evaluate(a, -0.1); }), ErrorCode::domain_violation);
  EXPECT_EQ(code_of([&] { evaluate_dense(a, 4); }), ErrorCode::undersampling);
}

TEST(ContinuousCoefficients, TriangleWave) {
  // f(x) = x continued with r = 0 is |x|
  const BoundaryDataMatrix b({0.0}, {1.0});
  const PiecewisePolyContinuation fc = make_poly_continuation({0.0, 1.0}, b);
  for (long k : {0L, 1L, 2L, 3L, 10L, 11L, -7L, 1000L, 999999L, 1000000L}) {
    const Complex c = continuous_coefficient_ppoly(fc, k);
    const double expected = oracle::triangle_coefficient(k);
    EXPECT_NEAR(c.real(), expected, 1e-12 * std::fabs(expected) + 5e-16) << k;
    EXPECT_NEAR(c.imag(), 0.0, 1e-15) << k;
  }
  EXPECT_EQ(code_of([&] { continuous_coefficient_ppoly(fc, 1000001L); }), ErrorCode::invalid_parameter);
}

TEST(ContinuousCoefficients, AgreeWithFineDiscreteTransform) {
  // exact r = 2 continuation of f(x) = x^3 - x
  const BoundaryDataMatrix b({0.0, -1.0, 0.0}, {0.0, 2.0, 6.0});
  const PiecewisePolyContinuation fc = make_poly_continuation({0.0, -1.0, 0.0, 1.0}, b);
  const int n = 4096;
  const FcApproximant a =
      fc_approximate_with_boundary(samples_of([](double x) { return x * x * x - x; }, n), b);
  for (int k = -20; k <= 20; ++k)
    EXPECT_LT(std::abs(a.coefficients[k] - continuous_coefficient_ppoly(fc, k)), 1e-12) << k;
}
