#include <gtest/gtest.h>

#include <cmath>

#include "fcont/analysis.hpp"
#include "support.hpp"

using namespace fcont;

TEST(Taylor, ElementaryFunctions) {
  const Taylor x = Taylor::variable(0.3, 6);
  const Taylor e = exp(2.0 * x);
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_NEAR(e.derivative(k), std::pow(2.0, k) * std::exp(0.6), 1e-12);
  const Taylor s = sin(x);
  EXPECT_NEAR(s.derivative(1), std::cos(0.3), 1e-15);
  EXPECT_NEAR(s.derivative(4), std::sin(0.3), 1e-13);
  const Taylor q = 1.0 / (x * x + 1.0);
  // d/dx (1 + x^2)^-1 = -2x / (1 + x^2)^2
  EXPECT_NEAR(q.derivative(1), -0.6 / std::pow(1.09, 2), 1e-15);
  EXPECT_NEAR((x * x - x).derivative(2), 2.0, 1e-15);
}

TEST(Catalog, NamesAndLookup) {
  const std::vector<std::string> expected{"sin20",  "expcos50", "expcos100", "expcos200",  "kink3",      "runge1", "runge0.1",
                                          "runge0.01", "x",     "const",     "kink_half0", "kink_half1", "kink_half2"};
  const std::vector<TestFunction> catalog = builtin_catalog();
  ASSERT_EQ(catalog.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(catalog[i].name, expected[i]);
  EXPECT_EQ(lookup_function("runge0.1").name, "runge0.1");
  EXPECT_EQ(code_of([] { lookup_function("sin21"); }), ErrorCode::unknown_name);
}

TEST(Catalog, ValuesAndDerivatives) {
  const TestFunction sin20 = lookup_function("sin20");
  EXPECT_DOUBLE_EQ(sin20(0.1), std::sin(2.0));
  EXPECT_NEAR(*sin20.derivative(3, 0.0), -8000.0, 1e-9);
  EXPECT_NEAR(*sin20.derivative(2, 0.1), -400.0 * std::sin(2.0), 1e-10);

  const TestFunction expcos = lookup_function("expcos50");
  EXPECT_DOUBLE_EQ(expcos(0.2), std::exp(-2.0 * std::cos(10.0)));
  // f' = 100 sin(50x) f
  EXPECT_NEAR(*expcos.derivative(1, 0.2), 100.0 * std::sin(10.0) * expcos(0.2), 1e-10);

  const TestFunction runge = lookup_function("runge1");
  const double d = -1.0 / 3.0;
  EXPECT_NEAR(*runge.derivative(1, 0.0), -2.0 * d / std::pow(d * d + 1.0, 2), 1e-15);

  EXPECT_DOUBLE_EQ(lookup_function("const")(0.7), 1.0);
  EXPECT_DOUBLE_EQ(*lookup_function("x").derivative(1, 0.7), 1.0);
  EXPECT_EQ(sin20.derivative(-1, 0.0), std::nullopt);
}

TEST(Catalog, KinkedFunctions) {
  const TestFunction k3 = lookup_function("kink3");
  EXPECT_NEAR(k3(0.0), std::pow(1.0 / 3.0, 3), 1e-16);
  EXPECT_NEAR(k3(1.0), std::pow(2.0 / 3.0, 3), 1e-15);
  EXPECT_NEAR(*k3.derivative(3, 0.0), -6.0, 1e-14);
  EXPECT_NEAR(*k3.derivative(3, 1.0), 6.0, 1e-14);
  EXPECT_EQ(*k3.derivative(2, 1.0 / 3.0), 0.0);
  EXPECT_EQ(k3.derivative(3, 1.0 / 3.0), std::nullopt);

  EXPECT_DOUBLE_EQ(lookup_function("kink_half0")(0.25), 0.25);
  EXPECT_DOUBLE_EQ(lookup_function("kink_half1")(0.25), -0.0625);
  EXPECT_DOUBLE_EQ(lookup_function("kink_half2")(0.75), 0.015625);
  EXPECT_EQ(lookup_function("kink_half0").derivative(1, 0.5), std::nullopt);
}

TEST(BoundaryMatrix, ExactValuesAndUnavailableDerivatives) {
  const BoundaryDataMatrix b = exact_boundary_matrix(lookup_function("sin20"), 3);
  EXPECT_NEAR(b(0, 1), 20.0, 1e-13);
  EXPECT_NEAR(b(1, 2), -400.0 * std::sin(20.0), 1e-10);
  const TestFunction edge = detail::kinked_function("edge", "|x|", "C^0", 0.0, 1);
  EXPECT_EQ(code_of([&] { exact_boundary_matrix(edge, 1); }), ErrorCode::derivative_unavailable);
  EXPECT_EQ(exact_boundary_matrix(edge, 0)(0, 0), 0.0);
  EXPECT_EQ(code_of([&] { exact_boundary_matrix(edge, kMaxOrder + 1); }), ErrorCode::unsupported_order);
}

TEST(Sampling, GridAndErrors) {
  const std::vector<double> s = sample(lookup_function("x"), 4);
  ASSERT_EQ(s.size(), 5u);
  EXPECT_DOUBLE_EQ(s[1], 0.25);
  EXPECT_EQ(code_of([] { sample(lookup_function("x"), 0); }), ErrorCode::invalid_parameter);
}

TEST(RelativeError, ReferenceValues) {
  const TestFunction sin20 = lookup_function("sin20");
  const double e_r3 = relative_error(fc_approximate(sample(sin20, 4096), 3, 3), sin20);
  EXPECT_GT(e_r3, 1.16e-11 / 2.0);
  EXPECT_LT(e_r3, 1.16e-11 * 2.0);
  const double e_r1 = relative_error(fc_approximate(sample(sin20, 64), 1, 3), sin20);
  EXPECT_GT(e_r1, 1.17e-3 / 2.0);
  EXPECT_LT(e_r1, 1.17e-3 * 2.0);
  const TestFunction k3 = lookup_function("kink3");
  const double e_kink = relative_error(fc_approximate(sample(k3, 4096), 2, 3), k3);
  EXPECT_GT(e_kink, 1.28e-11 / 2.0);
  EXPECT_LT(e_kink, 1.28e-11 * 2.0);
}

TEST(RelativeError, ConstantsAreReproducedDeterministically) {
  const TestFunction one = lookup_function("const");
  const FcApproximant a = fc_approximate(sample(one, 8), 2, 2);
  const double e = relative_error(a, one, 64);
  EXPECT_LT(e, 1e-14);
  EXPECT_EQ(e, relative_error(fc_approximate(sample(one, 8), 2, 2), one, 64));
}

TEST(Records, RatiosOrdersAndNoiseFloor) {
  const std::vector<int> ns{64, 128, 256};
  const std::vector<double> es{1e-6, 2.5e-7, 1e-14};
  const std::vector<ConvergenceRecord> recs = records_from_errors(ns, es);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_FALSE(recs[0].ratio.has_value());
  EXPECT_FALSE(recs[0].order.has_value());
  EXPECT_DOUBLE_EQ(*recs[1].ratio, 4.0);
  EXPECT_DOUBLE_EQ(*recs[1].order, 2.0);
  EXPECT_FALSE(recs[1].noise_floor);
  EXPECT_TRUE(recs[2].noise_floor);
}

TEST(Records, PowersOfTwo) {
  EXPECT_EQ(powers_of_two(6, 8), (std::vector<int>{64, 128, 256}));
  EXPECT_EQ(code_of([] { powers_of_two(0, 3); }), ErrorCode::invalid_parameter);
  EXPECT_EQ(code_of([] { powers_of_two(5, 4); }), ErrorCode::invalid_parameter);
  EXPECT_EQ(code_of([] { powers_of_two(3, 25); }), ErrorCode::invalid_parameter);
}

TEST(Records, SlopeFits) {
  const std::vector<double> xs{1.0, 2.0, 4.0, 8.0};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * std::pow(x, -2.5));
  EXPECT_NEAR(loglog_slope(xs, ys), -2.5, 1e-14);
  const std::vector<ConvergenceRecord> recs = records_from_errors(std::vector<int>{1, 2, 4, 8}, ys);
  EXPECT_NEAR(fitted_order(recs), 2.5, 1e-14);
  EXPECT_EQ(code_of([] { loglog_slope(std::vector<double>{1.0}, std::vector<double>{1.0}); }),
            ErrorCode::invalid_parameter);
}

TEST(Study, OrdersFollowTheContinuationOrder) {
  const TestFunction sin20 = lookup_function("sin20");
  const std::vector<int> ns = powers_of_two(9, 12);
  for (int r = 1; r <= 3; ++r) {
    const std::vector<ConvergenceRecord> recs = convergence_study(sin20, r, 4, ns);
    ASSERT_EQ(recs.size(), ns.size());
    EXPECT_NEAR(fitted_order(recs), r + 1, 0.3) << "r=" << r;
  }
  EXPECT_EQ(code_of([&] { convergence_study(sin20, 1, 1, std::vector<int>{64, 32}); }),
            ErrorCode::invalid_parameter);
}

TEST(Study, SmoothnessCapsTheOrder) {
  // |x-1/3|(x-1/3)^2 has a bounded third derivative, so high r does not help beyond order 3
  const std::vector<ConvergenceRecord> recs = convergence_study(lookup_function("kink3"), 4, 4, powers_of_two(8, 11));
  EXPECT_NEAR(fitted_order(recs), 3.0, 0.3);
}

TEST(Study, SExactBoundaryDataLimitsTheOrder) {
  const TestFunction sin20 = lookup_function("sin20");
  const std::vector<int> ns = powers_of_two(7, 12);
  for (int s = 0; s <= 1; ++s) {
    std::vector<double> errors;
    for (int n : ns) {
      BoundaryDataMatrix b = exact_boundary_matrix(sin20, 4);
      b(0, s + 1) += 1.0;
      b(1, s + 1) += 1.0;
      errors.push_back(relative_error(fc_approximate_with_boundary(sample(sin20, n), b), sin20));
    }
    EXPECT_NEAR(fitted_order(records_from_errors(ns, errors)), s + 1, 0.4) << "s=" << s;
  }
}
