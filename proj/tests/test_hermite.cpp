#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "holosqueeze/hermite.hpp"
#include "holosqueeze/oracles.hpp"

using namespace holosqueeze;

namespace {

double relative_gap(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); }

}  // namespace

TEST(Factorial, ExactBelowTwentyAndLogGammaAbove) {
  EXPECT_EQ(factorial(0), 1.0);
  EXPECT_EQ(factorial(20), 2432902008176640000.0);
  EXPECT_NEAR(factorial(21) / 51090942171709440000.0, 1.0, 1e-13);
  EXPECT_NEAR(log_factorial(30), std::lgamma(31.0), 1e-12);
  EXPECT_EQ(binomial(10, 3), 120.0);
  EXPECT_EQ(binomial(5, 7), 0.0);
  EXPECT_THROW(factorial(-1), std::invalid_argument);
}

TEST(HermiteReal, LowOrders) {
  EXPECT_EQ(hermite_real(0, 3.7), 1.0);
  EXPECT_EQ(hermite_real(1, 2.0), 4.0);
  EXPECT_DOUBLE_EQ(hermite_real(3, 0.5), 8 * 0.125 - 12 * 0.5);
}

TEST(HermiteReal, MatchesExplicitSumAtRealArgument) {
  const double ref = oracle::hermite_holo_sum(10, 1.3).real();
  EXPECT_LT(std::abs(hermite_real(10, 1.3) - ref) / std::abs(ref), 1e-13);
}

TEST(HermiteHolo, LowOrders) {
  const cplx z(0.3, -1.2);
  EXPECT_EQ(hermite_holo(0, z), cplx(1.0));
  EXPECT_LT(std::abs(hermite_holo(2, z) - (4.0 * z * z - 2.0)), 1e-15);
}

TEST(HermiteHolo, RecurrenceAgreesWithExplicitSum) {
  const cplx z(0.4, 0.9);
  const cplx ref = oracle::hermite_holo_sum(7, z);
  EXPECT_LT(std::abs(hermite_holo(7, z) - ref) / std::abs(ref), 1e-12);
  const cplx pts[] = {{0.0, 0.0}, {1.5, -0.2}, {-0.7, 2.1}, {0.05, 0.05}, {2.5, 1.0}};
  for (int n = 0; n <= 25; ++n) {
    for (cplx p : pts) EXPECT_LT(relative_gap(hermite_holo(n, p), oracle::hermite_holo_sum(n, p)), 1e-11) << n;
  }
}

TEST(HermiteHolo, NormalizedTableMatchesDirectScaling) {
  const cplx z(0.8, -0.3);
  const auto t = hermite_holo_normalized(12, z);
  for (int n = 0; n <= 12; ++n) {
    const cplx direct = hermite_holo(n, z) / std::sqrt(std::pow(2.0, n) * factorial(n));
    EXPECT_LT(std::abs(t[n] - direct), 1e-13);
  }
}

TEST(HermiteFunctions, OrthonormalOnTrapezoidGrid) {
  const int n_max = 8;
  double gram[9][9] = {};
  const double h = 0.02;
  for (double x = -14.0; x <= 14.0; x += h) {
    const auto f = hermite_functions(n_max, x);
    for (int i = 0; i <= n_max; ++i)
      for (int j = 0; j <= n_max; ++j) gram[i][j] += h * f[i] * f[j];
  }
  for (int i = 0; i <= n_max; ++i)
    for (int j = 0; j <= n_max; ++j) EXPECT_NEAR(gram[i][j], i == j ? 1.0 : 0.0, 1e-12);
}

TEST(HermiteComplex2v, LowOrders) {
  const cplx z1(0.2, 0.7), z2(-1.1, 0.4);
  EXPECT_EQ(hermite_complex_2v(0, 0, z1, z2), cplx(1.0));
  EXPECT_LT(std::abs(hermite_complex_2v(1, 1, z1, z2) - (z1 * z2 - 1.0)), 1e-15);
  EXPECT_LT(std::abs(hermite_complex_2v(3, 0, z1, z2) - z1 * z1 * z1), 1e-15);
}

TEST(HermiteComplex2v, SymmetricUnderIndexAndArgumentSwap) {
  const cplx z1(0.5, -0.2), z2(1.1, 0.3);
  for (int m = 0; m <= 9; ++m)
    for (int n = 0; n <= 9; ++n)
      EXPECT_EQ(hermite_complex_2v(m, n, z1, z2), hermite_complex_2v(n, m, z2, z1));
}

TEST(HermiteComplex2v, AgreesWithExplicitSum) {
  const cplx z1(-0.6, 0.9), z2(0.3, 1.4);
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n)
      EXPECT_LT(relative_gap(hermite_complex_2v(m, n, z1, z2), oracle::hermite_2v_sum(m, n, z1, z2)), 1e-11);
}

TEST(HermiteComplex2v, GeneratingFunctionCoefficients) {
  const cplx z1(0.5, -0.2), z2(1.1, 0.3);
  const cplx ref = oracle::hermite_2v_generating(3, 2, z1, z2);
  EXPECT_LT(relative_gap(hermite_complex_2v(3, 2, z1, z2), ref), 1e-10);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      EXPECT_LT(relative_gap(hermite_complex_2v(m, n, z1, z2), oracle::hermite_2v_generating(m, n, z1, z2)), 1e-10);
}

TEST(HermiteComplex2v, NormalizedTableMatchesScalarEvaluator) {
  const cplx z1(0.7, 0.1), z2(-0.4, 0.6);
  const Eigen::MatrixXcd T = hermite_complex_2v_normalized(7, 5, z1, z2);
  for (int m = 0; m <= 7; ++m)
    for (int n = 0; n <= 5; ++n) {
      const cplx direct = hermite_complex_2v(m, n, z1, z2) / std::sqrt(factorial(m) * factorial(n));
      EXPECT_LT(std::abs(T(m, n) - direct), 1e-13);
    }
}

TEST(MehlerProduct, ZeroParameterKeepsOnlyLeadingTerm) {
  const SeriesComparison c = mehler_product(0.0, {0.3, 0.2}, {-1.0, 0.5}, 5);
  EXPECT_EQ(c.series, cplx(1.0));
  EXPECT_EQ(c.closed, cplx(1.0));
}

TEST(MehlerProduct, ConvergesToClosedForm) {
  EXPECT_LT(mehler_product(0.5, 1.0, 1.0, 60).gap(), 1e-10);
  for (double t : {-0.6, -0.3, 0.2, 0.6}) {
    EXPECT_LT(mehler_product(t, {0.3, 0.4}, {-0.5, 0.2}, 60).gap(), 1e-9) << t;
  }
}

TEST(MehlerProduct, SlowConvergenceNearUnitParameter) {
  EXPECT_GT(mehler_product(0.99, 1.0, 1.0, 60).gap(), 1e-3);
}

TEST(MehlerProduct, RejectsParameterOutsideUnitInterval) {
  EXPECT_THROW(mehler_product(1.0, 0.0, 0.0), std::domain_error);
  EXPECT_THROW(mehler_product(-1.5, 0.0, 0.0), std::domain_error);
}

TEST(MehlerTwoVariable, ZeroParametersGiveOne) {
  const SeriesComparison c = mehler_two_variable(0.0, 0.0, {0.3, 0.1}, {0.2, 0.2}, 0.5, -0.5, 10);
  EXPECT_LT(std::abs(c.series - 1.0), 1e-15);
  EXPECT_LT(std::abs(c.closed - 1.0), 1e-15);
}

TEST(MehlerTwoVariable, ConvergesToClosedForm) {
  EXPECT_LT(mehler_two_variable(0.4, 0.4, {0.3, 0.1}, {-0.2, 0.5}, 0.7, -1.1, 50).gap(), 1e-9);
  EXPECT_LT(mehler_two_variable(0.6, 0.6, {0.1, -0.3}, {0.4, 0.2}, -0.3, 0.8, 60).gap(), 1e-9);
}

TEST(MehlerTwoVariable, SecondParameterZeroReducesToSingleSum) {
  const cplx z1(0.3, 0.4), z2(-0.2, 0.1);
  const double s = 0.5, u = 0.7;
  cplx ref = 0.0;
  for (int m = 0; m <= 40; ++m) {
    ref += std::pow(s, m) / std::sqrt(std::pow(2.0, m)) / factorial(m) * std::pow(z1, m) * hermite_real(m, u);
  }
  EXPECT_LT(std::abs(mehler_two_variable(s, 0.0, z1, z2, u, -0.4, 40).series - ref), 1e-13);
}

TEST(MehlerTwoVariable, RejectsLargeProduct) {
  EXPECT_THROW(mehler_two_variable(1.2, 0.9, 0.0, 0.0, 0.0, 0.0), std::domain_error);
}

TEST(Orthogonality, GroundTermIsGaussianNormalization) {
  const QuadratureResult q = orthogonality_integral(0, 0, 0.5);
  const double expected = std::numbers::pi * std::sqrt(0.5) / 0.5;
  EXPECT_NEAR(orthogonality_constant(0, 0, 0.5), expected, 1e-14);
  EXPECT_LT(std::abs(q.value - expected) / expected, 1e-12);
  EXPECT_TRUE(q.converged);
}

TEST(Orthogonality, OffDiagonalVanishes) {
  const QuadratureResult q = orthogonality_integral(2, 3, 0.3);
  EXPECT_LT(std::abs(q.value) / q.scale, 1e-8);
}

TEST(Orthogonality, DiagonalConstant) {
  const double alpha = 0.7;
  const double expected = std::numbers::pi * std::sqrt(alpha) / (1 - alpha) *
                          std::pow(2 * (1 + alpha) / (1 - alpha), 4) * 24.0;
  EXPECT_NEAR(orthogonality_constant(4, 4, alpha) / expected, 1.0, 1e-14);
  EXPECT_LT(std::abs(orthogonality_integral(4, 4, alpha).value - expected) / expected, 1e-8);
}

TEST(Orthogonality, FullTableAcrossAlphas) {
  for (double alpha : {0.3, 0.5, 0.7}) {
    for (int m = 0; m <= 10; ++m) {
      for (int n = 0; n <= 10; ++n) {
        const QuadratureResult q = orthogonality_integral(m, n, alpha);
        EXPECT_TRUE(q.converged);
        if (m == n) {
          const double c = orthogonality_constant(n, n, alpha);
          EXPECT_LT(std::abs(q.value - c) / c, 1e-8) << alpha << " " << n;
        } else {
          EXPECT_LT(std::abs(q.value) / q.scale, 1e-8) << alpha << " " << m << " " << n;
        }
      }
    }
  }
}

TEST(Orthogonality, RejectsAlphaOutsideOpenInterval) {
  EXPECT_THROW(orthogonality_integral(1, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(orthogonality_constant(1, 1, 0.0), std::invalid_argument);
}

TEST(Orthogonality, LowOrderReportsNonConvergence) {
  const QuadratureResult q = orthogonality_integral(10, 10, 0.3, 4, 1e-10);
  EXPECT_FALSE(q.converged);
}

TEST(GaussHermite, IntegratesPolynomialMomentsExactly) {
  const GaussHermiteRule r = gauss_hermite(20);
  double m0 = 0, m2 = 0, m4 = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    m0 += r.weights[i];
    m2 += r.weights[i] * r.nodes[i] * r.nodes[i];
    m4 += r.weights[i] * std::pow(r.nodes[i], 4);
  }
  const double sp = std::sqrt(std::numbers::pi);
  EXPECT_NEAR(m0, sp, 1e-14);
  EXPECT_NEAR(m2, sp / 2, 1e-14);
  EXPECT_NEAR(m4, 3 * sp / 4, 1e-13);
}
