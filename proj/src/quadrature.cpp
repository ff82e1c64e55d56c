#include "holosqueeze/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace holosqueeze {

namespace {

// Orthonormal Hermite functions psi_0..psi_n at x (each carries exp(-x^2/2)).
// Returns psi_n and psi_{n-1}.
std::pair<double, double> hermite_function_pair(int n, double x) {
  double prev = 0.0;
  double cur = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
  for (int j = 1; j <= n; ++j) {
    const double next = x * std::sqrt(2.0 / j) * cur - std::sqrt((j - 1.0) / j) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");

  // Golub-Welsch for starting values, then Newton on the Hermite function.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int i = 1; i < order; ++i) {
    jacobi(i, i - 1) = jacobi(i - 1, i) = std::sqrt(0.5 * i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi, Eigen::EigenvaluesOnly);

  GaussHermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.scaled_weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = eig.eigenvalues()(i);
    for (int it = 0; it < 4; ++it) {
      const auto [pn, pm] = hermite_function_pair(order, x);
      // d/dx psi_n = sqrt(2n) psi_{n-1} - x psi_n
      const double dp = std::sqrt(2.0 * order) * pm - x * pn;
      if (dp == 0.0) break;
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    const auto [pn, pm] = hermite_function_pair(order - 1, x);
    (void)pm;
    // w_i exp(x_i^2) = 1 / (n psi_{n-1}(x_i)^2)
    const double scaled = 1.0 / (order * pn * pn);
    rule.nodes[i] = x;
    rule.scaled_weights[i] = scaled;
    rule.weights[i] = scaled * std::exp(-x * x);
  }
  return rule;
}

AxisRule adapted_axis_rule(const GaussHermiteRule& rule, double width, double center) {
  if (!(width > 0.0)) throw std::invalid_argument("adapted_axis_rule: width must be positive");
  const double s = 1.0 / std::sqrt(width);
  AxisRule out;
  out.points.resize(rule.size());
  out.weights.resize(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    out.points[i] = center + s * rule.nodes[i];
    out.weights[i] = s * rule.scaled_weights[i];
  }
  return out;
}

}  // namespace holosqueeze
