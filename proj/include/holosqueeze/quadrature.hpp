#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace holosqueeze {

using cplx = std::complex<double>;

/// Gauss-Hermite rule for the weight exp(-x^2).
///
/// `scaled_weights[i]` holds `weights[i] * exp(nodes[i]^2)`, computed from
/// normalized Hermite functions so it stays accurate in the tails. Use it to
/// integrate functions that already carry their own Gaussian decay.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;

  std::size_t size() const { return nodes.size(); }
};

GaussHermiteRule gauss_hermite(int order);

/// Result of a quadrature evaluated at a base order and at twice that order.
struct QuadratureResult {
  cplx value;            // refined (doubled-order) estimate
  cplx coarse;           // base-order estimate
  double difference = 0; // |value - coarse|
  double scale = 1;      // magnitude the difference was judged against
  int order = 0;         // base order per axis
  bool converged = false;
};

/// Nodes and weights on R^D adapted to the Gaussian exp(-(x-c)^T A (x-c)).
///
/// The weights already absorb the Jacobian and the exp(|y|^2) factor, so
/// sum_i w_i g(x_i) approximates the plain integral of g whenever g decays
/// roughly like the Gaussian.
template <int D>
struct GaussianAdaptedGrid {
  std::vector<Eigen::Matrix<double, D, 1>> points;
  std::vector<double> weights;
};

/// Per-axis affine map used by separable adapted rules: x = center + y / sqrt(width).
struct AxisRule {
  std::vector<double> points;
  std::vector<double> weights;
};

/// One-dimensional rule for integrals of g(x) ~ exp(-width (x - center)^2).
AxisRule adapted_axis_rule(const GaussHermiteRule& rule, double width, double center);

template <int D>
GaussianAdaptedGrid<D> gaussian_adapted_grid(const Eigen::Matrix<double, D, D>& A,
                                             const Eigen::Matrix<double, D, 1>& center,
                                             int order);

}  // namespace holosqueeze

#include "holosqueeze/quadrature_impl.hpp"
