#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace holosqueeze {

template <int D>
GaussianAdaptedGrid<D> gaussian_adapted_grid(const Eigen::Matrix<double, D, D>& A,
                                             const Eigen::Matrix<double, D, 1>& center,
                                             int order) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, D, D>> eig(A);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("gaussian_adapted_grid: envelope matrix must be positive definite");
  }
  // x = center + T y with T^T A T = I.
  const Eigen::Matrix<double, D, 1> inv_sqrt = eig.eigenvalues().cwiseSqrt().cwiseInverse();
  const Eigen::Matrix<double, D, D> T = eig.eigenvectors() * inv_sqrt.asDiagonal();
  const double jacobian = std::abs(T.determinant());

  const GaussHermiteRule rule = gauss_hermite(order);
  const std::size_t n = rule.size();
  std::size_t total = 1;
  for (int d = 0; d < D; ++d) total *= n;

  GaussianAdaptedGrid<D> grid;
  grid.points.reserve(total);
  grid.weights.reserve(total);

  std::array<std::size_t, D> idx{};
  for (std::size_t k = 0; k < total; ++k) {
    Eigen::Matrix<double, D, 1> y;
    double w = jacobian;
    for (int d = 0; d < D; ++d) {
      y(d) = rule.nodes[idx[d]];
      w *= rule.scaled_weights[idx[d]];
    }
    grid.points.push_back(center + T * y);
    grid.weights.push_back(w);
    for (int d = D - 1; d >= 0; --d) {
      if (++idx[d] < n) break;
      idx[d] = 0;
    }
  }
  return grid;
}

}  // namespace holosqueeze
