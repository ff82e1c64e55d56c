#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "holosqueeze/quadrature.hpp"

namespace holosqueeze {

/// Which squeezing route builds the bipartite state.
///   kProduct: each mode squeezed separately, coefficients h_m(z1) h_n(z2).
///   kTwoMode: both modes squeezed together, coefficients h_{m,n}(z1, z2).
enum class SqueezeMode { kProduct = 1, kTwoMode = 2 };

/// Throws std::invalid_argument for anything other than 1 or 2.
SqueezeMode squeeze_mode_from_int(int k);
int to_int(SqueezeMode k);

/// Measure parameter alpha in (0, 1] and the squeezing strength xi = -ln(alpha) / 2.
struct SqueezeParam {
  double alpha = 1.0;
  double xi = 0.0;
};

SqueezeParam squeeze_from_alpha(double alpha);
double alpha_from_xi(double xi);

/// Single-variable holomorphic Hermite function h_n^(alpha)(z).
cplx h_alpha(int n, double alpha, cplx z);

/// h_0^(alpha)(z) .. h_{n_max}^(alpha)(z).
std::vector<cplx> h_alpha_sequence(int n_max, double alpha, cplx z);

/// Two-variable holomorphic Hermite function h_{m,n}^(alpha)(z1, z2).
cplx h_alpha_2v(int m, int n, double alpha, cplx z1, cplx z2);

/// Expansion coefficients phi_{k,(m,n)}(z1, z2) for 0 <= m, n <= n_max.
Eigen::MatrixXcd coefficient_table(SqueezeMode k, double alpha, cplx z1, cplx z2, int n_max);

/// sum_{m,n<=N} |phi_{k,(m,n)}(z1, z2)|^2. The full series equals
/// exp(|z1|^2 + |z2|^2) for both modes.
double coefficient_norm_partial(SqueezeMode k, double alpha, cplx z1, cplx z2, int N);

/// pi^{-2} exp(-|w1|^2 - |w2|^2).
double gaussian_measure_density(cplx w1, cplx w2);

/// Gram matrix of h_{m,n}^(alpha), 0 <= m, n <= index_cap, under the Gaussian
/// measure on C^2. Rows and columns are ordered by m * (index_cap + 1) + n.
/// Uses a tensor Gauss-Hermite rule on (Re w1, Im w1, Re w2, Im w2).
Eigen::MatrixXcd basis_gram_matrix(double alpha, int index_cap = 4, int order = 40);

}  // namespace holosqueeze
