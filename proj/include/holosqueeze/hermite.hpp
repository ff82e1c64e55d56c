#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "holosqueeze/quadrature.hpp"

namespace holosqueeze {

// n! and binomial coefficients: exact integer products up to 20, log-gamma above.
double factorial(int n);
double log_factorial(int n);
double binomial(int n, int k);

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite_real(int n, double x);

/// Holomorphic Hermite polynomial H_n(z), same recurrence with complex argument.
cplx hermite_holo(int n, cplx z);

/// H_l(z) / sqrt(2^l l!) for l = 0..n_max.
std::vector<cplx> hermite_holo_normalized(int n_max, cplx z);

/// Orthonormal Hermite functions exp(-x^2/2) H_l(x) / sqrt(2^l l! sqrt(pi)), l = 0..n_max.
std::vector<double> hermite_functions(int n_max, double x);

/// Two-variable complex Hermite polynomial
///   H_{m,n}(z1, z2) = sum_k C(m,k) C(n,k) (-1)^k k! z1^{m-k} z2^{n-k}.
/// Evaluated by a three-term recurrence along the diagonal in the smaller index.
cplx hermite_complex_2v(int m, int n, cplx z1, cplx z2);

/// Table T(m, n) = H_{m,n}(z1, z2) / sqrt(m! n!) for 0 <= m <= m_max, 0 <= n <= n_max.
Eigen::MatrixXcd hermite_complex_2v_normalized(int m_max, int n_max, cplx z1, cplx z2);

/// Truncated series and closed form of a Mehler-type generating function.
struct SeriesComparison {
  cplx series;
  cplx closed;

  double gap() const { return std::abs(series - closed); }
};

/// sum_{l<=N} t^l / (2^l l!) H_l(z1) H_l(z2) against
/// (1-t^2)^{-1/2} exp([2 t z1 z2 - t^2 (z1^2 + z2^2)] / (1 - t^2)).
/// Throws std::domain_error unless |t| < 1.
SeriesComparison mehler_product(double t, cplx z1, cplx z2, int N = 60);

/// sum_{m,n<=N} s^m t^n / (sqrt(2^{m+n}) m! n!) H_{m,n}(z1,z2) H_m(u) H_n(v)
/// against its closed form. Throws std::domain_error unless |s t| < 1.
SeriesComparison mehler_two_variable(double s, double t, cplx z1, cplx z2, double u, double v,
                                     int N = 60);

/// Closed-form value of the weighted inner product of H_m and H_n over the
/// complex plane with weight exp(-(1-alpha) x^2 - (1/alpha - 1) y^2).
double orthogonality_constant(int m, int n, double alpha);

/// Same inner product by tensor Gauss-Hermite quadrature, each axis rescaled to
/// its own Gaussian weight. Evaluated at `order` and 2*order; `converged` is set
/// when the two agree to `tol` relative to sqrt(<H_m,H_m><H_n,H_n>).
QuadratureResult orthogonality_integral(int m, int n, double alpha, int order = 80,
                                        double tol = 1e-10);

}  // namespace holosqueeze
