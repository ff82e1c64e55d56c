#pragma once

// Independent reference evaluations. Each oracle avoids the code path it is
// used to check: explicit sums instead of recurrences, contour extraction
// instead of closed forms, trapezoid grids instead of Gauss-Hermite rules.

#include <functional>

#include <Eigen/Dense>

#include "holosqueeze/model.hpp"
#include "holosqueeze/quadrature.hpp"

namespace holosqueeze::oracle {

/// sum_{m<=n/2} (-1)^m n! / (m! (n-2m)!) (2z)^{n-2m}.
cplx hermite_holo_sum(int n, cplx z);

/// sum_k C(m,k) C(n,k) (-1)^k k! z1^{m-k} z2^{n-k}.
cplx hermite_2v_sum(int m, int n, cplx z1, cplx z2);

/// m! n! times the coefficient of s^m t^n in exp(s z1 + t z2 - s t), from
/// discrete Cauchy integrals on circles of radius `radius` with `nodes` points.
cplx hermite_2v_generating(int m, int n, cplx z1, cplx z2, double radius = 1.0, int nodes = 64);

/// h_n^(alpha)(z) transcribed term by term with the explicit Hermite sum.
cplx h_alpha_direct(int n, double alpha, cplx z);

/// h_{m,n}^(alpha)(z1, z2) transcribed term by term with the explicit sum.
cplx h_alpha_2v_direct(int m, int n, double alpha, cplx z1, cplx z2);

/// Uniform trapezoid sum of f over [c - w, c + w]^2 with n points per axis.
/// Spectrally accurate for integrands that have decayed at the box edges.
cplx trapezoid_2d(const std::function<cplx(double, double)>& f, const Eigen::Vector2d& center,
                  const Eigen::Vector2d& half_width, int n);

/// Normalized Hermite function derivative d/dx of exp(-x^2/2) H_n(x) / sqrt(2^n n! sqrt(pi)).
double hermite_function_derivative(int n, double x);

/// <m,n|H|m,n> for the quadratic Hamiltonian by one-dimensional quadrature of
/// x^2 and p^2 moments of the position-space Fock functions.
double fock_diagonal_expectation(const QuadraticHamiltonian& H, const OscillatorSpec& spec, int m,
                                 int n, int order = 60);

}  // namespace holosqueeze::oracle
