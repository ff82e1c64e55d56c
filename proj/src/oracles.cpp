#include "holosqueeze/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "holosqueeze/hermite.hpp"

namespace holosqueeze::oracle {

cplx hermite_holo_sum(int n, cplx z) {
  cplx sum = 0.0;
  for (int m = 0; 2 * m <= n; ++m) {
    const double c = std::exp(log_factorial(n) - log_factorial(m) - log_factorial(n - 2 * m));
    sum += (m % 2 ? -c : c) * std::pow(2.0 * z, n - 2 * m);
  }
  return sum;
}

cplx hermite_2v_sum(int m, int n, cplx z1, cplx z2) {
  cplx sum = 0.0;
  for (int k = 0; k <= std::min(m, n); ++k) {
    const double c = binomial(m, k) * binomial(n, k) * factorial(k);
    sum += (k % 2 ? -c : c) * std::pow(z1, m - k) * std::pow(z2, n - k);
  }
  return sum;
}

cplx hermite_2v_generating(int m, int n, cplx z1, cplx z2, double radius, int nodes) {
  cplx sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double tj = 2.0 * std::numbers::pi * j / nodes;
    const cplx s = std::polar(radius, tj);
    for (int l = 0; l < nodes; ++l) {
      const double tl = 2.0 * std::numbers::pi * l / nodes;
      const cplx t = std::polar(radius, tl);
      sum += std::exp(s * z1 + t * z2 - s * t) * std::polar(1.0, -(m * tj + n * tl));
    }
  }
  const double norm = double(nodes) * nodes * std::pow(radius, m + n);
  return factorial(m) * factorial(n) * sum / norm;
}

cplx h_alpha_direct(int n, double alpha, cplx z) {
  const double r = (1.0 - alpha) / (1.0 + alpha);
  const double pre = std::sqrt(2.0 * std::sqrt(alpha) / (1.0 + alpha)) * std::pow(r, 0.5 * n);
  const double norm = std::sqrt(std::pow(2.0, n) * factorial(n));
  const cplx arg = std::sqrt(2.0 * alpha / (1.0 - alpha * alpha)) * z;
  return pre * std::exp(0.5 * r * z * z) / norm * hermite_holo_sum(n, arg);
}

cplx h_alpha_2v_direct(int m, int n, double alpha, cplx z1, cplx z2) {
  const double r = (1.0 - alpha) / (1.0 + alpha);
  const double pre = 2.0 * std::sqrt(alpha) / (1.0 + alpha) * std::pow(r, 0.5 * (m + n));
  const double s = 2.0 * std::sqrt(alpha) / std::sqrt(1.0 - alpha * alpha);
  return pre * std::exp(r * z1 * z2) / std::sqrt(factorial(m) * factorial(n)) *
         hermite_2v_sum(m, n, s * z1, s * z2);
}

cplx trapezoid_2d(const std::function<cplx(double, double)>& f, const Eigen::Vector2d& center,
                  const Eigen::Vector2d& half_width, int n) {
  if (n < 2) throw std::invalid_argument("trapezoid_2d: need at least 2 points");
  const double h1 = 2.0 * half_width(0) / (n - 1), h2 = 2.0 * half_width(1) / (n - 1);
  cplx sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x1 = center(0) - half_width(0) + i * h1;
    const double w1 = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    for (int j = 0; j < n; ++j) {
      const double x2 = center(1) - half_width(1) + j * h2;
      const double w2 = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      sum += w1 * w2 * f(x1, x2);
    }
  }
  return sum * h1 * h2;
}

double hermite_function_derivative(int n, double x) {
  const auto psi = hermite_functions(n, x);
  const double lower = n > 0 ? std::sqrt(2.0 * n) * psi[n - 1] : 0.0;
  return lower - x * psi[n];
}

double fock_diagonal_expectation(const QuadraticHamiltonian& H, const OscillatorSpec& spec, int m,
                                 int n, int order) {
  const OscillatorGeometry pg = position_geometry(ladder_geometry(spec));
  const GaussHermiteRule rule = gauss_hermite(order);
  // Moments of a Fock function with inverse length c: <x^2> and <p^2>.
  auto moments = [&](int k, double c) {
    double x2 = 0.0, p2 = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double u = rule.nodes[i];
      const double w = rule.scaled_weights[i];
      const double f = hermite_functions(k, u)[k];
      const double df = hermite_function_derivative(k, u);
      x2 += w * u * u * f * f;
      p2 += w * df * df;
    }
    return std::pair{x2 / (c * c), p2 * c * c * spec.hbar * spec.hbar};
  };
  const auto [x1sq, p1sq] = moments(m, pg.a);
  const auto [x2sq, p2sq] = moments(n, pg.b);
  // Product Fock states have zero means and vanishing cross moments.
  return 0.5 * (H.Q(0, 0) * x1sq + H.Q(1, 1) * x2sq + H.Q(2, 2) * p1sq + H.Q(3, 3) * p2sq) + H.c;
}

}  // namespace holosqueeze::oracle
