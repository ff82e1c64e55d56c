#include "holosqueeze/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "holosqueeze/hermite.hpp"

namespace holosqueeze {

namespace {

void require_open_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": alpha must lie in the open interval (0,1)");
  }
}

}  // namespace

SqueezeMode squeeze_mode_from_int(int k) {
  if (k == 1) return SqueezeMode::kProduct;
  if (k == 2) return SqueezeMode::kTwoMode;
  throw std::invalid_argument("squeeze mode must be 1 or 2, got " + std::to_string(k));
}

int to_int(SqueezeMode k) { return k == SqueezeMode::kProduct ? 1 : 2; }

SqueezeParam squeeze_from_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("squeeze_from_alpha: alpha must lie in (0,1]");
  }
  return {alpha, -0.5 * std::log(alpha)};
}

double alpha_from_xi(double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw std::invalid_argument("alpha_from_xi: xi must be finite and non-negative");
  }
  return std::exp(-2.0 * xi);
}

std::vector<cplx> h_alpha_sequence(int n_max, double alpha, cplx z) {
  require_open_alpha(alpha, "h_alpha");
  if (n_max < 0) throw std::invalid_argument("h_alpha: negative order");
  const double r = (1.0 - alpha) / (1.0 + alpha);
  const double scale = std::sqrt(2.0 * alpha / (1.0 - alpha * alpha));
  // H_n(scale z) / sqrt(2^n n!) carries the 1/sqrt(2^n n!) of the definition.
  const auto hn = hermite_holo_normalized(n_max, scale * z);
  const cplx front = std::sqrt(2.0 * std::sqrt(alpha) / (1.0 + alpha)) * std::exp(0.5 * r * z * z);
  std::vector<cplx> out(n_max + 1);
  double rn = 1.0;
  const double sqrt_r = std::sqrt(r);
  for (int n = 0; n <= n_max; ++n) {
    out[n] = front * rn * hn[n];
    rn *= sqrt_r;
  }
  return out;
}

cplx h_alpha(int n, double alpha, cplx z) { return h_alpha_sequence(n, alpha, z).back(); }

namespace {

Eigen::MatrixXcd h_alpha_2v_table(int n_max, double alpha, cplx z1, cplx z2) {
  require_open_alpha(alpha, "h_alpha_2v");
  if (n_max < 0) throw std::invalid_argument("h_alpha_2v: negative order");
  const double r = (1.0 - alpha) / (1.0 + alpha);
  const double scale = 2.0 * std::sqrt(alpha) / std::sqrt(1.0 - alpha * alpha);
  Eigen::MatrixXcd T = hermite_complex_2v_normalized(n_max, n_max, scale * z1, scale * z2);
  const cplx front = 2.0 * std::sqrt(alpha) / (1.0 + alpha) * std::exp(r * z1 * z2);
  const double sqrt_r = std::sqrt(r);
  std::vector<double> pw(2 * n_max + 1);
  pw[0] = 1.0;
  for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * sqrt_r;
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= n_max; ++n) T(m, n) *= front * pw[m + n];
  }
  return T;
}

}  // namespace

cplx h_alpha_2v(int m, int n, double alpha, cplx z1, cplx z2) {
  if (m < 0 || n < 0) throw std::invalid_argument("h_alpha_2v: negative index");
  require_open_alpha(alpha, "h_alpha_2v");
  const double r = (1.0 - alpha) / (1.0 + alpha);
  const double scale = 2.0 * std::sqrt(alpha) / std::sqrt(1.0 - alpha * alpha);
  const cplx H = hermite_complex_2v(m, n, scale * z1, scale * z2);
  const double norm = std::exp(0.5 * (m + n) * std::log(r) - 0.5 * (log_factorial(m) + log_factorial(n)));
  return 2.0 * std::sqrt(alpha) / (1.0 + alpha) * norm * std::exp(r * z1 * z2) * H;
}

Eigen::MatrixXcd coefficient_table(SqueezeMode k, double alpha, cplx z1, cplx z2, int n_max) {
  if (k == SqueezeMode::kTwoMode) return h_alpha_2v_table(n_max, alpha, z1, z2);
  const auto a = h_alpha_sequence(n_max, alpha, z1);
  const auto b = h_alpha_sequence(n_max, alpha, z2);
  Eigen::MatrixXcd T(n_max + 1, n_max + 1);
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= n_max; ++n) T(m, n) = a[m] * b[n];
  }
  return T;
}

double coefficient_norm_partial(SqueezeMode k, double alpha, cplx z1, cplx z2, int N) {
  if (N < 0) throw std::invalid_argument("coefficient_norm_partial: negative truncation");
  return coefficient_table(k, alpha, z1, z2, N).squaredNorm();
}

double gaussian_measure_density(cplx w1, cplx w2) {
  constexpr double inv_pi2 = 1.0 / (std::numbers::pi * std::numbers::pi);
  return inv_pi2 * std::exp(-std::norm(w1) - std::norm(w2));
}

Eigen::MatrixXcd basis_gram_matrix(double alpha, int index_cap, int order) {
  require_open_alpha(alpha, "basis_gram_matrix");
  if (index_cap < 0) throw std::invalid_argument("basis_gram_matrix: negative index cap");
  const GaussHermiteRule rule = gauss_hermite(order);
  const int side = index_cap + 1;
  const int dim = side * side;
  const std::size_t n = rule.size();

  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd block(n * n, dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const cplx w1(rule.nodes[a], rule.nodes[b]);
      const double wab = rule.weights[a] * rule.weights[b];
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const cplx w2(rule.nodes[c], rule.nodes[d]);
          const double w = std::sqrt(wab * rule.weights[c] * rule.weights[d]);
          const Eigen::MatrixXcd T = h_alpha_2v_table(index_cap, alpha, w1, w2);
          const std::size_t row = c * n + d;
          for (int m = 0; m < side; ++m) {
            for (int k = 0; k < side; ++k) block(row, m * side + k) = w * std::conj(T(m, k));
          }
        }
      }
      gram.noalias() += block.adjoint() * block;
    }
  }
  return gram / (std::numbers::pi * std::numbers::pi);
}

}  // namespace holosqueeze
