#include "holosqueeze/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace holosqueeze {

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  if (n <= 20) {
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
    return static_cast<double>(f);
  }
  return std::exp(std::lgamma(n + 1.0));
}

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  if (n <= 20) return std::log(factorial(n));
  return std::lgamma(n + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= 20) return factorial(n) / (factorial(k) * factorial(n - k));
  return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

double hermite_real(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_real: negative order");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx hermite_holo(int n, cplx z) {
  if (n < 0) throw std::invalid_argument("hermite_holo: negative order");
  if (n == 0) return 1.0;
  cplx prev = 1.0;
  cplx cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const cplx next = 2.0 * z * cur - 2.0 * double(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<cplx> hermite_holo_normalized(int n_max, cplx z) {
  if (n_max < 0) throw std::invalid_argument("hermite_holo_normalized: negative order");
  std::vector<cplx> out(n_max + 1);
  out[0] = 1.0;
  if (n_max >= 1) out[1] = std::sqrt(2.0) * z;
  for (int l = 1; l < n_max; ++l) {
    out[l + 1] = z * std::sqrt(2.0 / (l + 1)) * out[l] - std::sqrt(double(l) / (l + 1)) * out[l - 1];
  }
  return out;
}

std::vector<double> hermite_functions(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("hermite_functions: negative order");
  std::vector<double> out(n_max + 1);
  out[0] = std::exp(-0.5 * x * x) / std::pow(std::numbers::pi, 0.25);
  if (n_max >= 1) out[1] = std::sqrt(2.0) * x * out[0];
  for (int l = 1; l < n_max; ++l) {
    out[l + 1] = x * std::sqrt(2.0 / (l + 1)) * out[l] - std::sqrt(double(l) / (l + 1)) * out[l - 1];
  }
  return out;
}

cplx hermite_complex_2v(int m, int n, cplx z1, cplx z2) {
  if (m < 0 || n < 0) throw std::invalid_argument("hermite_complex_2v: negative index");
  if (m < n) {
    std::swap(m, n);
    std::swap(z1, z2);
  }
  // G_k = H_{a+k,k} with a = m - n; G_k is z1^a times a scaled Laguerre polynomial in z1 z2.
  const int a = m - n;
  const cplx x = z1 * z2;
  cplx lead = 1.0;
  for (int k = 0; k < a; ++k) lead *= z1;
  if (n == 0) return lead;
  cplx prev = lead;
  cplx cur = lead * (x - double(a + 1));
  for (int k = 1; k < n; ++k) {
    const cplx next = (x - double(2 * k + 1 + a)) * cur - double(k) * double(k + a) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Eigen::MatrixXcd hermite_complex_2v_normalized(int m_max, int n_max, cplx z1, cplx z2) {
  if (m_max < 0 || n_max < 0) {
    throw std::invalid_argument("hermite_complex_2v_normalized: negative size");
  }
  Eigen::MatrixXcd T(m_max + 1, n_max + 1);
  T(0, 0) = 1.0;
  for (int n = 0; n < n_max; ++n) T(0, n + 1) = z2 * T(0, n) / std::sqrt(double(n + 1));
  for (int m = 0; m < m_max; ++m) {
    const double inv = 1.0 / std::sqrt(double(m + 1));
    T(m + 1, 0) = z1 * T(m, 0) * inv;
    for (int n = 1; n <= n_max; ++n) {
      T(m + 1, n) = (z1 * T(m, n) - std::sqrt(double(n)) * T(m, n - 1)) * inv;
    }
  }
  return T;
}

SeriesComparison mehler_product(double t, cplx z1, cplx z2, int N) {
  if (!(std::abs(t) < 1.0)) throw std::domain_error("mehler_product: requires |t| < 1");
  if (N < 0) throw std::invalid_argument("mehler_product: negative truncation");
  const auto h1 = hermite_holo_normalized(N, z1);
  const auto h2 = hermite_holo_normalized(N, z2);
  cplx series = 0.0;
  double tl = 1.0;
  for (int l = 0; l <= N; ++l) {
    series += tl * h1[l] * h2[l];
    tl *= t;
  }
  const double d = 1.0 - t * t;
  const cplx closed = std::exp((2.0 * t * z1 * z2 - t * t * (z1 * z1 + z2 * z2)) / d) / std::sqrt(d);
  return {series, closed};
}

SeriesComparison mehler_two_variable(double s, double t, cplx z1, cplx z2, double u, double v,
                                     int N) {
  if (!(std::abs(s * t) < 1.0)) throw std::domain_error("mehler_two_variable: requires |st| < 1");
  if (N < 0) throw std::invalid_argument("mehler_two_variable: negative truncation");
  const Eigen::MatrixXcd H = hermite_complex_2v_normalized(N, N, z1, z2);
  const auto hu = hermite_holo_normalized(N, u);
  const auto hv = hermite_holo_normalized(N, v);

  cplx series = 0.0;
  double sm = 1.0;
  for (int m = 0; m <= N; ++m) {
    cplx row = 0.0;
    double tn = 1.0;
    for (int n = 0; n <= N; ++n) {
      row += tn * H(m, n) * hv[n];
      tn *= t;
    }
    series += sm * hu[m] * row;
    sm *= s;
  }

  const double st = s * t;
  const double d = 1.0 - st * st;
  const double r2 = std::sqrt(2.0);
  const cplx e1 = (2.0 * r2 * (s * u * z1 + t * v * z2 + st * (s * v * z1 + t * u * z2)) -
                   s * s * z1 * z1 - t * t * z2 * z2) /
                  (2.0 * d);
  const cplx e2 = (-4.0 * st * u * v - 2.0 * st * st * (z1 * z2 + u * u + v * v)) / (2.0 * d);
  const cplx closed = std::exp(e1 + e2) / std::sqrt(d);
  return {series, closed};
}

double orthogonality_constant(int m, int n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("orthogonality_constant: alpha must lie in (0,1)");
  }
  if (m != n) return 0.0;
  const double base = std::numbers::pi * std::sqrt(alpha) / (1.0 - alpha);
  const double ratio = 2.0 * (1.0 + alpha) / (1.0 - alpha);
  return base * std::exp(n * std::log(ratio) + log_factorial(n));
}

namespace {

struct OrthogonalitySums {
  cplx cross;
  double norm_m = 0;
  double norm_n = 0;
};

OrthogonalitySums orthogonality_sums(int m, int n, double alpha, int order) {
  const GaussHermiteRule rule = gauss_hermite(order);
  const double sx = 1.0 / std::sqrt(1.0 - alpha);
  const double sy = 1.0 / std::sqrt(1.0 / alpha - 1.0);
  OrthogonalitySums out;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = sx * rule.nodes[i];
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const cplx z(x, sy * rule.nodes[j]);
      const double w = rule.weights[i] * rule.weights[j];
      const cplx hm = hermite_holo(m, z);
      const cplx hn = (m == n) ? hm : hermite_holo(n, z);
      out.cross += w * hm * std::conj(hn);
      out.norm_m += w * std::norm(hm);
      out.norm_n += w * std::norm(hn);
    }
  }
  const double jac = sx * sy;
  out.cross *= jac;
  out.norm_m *= jac;
  out.norm_n *= jac;
  return out;
}

}  // namespace

QuadratureResult orthogonality_integral(int m, int n, double alpha, int order, double tol) {
  if (m < 0 || n < 0) throw std::invalid_argument("orthogonality_integral: negative index");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("orthogonality_integral: alpha must lie in (0,1)");
  }
  if (order < 1) throw std::invalid_argument("orthogonality_integral: order must be >= 1");
  const OrthogonalitySums coarse = orthogonality_sums(m, n, alpha, order);
  const OrthogonalitySums fine = orthogonality_sums(m, n, alpha, 2 * order);

  QuadratureResult r;
  r.order = order;
  r.value = fine.cross;
  r.coarse = coarse.cross;
  r.difference = std::abs(fine.cross - coarse.cross);
  r.scale = std::sqrt(fine.norm_m * fine.norm_n);
  r.converged = r.difference <= tol * r.scale;
  return r;
}

}  // namespace holosqueeze
