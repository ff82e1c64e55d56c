#include "holosqueeze/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "holosqueeze/hermite.hpp"

namespace holosqueeze {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_open_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": alpha must lie in the open interval (0,1)");
  }
}

}  // namespace

void OscillatorGeometry::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(a) || !ok(b) || !ok(hbar)) {
    throw std::invalid_argument("OscillatorGeometry: a, b and hbar must be finite and positive");
  }
}

QuadraticGaussian::QuadraticGaussian(const Eigen::Matrix2d& M) : M_(M) {
  if (std::abs(M(0, 1) - M(1, 0)) > 1e-12 * M.norm()) {
    throw std::invalid_argument("QuadraticGaussian: M must be symmetric");
  }
  const double det = M.determinant();
  if (!(M(0, 0) > 0.0) || !(det > 0.0)) {
    throw std::invalid_argument("QuadraticGaussian: M must be positive definite");
  }
  prefactor_ = std::pow(det / (std::numbers::pi * std::numbers::pi), 0.25);
}

double QuadraticGaussian::operator()(double x1, double x2) const {
  const Eigen::Vector2d r(x1, x2);
  return prefactor_ * std::exp(-0.5 * r.dot(M_ * r));
}

WaveFunction QuadraticGaussian::wave_function() const {
  const QuadraticGaussian g = *this;
  return {[g](double x1, double x2) { return cplx(g(x1, x2), 0.0); }, M_, Eigen::Vector2d::Zero()};
}

cplx psi1(double x1, double x2, const OscillatorGeometry& geom, const DisplacementLabels& labels,
          double alpha) {
  geom.validate();
  require_open_alpha(alpha, "psi1");
  const double a = geom.a, b = geom.b;
  const double r1 = labels.z1.real(), i1 = labels.z1.imag();
  const double r2 = labels.z2.real(), i2 = labels.z2.imag();
  const double d1 = x1 - std::sqrt(2.0 * alpha) / a * r1;
  const double d2 = x2 - std::sqrt(2.0 * alpha) / b * r2;
  const double envelope = -a * a / (2.0 * alpha) * d1 * d1 - b * b / (2.0 * alpha) * d2 * d2;
  const double phase = std::sqrt(2.0 / alpha) * (a * x1 * i1 + b * x2 * i2) - (r1 * i1 + r2 * i2);
  return std::sqrt(a * b / (std::numbers::pi * alpha)) * std::exp(envelope + kI * phase);
}

cplx psi2(double x1, double x2, const OscillatorGeometry& geom, const DisplacementLabels& labels,
          double alpha) {
  geom.validate();
  require_open_alpha(alpha, "psi2");
  const double a = geom.a, b = geom.b;
  const double r1 = labels.z1.real(), i1 = labels.z1.imag();
  const double r2 = labels.z2.real(), i2 = labels.z2.imag();
  const double s = std::sqrt(2.0 * alpha);
  const double d1 = x1 - ((alpha + 1.0) * r1 + (alpha - 1.0) * r2) / (a * s);
  const double d2 = x2 - ((alpha - 1.0) * r1 + (alpha + 1.0) * r2) / (b * s);
  const double diag = (1.0 + alpha * alpha) / (4.0 * alpha);
  const double cross = (1.0 - alpha * alpha) / (2.0 * alpha);
  const double envelope = -diag * a * a * d1 * d1 - diag * b * b * d2 * d2 - cross * a * b * d1 * d2;
  const double phase = a * x1 / s * ((1.0 + alpha) * i1 + (1.0 - alpha) * i2) +
                       b * x2 / s * ((1.0 + alpha) * i2 + (1.0 - alpha) * i1) -
                       (r1 * i1 + r2 * i2);
  return std::sqrt(a * b / std::numbers::pi) * std::exp(envelope + kI * phase);
}

cplx psi(SqueezeMode k, double x1, double x2, const OscillatorGeometry& geom,
         const DisplacementLabels& labels, double alpha) {
  return k == SqueezeMode::kProduct ? psi1(x1, x2, geom, labels, alpha)
                                    : psi2(x1, x2, geom, labels, alpha);
}

WaveFunction make_wave_function(SqueezeMode k, const OscillatorGeometry& geom,
                                const DisplacementLabels& labels, double alpha) {
  const QuadraticGaussian g = unshifted_gaussian(k, alpha, geom);
  const ShiftParams s = shift_params(k, alpha, geom, labels);
  return {[k, geom, labels, alpha](double x1, double x2) {
            return psi(k, x1, x2, geom, labels, alpha);
          },
          g.matrix(), Eigen::Vector2d(s.y1, s.y2)};
}

double fock_position_basis(int m, int n, double x1, double x2, const OscillatorGeometry& geom) {
  geom.validate();
  if (m < 0 || n < 0) throw std::invalid_argument("fock_position_basis: negative index");
  const auto u = hermite_functions(m, geom.a * x1);
  const auto v = hermite_functions(n, geom.b * x2);
  return std::sqrt(geom.a * geom.b) * u[m] * v[n];
}

cplx series_expansion_psi(SqueezeMode k, int N, double x1, double x2,
                          const OscillatorGeometry& geom, const DisplacementLabels& labels,
                          double alpha) {
  geom.validate();
  if (N < 0) throw std::invalid_argument("series_expansion_psi: negative truncation");
  const Eigen::MatrixXcd phi = bargmann_coefficients(k, alpha, labels, N);
  const auto u = hermite_functions(N, geom.a * x1);
  const auto v = hermite_functions(N, geom.b * x2);
  const Eigen::Map<const Eigen::VectorXd> uv(u.data(), N + 1);
  const Eigen::Map<const Eigen::VectorXd> vv(v.data(), N + 1);
  const cplx sum = uv.cast<cplx>().transpose() * phi * vv.cast<cplx>();
  return std::sqrt(geom.a * geom.b) * sum;
}

Eigen::MatrixXcd bargmann_coefficients(SqueezeMode k, double alpha,
                                       const DisplacementLabels& labels, int truncation) {
  const double damping = std::exp(-0.5 * (std::norm(labels.z1) + std::norm(labels.z2)));
  return damping * coefficient_table(k, alpha, labels.z1, labels.z2, truncation);
}

ShiftParams shift_params(SqueezeMode k, double alpha, const OscillatorGeometry& geom,
                         const DisplacementLabels& labels) {
  geom.validate();
  require_open_alpha(alpha, "shift_params");
  const double a = geom.a, b = geom.b, hbar = geom.hbar;
  const double r1 = labels.z1.real(), i1 = labels.z1.imag();
  const double r2 = labels.z2.real(), i2 = labels.z2.imag();
  if (k == SqueezeMode::kProduct) {
    return {std::sqrt(2.0 * alpha) / a * r1, std::sqrt(2.0 * alpha) / b * r2,
            hbar * std::sqrt(2.0 / alpha) * a * i1, hbar * std::sqrt(2.0 / alpha) * b * i2};
  }
  const double s = std::sqrt(2.0 * alpha);
  return {((alpha + 1.0) * r1 + (alpha - 1.0) * r2) / (a * s),
          ((alpha - 1.0) * r1 + (alpha + 1.0) * r2) / (b * s),
          hbar * a / s * ((1.0 + alpha) * i1 + (1.0 - alpha) * i2),
          hbar * b / s * ((1.0 + alpha) * i2 + (1.0 - alpha) * i1)};
}

cplx heisenberg_weyl_shift(const ShiftParams& p, const WaveEvaluator& f, double x1, double x2,
                           double hbar) {
  if (!(hbar > 0.0)) throw std::invalid_argument("heisenberg_weyl_shift: hbar must be positive");
  const double phase = (p.q1 * x1 + p.q2 * x2 - 0.5 * (p.q1 * p.y1 + p.q2 * p.y2)) / hbar;
  return std::exp(kI * phase) * f(x1 - p.y1, x2 - p.y2);
}

WaveFunction shifted(const WaveFunction& f, const ShiftParams& params, double hbar) {
  const WaveEvaluator inner = f.eval;
  return {[inner, params, hbar](double x1, double x2) {
            return heisenberg_weyl_shift(params, inner, x1, x2, hbar);
          },
          f.envelope, f.center + Eigen::Vector2d(params.y1, params.y2)};
}

QuadraticGaussian unshifted_gaussian(SqueezeMode k, double alpha, const OscillatorGeometry& geom) {
  geom.validate();
  require_open_alpha(alpha, "unshifted_gaussian");
  const double a = geom.a, b = geom.b;
  Eigen::Matrix2d M;
  if (k == SqueezeMode::kProduct) {
    M << a * a / alpha, 0.0, 0.0, b * b / alpha;
  } else {
    const double diag = (1.0 + alpha * alpha) / (2.0 * alpha);
    const double off = (1.0 - alpha * alpha) / (2.0 * alpha);
    M << diag * a * a, off * a * b, off * a * b, diag * b * b;
  }
  return QuadraticGaussian(M);
}

cplx segal_bargmann_kernel(double x1, double x2, cplx w1, cplx w2,
                           const OscillatorGeometry& geom) {
  geom.validate();
  const double a = geom.a, b = geom.b;
  const cplx e1 = -0.5 * (w1 * w1 + w2 * w2 + a * a * x1 * x1 + b * b * x2 * x2);
  const cplx e2 = std::sqrt(2.0) * (a * x1 * w1 + b * x2 * w2) - std::norm(w1) - std::norm(w2);
  return std::sqrt(a * b / std::numbers::pi) * std::exp(e1 + e2);
}

namespace {

// Single-mode factor of the kernel: exp(-w^2/2 - (c x)^2/2 + sqrt(2) c x w - |w|^2).
cplx kernel_factor(double cx, cplx w) {
  return std::exp(-0.5 * w * w - 0.5 * cx * cx + std::sqrt(2.0) * cx * w - std::norm(w));
}

struct ComplexPlaneRule {
  std::vector<cplx> points;
  std::vector<cplx> weighted_kernel;  // quadrature weight times kernel factor
};

// Rule over w = u + i v for one mode: |kernel| ~ exp(-3u^2/2 + sqrt(2) c x u - v^2/2).
ComplexPlaneRule complex_plane_rule(const GaussHermiteRule& rule, double cx) {
  const AxisRule ur = adapted_axis_rule(rule, 1.5, std::sqrt(2.0) * cx / 3.0);
  const AxisRule vr = adapted_axis_rule(rule, 0.5, 0.0);
  ComplexPlaneRule out;
  out.points.reserve(ur.points.size() * vr.points.size());
  out.weighted_kernel.reserve(out.points.capacity());
  for (std::size_t i = 0; i < ur.points.size(); ++i) {
    for (std::size_t j = 0; j < vr.points.size(); ++j) {
      const cplx w(ur.points[i], vr.points[j]);
      out.points.push_back(w);
      out.weighted_kernel.push_back(ur.weights[i] * vr.weights[j] * kernel_factor(cx, w));
    }
  }
  return out;
}

cplx inverse_sb_generic(const BargmannEvaluator& psi_b, double x1, double x2,
                        const OscillatorGeometry& geom, int order) {
  const GaussHermiteRule rule = gauss_hermite(order);
  const ComplexPlaneRule r1 = complex_plane_rule(rule, geom.a * x1);
  const ComplexPlaneRule r2 = complex_plane_rule(rule, geom.b * x2);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < r1.points.size(); ++i) {
    cplx inner = 0.0;
    for (std::size_t j = 0; j < r2.points.size(); ++j) {
      inner += r2.weighted_kernel[j] * psi_b(r1.points[i], r2.points[j]);
    }
    sum += r1.weighted_kernel[i] * inner;
  }
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return std::sqrt(geom.a * geom.b / std::numbers::pi) * sum / pi2;
}

// Moments sum_i W_i K_i conj(w_i)^m / sqrt(m!) for m <= n_max.
Eigen::VectorXcd monomial_moments(const ComplexPlaneRule& r, int n_max) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n_max + 1);
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const cplx wb = std::conj(r.points[i]);
    cplx term = r.weighted_kernel[i];
    out(0) += term;
    for (int m = 1; m <= n_max; ++m) {
      term *= wb / std::sqrt(double(m));
      out(m) += term;
    }
  }
  return out;
}

cplx inverse_sb_series(const Eigen::MatrixXcd& c, double x1, double x2,
                       const OscillatorGeometry& geom, int order) {
  const GaussHermiteRule rule = gauss_hermite(order);
  const Eigen::VectorXcd P = monomial_moments(complex_plane_rule(rule, geom.a * x1), c.rows() - 1);
  const Eigen::VectorXcd Q = monomial_moments(complex_plane_rule(rule, geom.b * x2), c.cols() - 1);
  const cplx sum = P.transpose() * c * Q;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return std::sqrt(geom.a * geom.b / std::numbers::pi) * sum / pi2;
}

QuadratureResult compare_orders(cplx coarse, cplx fine, int order, double tol) {
  QuadratureResult r;
  r.order = order;
  r.coarse = coarse;
  r.value = fine;
  r.difference = std::abs(fine - coarse);
  r.scale = std::max(std::abs(fine), 1.0);
  r.converged = r.difference <= tol * r.scale;
  return r;
}

}  // namespace

QuadratureResult inverse_segal_bargmann(const BargmannEvaluator& psi_b, double x1, double x2,
                                        const OscillatorGeometry& geom, int order, double tol) {
  geom.validate();
  if (order < 1) throw std::invalid_argument("inverse_segal_bargmann: order must be >= 1");
  const cplx coarse = inverse_sb_generic(psi_b, x1, x2, geom, order);
  const cplx fine = inverse_sb_generic(psi_b, x1, x2, geom, 2 * order);
  return compare_orders(coarse, fine, order, tol);
}

QuadratureResult inverse_segal_bargmann(const Eigen::MatrixXcd& monomial_coefficients, double x1,
                                        double x2, const OscillatorGeometry& geom, int order,
                                        double tol) {
  geom.validate();
  if (order < 1) throw std::invalid_argument("inverse_segal_bargmann: order must be >= 1");
  if (monomial_coefficients.size() == 0) {
    throw std::invalid_argument("inverse_segal_bargmann: empty coefficient matrix");
  }
  const cplx coarse = inverse_sb_series(monomial_coefficients, x1, x2, geom, order);
  const cplx fine = inverse_sb_series(monomial_coefficients, x1, x2, geom, 2 * order);
  return compare_orders(coarse, fine, order, tol);
}

}  // namespace holosqueeze
