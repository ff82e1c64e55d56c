#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "holosqueeze/basis.hpp"
#include "holosqueeze/quadrature.hpp"

namespace holosqueeze {

/// Inverse oscillator lengths along x1 and x2, plus the action unit.
struct OscillatorGeometry {
  double a = 1.0;
  double b = 1.0;
  double hbar = 1.0;

  /// Throws std::invalid_argument unless a, b and hbar are finite and positive.
  void validate() const;
};

/// Complex phase-space labels z1, z2 of the displaced state.
struct DisplacementLabels {
  cplx z1{0.0, 0.0};
  cplx z2{0.0, 0.0};
};

/// Heisenberg-Weyl translation: positions (y1, y2) and momenta (q1, q2).
struct ShiftParams {
  double y1 = 0.0;
  double y2 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;

  Eigen::Vector4d as_vector() const { return {y1, y2, q1, q2}; }
};

using WaveEvaluator = std::function<cplx(double, double)>;

/// A two-particle wave function: evaluator plus the Gaussian envelope
/// |f(x)| ~ exp(-(x - center)^T envelope (x - center) / 2) used to place
/// quadrature nodes.
struct WaveFunction {
  WaveEvaluator eval;
  Eigen::Matrix2d envelope = Eigen::Matrix2d::Identity();
  Eigen::Vector2d center = Eigen::Vector2d::Zero();

  cplx operator()(double x1, double x2) const { return eval(x1, x2); }
};

/// Centered normalized Gaussian (det M / pi^2)^{1/4} exp(-r^T M r / 2).
class QuadraticGaussian {
 public:
  /// Throws std::invalid_argument unless M is symmetric positive definite.
  explicit QuadraticGaussian(const Eigen::Matrix2d& M);

  const Eigen::Matrix2d& matrix() const { return M_; }
  double norm_prefactor() const { return prefactor_; }
  double operator()(double x1, double x2) const;
  WaveFunction wave_function() const;

 private:
  Eigen::Matrix2d M_;
  double prefactor_;
};

/// Displaced coherent state with independently squeezed modes.
cplx psi1(double x1, double x2, const OscillatorGeometry& geom, const DisplacementLabels& labels,
          double alpha);

/// Displaced coherent state with jointly squeezed modes; not a product for alpha < 1.
cplx psi2(double x1, double x2, const OscillatorGeometry& geom, const DisplacementLabels& labels,
          double alpha);

cplx psi(SqueezeMode k, double x1, double x2, const OscillatorGeometry& geom,
         const DisplacementLabels& labels, double alpha);

/// psi_k packaged with its envelope.
WaveFunction make_wave_function(SqueezeMode k, const OscillatorGeometry& geom,
                                const DisplacementLabels& labels, double alpha);

/// Product Fock state <x1, x2 | m, n> for oscillators with inverse lengths a, b.
double fock_position_basis(int m, int n, double x1, double x2, const OscillatorGeometry& geom);

/// exp(-(|z1|^2 + |z2|^2) / 2) sum_{m,n<=N} phi_{k,(m,n)} <x1, x2 | m, n>.
cplx series_expansion_psi(SqueezeMode k, int N, double x1, double x2,
                          const OscillatorGeometry& geom, const DisplacementLabels& labels,
                          double alpha);

/// Translation that carries the centered Gaussian of mode k onto psi_k.
/// Momenta are in units of hbar times the dimensionless label parts.
ShiftParams shift_params(SqueezeMode k, double alpha, const OscillatorGeometry& geom,
                         const DisplacementLabels& labels);

/// exp[(i/hbar)(q.x - q.y / 2)] f(x - y).
cplx heisenberg_weyl_shift(const ShiftParams& params, const WaveEvaluator& f, double x1, double x2,
                           double hbar);

/// Shifted copy of a wave function (envelope center moves with it).
WaveFunction shifted(const WaveFunction& f, const ShiftParams& params, double hbar);

/// Quadratic form of the centered psi_k.
QuadraticGaussian unshifted_gaussian(SqueezeMode k, double alpha, const OscillatorGeometry& geom);

/// Segal-Bargmann kernel <x1, x2 | w1, w2>, including the exp(-|w1|^2 - |w2|^2) factor.
cplx segal_bargmann_kernel(double x1, double x2, cplx w1, cplx w2,
                           const OscillatorGeometry& geom);

using BargmannEvaluator = std::function<cplx(cplx, cplx)>;

/// pi^{-2} int dw1 dw2 <x|w> psi_B(w1, w2) by a 4-dimensional tensor
/// Gauss-Hermite rule, adapted per axis to the kernel's Gaussian decay.
/// Evaluated at `order` and 2 * order.
QuadratureResult inverse_segal_bargmann(const BargmannEvaluator& psi_b, double x1, double x2,
                                        const OscillatorGeometry& geom, int order = 24,
                                        double tol = 1e-8);

/// Bargmann function given by monomial coefficients,
/// psi_B(w) = sum_{m,n} c(m, n) conj(w1)^m conj(w2)^n / sqrt(m! n!).
/// Exploits the separable structure of the kernel and monomials.
QuadratureResult inverse_segal_bargmann(const Eigen::MatrixXcd& monomial_coefficients, double x1,
                                        double x2, const OscillatorGeometry& geom,
                                        int order = 24, double tol = 1e-8);

/// Monomial coefficients of psi_k in the Bargmann space:
/// exp(-(|z1|^2 + |z2|^2) / 2) phi_{k,(m,n)}(z1, z2) for m, n <= truncation.
Eigen::MatrixXcd bargmann_coefficients(SqueezeMode k, double alpha,
                                       const DisplacementLabels& labels, int truncation);

}  // namespace holosqueeze
