#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

#include "holosqueeze/basis.hpp"
#include "holosqueeze/quadrature.hpp"
#include "holosqueeze/states.hpp"

namespace holosqueeze {

// Phase-space ordering throughout: (x1, x2, p1, p2).

struct CovarianceMatrix {
  Eigen::Matrix4d sigma = Eigen::Matrix4d::Identity();
  double hbar = 1.0;

  /// Throws std::invalid_argument if sigma is not symmetric or hbar is not positive.
  void validate() const;
};

/// J = [[0, I], [-I, 0]].
Eigen::Matrix4d symplectic_form();

struct PhaseSpacePoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;

  Eigen::Vector4d as_vector() const { return {x1, x2, p1, p2}; }
};

/// Ascending symplectic eigenvalues.
struct SymplecticSpectrum {
  std::array<double, 2> values{};

  double min() const { return values[0]; }
  double max() const { return values[1]; }
};

/// Phase-space Gaussian (pi hbar)^{-2} exp(-(g - mean)^T Sigma^{-1} (g - mean) / 2)
/// of a pure Gaussian state.
class GaussianWigner {
 public:
  GaussianWigner(const CovarianceMatrix& cov, const Eigen::Vector4d& mean);

  const CovarianceMatrix& covariance() const { return cov_; }
  const Eigen::Vector4d& mean() const { return mean_; }
  double operator()(const PhaseSpacePoint& pt) const;
  double operator()(const Eigen::Vector4d& g) const;

 private:
  CovarianceMatrix cov_;
  Eigen::Vector4d mean_;
  Eigen::Matrix4d precision_;
};

/// Closed-form Wigner function of a centered Gaussian: Sigma = blockdiag(M^{-1}/2, hbar^2 M/2).
GaussianWigner wigner_gaussian(const QuadraticGaussian& g, double hbar);

/// Closed-form Wigner function of psi_k, centered at its Heisenberg-Weyl shift.
GaussianWigner wigner_gaussian(SqueezeMode k, double alpha, const OscillatorGeometry& geom,
                               const DisplacementLabels& labels);

/// (2 pi hbar)^{-2} int dX exp(-i p.X / hbar) f(x + X/2) conj(f(x - X/2)),
/// by Gauss-Hermite quadrature in the chord variable X adapted to f's envelope.
/// Evaluated at `order` and 2 * order.
QuadratureResult wigner_numeric(const WaveFunction& f, const PhaseSpacePoint& pt, double hbar,
                                int order = 48, double tol = 1e-8);

/// Covariance of the unshifted psi_k written out entrywise.
CovarianceMatrix covariance(SqueezeMode k, double alpha, const OscillatorGeometry& geom);

struct RobertsonSchrodingerResult {
  bool physical = false;
  double margin = 0.0;  // smallest eigenvalue of Sigma + (i hbar / 2) J
};

/// Sigma + (i hbar / 2) J >= 0, with `tol` relative to max(|Sigma|, hbar).
RobertsonSchrodingerResult robertson_schrodinger_check(const CovarianceMatrix& cov,
                                                       double tol = 1e-12);

/// Lambda Sigma Lambda^T with Lambda = diag(1, 1, 1, -1).
CovarianceMatrix partial_transpose(const CovarianceMatrix& cov);

/// Eigenvalues of J Sigma paired as +-i lambda. Throws std::domain_error when
/// the eigenvalues do not form such pairs to relative 1e-10.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cov);

/// Same spectrum from -(J Sigma)^2, whose eigenvalues are lambda^2, without
/// pairing: largest lambda^2 by a symmetric eigensolve, smallest from det Sigma.
SymplecticSpectrum symplectic_spectrum_squared(const CovarianceMatrix& cov);

enum class Separability { kSeparable, kEntangled };
std::string to_string(Separability s);

struct PptVerdict {
  Separability verdict = Separability::kSeparable;
  double lambda_min = 0.0;
  double margin = 0.0;         // lambda_min - hbar / 2
  bool indeterminate = false;  // |margin| within the separability tolerance
};

/// Relative tolerance on lambda_min >= hbar / 2.
inline constexpr double kSeparabilityTolerance = 1e-10;

/// Simon criterion on the partially transposed covariance. Throws
/// std::invalid_argument when cov fails the Robertson-Schrodinger check.
PptVerdict ppt_separable(const CovarianceMatrix& cov);

/// max(ln(hbar / (2 lambda_min)), 0), natural logarithm.
double log_negativity(const CovarianceMatrix& cov);

}  // namespace holosqueeze
