#include "holosqueeze/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace holosqueeze {

void CovarianceMatrix::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("CovarianceMatrix: hbar must be finite and positive");
  }
  if (!sigma.allFinite()) throw std::invalid_argument("CovarianceMatrix: non-finite entries");
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12 * sigma.cwiseAbs().maxCoeff()) {
    throw std::invalid_argument("CovarianceMatrix: sigma must be symmetric");
  }
}

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
  J.topRightCorner<2, 2>() = Eigen::Matrix2d::Identity();
  J.bottomLeftCorner<2, 2>() = -Eigen::Matrix2d::Identity();
  return J;
}

GaussianWigner::GaussianWigner(const CovarianceMatrix& cov, const Eigen::Vector4d& mean)
    : cov_(cov), mean_(mean) {
  cov_.validate();
  Eigen::LLT<Eigen::Matrix4d> llt(cov_.sigma);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("GaussianWigner: covariance must be positive definite");
  }
  precision_ = llt.solve(Eigen::Matrix4d::Identity());
}

double GaussianWigner::operator()(const Eigen::Vector4d& g) const {
  const Eigen::Vector4d d = g - mean_;
  const double pih = std::numbers::pi * cov_.hbar;
  return std::exp(-0.5 * d.dot(precision_ * d)) / (pih * pih);
}

double GaussianWigner::operator()(const PhaseSpacePoint& pt) const {
  return (*this)(pt.as_vector());
}

GaussianWigner wigner_gaussian(const QuadraticGaussian& g, double hbar) {
  if (!(hbar > 0.0)) throw std::invalid_argument("wigner_gaussian: hbar must be positive");
  const Eigen::Matrix2d& M = g.matrix();
  CovarianceMatrix cov;
  cov.hbar = hbar;
  cov.sigma.setZero();
  cov.sigma.topLeftCorner<2, 2>() = 0.5 * M.inverse();
  cov.sigma.bottomRightCorner<2, 2>() = 0.5 * hbar * hbar * M;
  return GaussianWigner(cov, Eigen::Vector4d::Zero());
}

GaussianWigner wigner_gaussian(SqueezeMode k, double alpha, const OscillatorGeometry& geom,
                               const DisplacementLabels& labels) {
  const GaussianWigner centered = wigner_gaussian(unshifted_gaussian(k, alpha, geom), geom.hbar);
  return GaussianWigner(centered.covariance(), shift_params(k, alpha, geom, labels).as_vector());
}

namespace {

cplx wigner_sum(const WaveFunction& f, const Eigen::Vector4d& g, double hbar, int order) {
  const Eigen::Matrix2d A = 0.25 * f.envelope;
  const auto grid = gaussian_adapted_grid<2>(A, Eigen::Vector2d::Zero(), order);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const Eigen::Vector2d& X = grid.points[i];
    const cplx phase = std::exp(cplx(0.0, -(g(2) * X(0) + g(3) * X(1)) / hbar));
    const cplx fp = f(g(0) + 0.5 * X(0), g(1) + 0.5 * X(1));
    const cplx fm = f(g(0) - 0.5 * X(0), g(1) - 0.5 * X(1));
    sum += grid.weights[i] * phase * fp * std::conj(fm);
  }
  const double twopih = 2.0 * std::numbers::pi * hbar;
  return sum / (twopih * twopih);
}

}  // namespace

QuadratureResult wigner_numeric(const WaveFunction& f, const PhaseSpacePoint& pt, double hbar,
                                int order, double tol) {
  if (!(hbar > 0.0)) throw std::invalid_argument("wigner_numeric: hbar must be positive");
  if (order < 1) throw std::invalid_argument("wigner_numeric: order must be >= 1");
  const Eigen::Vector4d g = pt.as_vector();
  QuadratureResult r;
  r.order = order;
  r.coarse = wigner_sum(f, g, hbar, order);
  r.value = wigner_sum(f, g, hbar, 2 * order);
  r.difference = std::abs(r.value - r.coarse);
  // The Wigner function of a normalized state is bounded by (pi hbar)^{-2}.
  const double pih = std::numbers::pi * hbar;
  r.scale = 1.0 / (pih * pih);
  r.converged = r.difference <= tol * r.scale;
  return r;
}

CovarianceMatrix covariance(SqueezeMode k, double alpha, const OscillatorGeometry& geom) {
  geom.validate();
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("covariance: alpha must lie in the open interval (0,1)");
  }
  const double a = geom.a, b = geom.b, h2 = geom.hbar * geom.hbar;
  CovarianceMatrix cov;
  cov.hbar = geom.hbar;
  cov.sigma.setZero();
  if (k == SqueezeMode::kProduct) {
    cov.sigma.diagonal() << alpha / (a * a), alpha / (b * b), a * a * h2 / alpha, b * b * h2 / alpha;
    cov.sigma *= 0.5;
    return cov;
  }
  const double s = 1.0 / (4.0 * alpha);
  const double p = 1.0 + alpha * alpha, m = 1.0 - alpha * alpha;
  cov.sigma(0, 0) = s * p / (a * a);
  cov.sigma(1, 1) = s * p / (b * b);
  cov.sigma(0, 1) = cov.sigma(1, 0) = -s * m / (a * b);
  cov.sigma(2, 2) = s * p * a * a * h2;
  cov.sigma(3, 3) = s * p * b * b * h2;
  cov.sigma(2, 3) = cov.sigma(3, 2) = s * m * a * b * h2;
  return cov;
}

RobertsonSchrodingerResult robertson_schrodinger_check(const CovarianceMatrix& cov, double tol) {
  cov.validate();
  const Eigen::Matrix4cd H =
      cov.sigma.cast<cplx>() + cplx(0.0, 0.5 * cov.hbar) * symplectic_form().cast<cplx>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(H, Eigen::EigenvaluesOnly);
  RobertsonSchrodingerResult r;
  r.margin = eig.eigenvalues().minCoeff();
  const double scale = std::max(cov.sigma.cwiseAbs().maxCoeff(), cov.hbar);
  r.physical = r.margin >= -tol * scale;
  return r;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cov) {
  const Eigen::Vector4d lambda(1.0, 1.0, 1.0, -1.0);
  CovarianceMatrix out = cov;
  out.sigma = lambda.asDiagonal() * cov.sigma * lambda.asDiagonal();
  return out;
}

namespace {

constexpr double kPairingTolerance = 1e-10;

SymplecticSpectrum sorted_spectrum(double l1, double l2) {
  SymplecticSpectrum s;
  s.values = {std::min(l1, l2), std::max(l1, l2)};
  return s;
}

}  // namespace

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cov) {
  cov.validate();
  const Eigen::Matrix4d JS = symplectic_form() * cov.sigma;
  std::vector<cplx> ev;
  Eigen::EigenSolver<Eigen::Matrix4d> eig(JS, false);
  if (eig.info() == Eigen::Success) {
    ev.assign(eig.eigenvalues().begin(), eig.eigenvalues().end());
  } else {
    // The real Schur iteration can stall on nearly doubled +-i lambda pairs.
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> ceig(JS.cast<cplx>(), false);
    if (ceig.info() != Eigen::Success) {
      throw std::domain_error("symplectic_spectrum: eigenvalue solver failed");
    }
    ev.assign(ceig.eigenvalues().begin(), ceig.eigenvalues().end());
  }
  const double scale = std::max_element(ev.begin(), ev.end(), [](cplx x, cplx y) {
                         return std::abs(x) < std::abs(y);
                       })->imag();
  const double tol = kPairingTolerance * std::max(std::abs(scale), 1e-300);
  std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) { return x.imag() < y.imag(); });
  // Sorted by imaginary part: -i l_max, -i l_min, +i l_min, +i l_max.
  for (const cplx& e : ev) {
    if (std::abs(e.real()) > tol) {
      throw std::domain_error("symplectic_spectrum: eigenvalues of J Sigma are not purely imaginary");
    }
  }
  if (!(ev[2].imag() > 0.0) || std::abs(ev[0].imag() + ev[3].imag()) > tol ||
      std::abs(ev[1].imag() + ev[2].imag()) > tol) {
    throw std::domain_error("symplectic_spectrum: eigenvalues do not pair as +-i lambda");
  }
  return sorted_spectrum(0.5 * (ev[2].imag() - ev[1].imag()), 0.5 * (ev[3].imag() - ev[0].imag()));
}

SymplecticSpectrum symplectic_spectrum_squared(const CovarianceMatrix& cov) {
  cov.validate();
  // -(J Sigma)^2 = (J^T Sigma J) Sigma is similar to the symmetric L^T (J^T Sigma J) L
  // with Sigma = L L^T. Its eigenvalues lambda^2 each appear twice.
  Eigen::LLT<Eigen::Matrix4d> llt(cov.sigma);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("symplectic_spectrum_squared: sigma is not positive definite");
  }
  const Eigen::Matrix4d J = symplectic_form();
  const Eigen::Matrix4d L = llt.matrixL();
  const Eigen::Matrix4d S = L.transpose() * (J.transpose() * cov.sigma * J) * L;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(0.5 * (S + S.transpose()), Eigen::EigenvaluesOnly);
  const double mu_max = eig.eigenvalues()(3);
  // The product of the two distinct lambda^2 is det Sigma; dividing keeps the
  // small one accurate when the spectrum is spread out.
  const double det = std::pow(L.diagonal().prod(), 2);
  return sorted_spectrum(std::sqrt(det / mu_max), std::sqrt(mu_max));
}

std::string to_string(Separability s) {
  return s == Separability::kSeparable ? "SEPARABLE" : "ENTANGLED";
}

PptVerdict ppt_separable(const CovarianceMatrix& cov) {
  if (!robertson_schrodinger_check(cov).physical) {
    throw std::invalid_argument("ppt_separable: covariance violates the Robertson-Schrodinger relation");
  }
  const SymplecticSpectrum s = symplectic_spectrum(partial_transpose(cov));
  const double half = 0.5 * cov.hbar;
  PptVerdict v;
  v.lambda_min = s.min();
  v.margin = v.lambda_min - half;
  v.verdict = v.lambda_min >= half * (1.0 - kSeparabilityTolerance) ? Separability::kSeparable
                                                                     : Separability::kEntangled;
  v.indeterminate = std::abs(v.margin) <= half * kSeparabilityTolerance;
  return v;
}

double log_negativity(const CovarianceMatrix& cov) {
  const PptVerdict v = ppt_separable(cov);
  return std::max(std::log(0.5 * cov.hbar / v.lambda_min), 0.0);
}

}  // namespace holosqueeze
