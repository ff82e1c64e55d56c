#include "holosqueeze/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace holosqueeze {

namespace {

void require_half_open_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": alpha must lie in (0,1]");
  }
}

// (1 + alpha) / (2 sqrt(alpha)) and (1 - alpha) / (2 sqrt(alpha)).
struct Bogoliubov {
  double A;
  double B;
};

Bogoliubov bogoliubov(double alpha) {
  const double s = 2.0 * std::sqrt(alpha);
  return {(1.0 + alpha) / s, (1.0 - alpha) / s};
}

// Diagonal energies and the coupling of the expanded Hamiltonian.
struct Couplings {
  double e1;
  double e2;
  double g;
};

Couplings couplings(double alpha, const OscillatorSpec& s) {
  const double p = (1.0 + alpha) * (1.0 + alpha), m = (1.0 - alpha) * (1.0 - alpha);
  return {s.hbar * (p * s.omega1 + m * s.omega2) / (4.0 * alpha),
          s.hbar * (m * s.omega1 + p * s.omega2) / (4.0 * alpha),
          s.hbar * (1.0 - alpha * alpha) * (s.omega1 + s.omega2) / (2.0 * alpha)};
}

}  // namespace

void OscillatorSpec::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(omega1) || !ok(omega2) || !ok(mass) || !ok(hbar)) {
    throw std::invalid_argument("OscillatorSpec: omega1, omega2, mass and hbar must be finite and positive");
  }
}

OscillatorGeometry ladder_geometry(const OscillatorSpec& spec) {
  spec.validate();
  return {std::sqrt(spec.mass * spec.omega1 / (2.0 * spec.hbar)),
          std::sqrt(spec.mass * spec.omega2 / (2.0 * spec.hbar)), spec.hbar};
}

OscillatorSpec spec_from_ladder_geometry(const OscillatorGeometry& geom, double mass) {
  geom.validate();
  OscillatorSpec s{2.0 * geom.hbar * geom.a * geom.a / mass, 2.0 * geom.hbar * geom.b * geom.b / mass,
                   mass, geom.hbar};
  s.validate();
  return s;
}

OscillatorGeometry position_geometry(const OscillatorGeometry& ladder) {
  ladder.validate();
  return {std::sqrt(2.0) * ladder.a, std::sqrt(2.0) * ladder.b, ladder.hbar};
}

LadderCoefficients ladder_coefficients(double alpha, cplx z1, cplx z2) {
  require_half_open_alpha(alpha, "ladder_coefficients");
  const auto [A, B] = bogoliubov(alpha);
  LadderCoefficients lc;
  lc.mu << A, 0.0, 0.0, A;
  lc.mu_tilde << 0.0, -B, -B, 0.0;
  lc.nu << 0.0, -B, -B, 0.0;
  lc.nu_tilde << A, 0.0, 0.0, A;
  lc.xi = {A * std::conj(z1) - B * z2, A * std::conj(z2) - B * z1};
  lc.zeta = {A * z1 - B * std::conj(z2), A * z2 - B * std::conj(z1)};
  return lc;
}

Eigen::MatrixXcd TruncatedOperator::interior(int margin) const {
  const int side = n_trunc - margin;
  if (side <= 0) throw std::invalid_argument("TruncatedOperator::interior: margin too large");
  std::vector<int> idx;
  idx.reserve(side * side);
  for (int m = 0; m < side; ++m) {
    for (int n = 0; n < side; ++n) idx.push_back(index(m, n));
  }
  return matrix(idx, idx);
}

Eigen::MatrixXd lowering_matrix(int n_trunc) {
  if (n_trunc < 1) throw std::invalid_argument("lowering_matrix: n_trunc must be positive");
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n_trunc, n_trunc);
  for (int n = 1; n < n_trunc; ++n) c(n - 1, n) = std::sqrt(double(n));
  return c;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = (x(i, j) * y).cast<cplx>();
    }
  }
  return out;
}

struct FockLadders {
  Eigen::MatrixXcd c1, c2, id;
};

FockLadders fock_ladders(int n_trunc) {
  const Eigen::MatrixXd c = lowering_matrix(n_trunc);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n_trunc, n_trunc);
  return {kron(c, I), kron(I, c), Eigen::MatrixXcd::Identity(n_trunc * n_trunc, n_trunc * n_trunc)};
}

Eigen::MatrixXcd real_part(const Eigen::MatrixXcd& X) { return 0.5 * (X + X.adjoint()); }

}  // namespace

TransformedLadder transformed_ladder_matrices(double alpha, cplx z1, cplx z2, int n_trunc) {
  require_half_open_alpha(alpha, "transformed_ladder_matrices");
  if (n_trunc < 4) throw std::invalid_argument("transformed_ladder_matrices: n_trunc must be >= 4");
  const auto [A, B] = bogoliubov(alpha);
  const FockLadders f = fock_ladders(n_trunc);
  const Eigen::MatrixXcd c1d = f.c1.adjoint(), c2d = f.c2.adjoint();
  TransformedLadder t;
  t.C1 = {A * (f.c1 + z1 * f.id) - B * (c2d + std::conj(z2) * f.id), n_trunc};
  t.C2 = {-B * (c1d + std::conj(z1) * f.id) + A * (f.c2 + z2 * f.id), n_trunc};
  t.C1_dag = {A * (c1d + std::conj(z1) * f.id) - B * (f.c2 + z2 * f.id), n_trunc};
  t.C2_dag = {-B * (f.c1 + z1 * f.id) + A * (c2d + std::conj(z2) * f.id), n_trunc};
  return t;
}

TruncatedOperator hamiltonian_fock(double alpha, const OscillatorSpec& spec, cplx z1, cplx z2,
                                   int n_trunc, FockPath path) {
  spec.validate();
  require_half_open_alpha(alpha, "hamiltonian_fock");
  if (n_trunc < 8) throw std::invalid_argument("hamiltonian_fock: n_trunc must be >= 8");
  const double h = spec.hbar;
  if (path == FockPath::kTransformed) {
    const TransformedLadder t = transformed_ladder_matrices(alpha, z1, z2, n_trunc);
    Eigen::MatrixXcd H = h * spec.omega1 * (t.C1_dag.matrix * t.C1.matrix) +
                         h * spec.omega2 * (t.C2_dag.matrix * t.C2.matrix);
    H.diagonal().array() += 0.5 * h * (spec.omega1 + spec.omega2);
    // Blocked products leave rounding-level asymmetry; the Hermitian part removes it exactly.
    return {0.5 * (H + H.adjoint()), n_trunc};
  }
  const Couplings k = couplings(alpha, spec);
  const FockLadders f = fock_ladders(n_trunc);
  const Eigen::MatrixXcd n1 = f.c1.adjoint() * f.c1, n2 = f.c2.adjoint() * f.c2;
  Eigen::MatrixXcd H = k.e1 * n1 + k.e2 * n2;
  H -= k.g * real_part((f.c1 + z1 * f.id) * (f.c2 + z2 * f.id));
  H += 2.0 * k.e2 * real_part(std::conj(z2) * f.c2);
  H += 2.0 * k.e1 * real_part(std::conj(z1) * f.c1);
  const double constant = k.e1 * std::norm(z1) + k.e2 * std::norm(z2) +
                          h * (1.0 + alpha * alpha) * (spec.omega1 + spec.omega2) / (4.0 * alpha);
  H.diagonal().array() += constant;
  return {H, n_trunc};
}

QuadraticHamiltonian hamiltonian_quadratic(double alpha, const OscillatorSpec& spec, cplx z1,
                                           cplx z2) {
  spec.validate();
  require_half_open_alpha(alpha, "hamiltonian_quadratic");
  const OscillatorGeometry lg = ladder_geometry(spec);
  const double a1 = lg.a, a2 = lg.b, h = spec.hbar;
  const auto [e1, e2, g] = couplings(alpha, spec);
  const double r1 = z1.real(), i1 = z1.imag(), r2 = z2.real(), i2 = z2.imag();

  QuadraticHamiltonian H;
  H.Q(0, 0) = 2.0 * e1 * a1 * a1;
  H.Q(1, 1) = 2.0 * e2 * a2 * a2;
  H.Q(2, 2) = e1 / (2.0 * a1 * a1 * h * h);
  H.Q(3, 3) = e2 / (2.0 * a2 * a2 * h * h);
  H.Q(0, 1) = H.Q(1, 0) = -g * a1 * a2;
  H.Q(2, 3) = H.Q(3, 2) = g / (4.0 * a1 * a2 * h * h);
  H.L << 2.0 * e1 * r1 * a1 - g * r2 * a1, 2.0 * e2 * r2 * a2 - g * r1 * a2,
      (2.0 * e1 * i1 + g * i2) / (2.0 * a1 * h), (2.0 * e2 * i2 + g * i1) / (2.0 * a2 * h);
  H.c = -0.5 * (e1 + e2) + e1 * std::norm(z1) + e2 * std::norm(z2) - g * (r1 * r2 - i1 * i2) +
        h * (1.0 + alpha * alpha) * (spec.omega1 + spec.omega2) / (4.0 * alpha);
  return H;
}

DisplacementLabels eigenstate_labels(double alpha, cplx z1, cplx z2) {
  require_half_open_alpha(alpha, "eigenstate_labels");
  const auto [A, B] = bogoliubov(alpha);
  const double r1 = z1.real(), i1 = z1.imag(), r2 = z2.real(), i2 = z2.imag();
  return {cplx(-A * r1 + B * r2, -A * i1 - B * i2), cplx(-B * r1 + A * r2, B * i1 + A * i2)};
}

WaveFunction hamiltonian_eigenstate(double alpha, const OscillatorSpec& spec, cplx z1, cplx z2) {
  require_half_open_alpha(alpha, "hamiltonian_eigenstate");
  const OscillatorGeometry lg = ladder_geometry(spec);
  const OscillatorGeometry pg = position_geometry(lg);
  const double diag = (1.0 + alpha * alpha) / (2.0 * alpha);
  const double off = -(1.0 - alpha * alpha) / (2.0 * alpha);
  Eigen::Matrix2d M;
  M << diag * pg.a * pg.a, off * pg.a * pg.b, off * pg.a * pg.b, diag * pg.b * pg.b;
  const ShiftParams shift{-z1.real() / lg.a, -z2.real() / lg.b,
                          -2.0 * lg.a * spec.hbar * z1.imag(), -2.0 * lg.b * spec.hbar * z2.imag()};
  return shifted(QuadraticGaussian(M).wave_function(), shift, spec.hbar);
}

namespace {

// Eighth-order central difference matrices on a uniform grid; the function is
// taken to vanish outside the box.
Eigen::MatrixXd difference_matrix(int n, double step, int derivative) {
  static constexpr double d1[] = {1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5, 0.0,
                                  4.0 / 5,   -1.0 / 5,   4.0 / 105, -1.0 / 280};
  static constexpr double d2[] = {-1.0 / 560, 8.0 / 315, -1.0 / 5, 8.0 / 5, -205.0 / 72,
                                  8.0 / 5,    -1.0 / 5,  8.0 / 315, -1.0 / 560};
  const double* w = derivative == 1 ? d1 : d2;
  const double scale = derivative == 1 ? 1.0 / step : 1.0 / (step * step);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = -4; k <= 4; ++k) {
      const int j = i + k;
      if (j >= 0 && j < n) D(i, j) = w[k + 4] * scale;
    }
  }
  return D;
}

struct GridApplication {
  double energy;
  double residual;
};

GridApplication apply_on_grid(const QuadraticHamiltonian& H, const WaveFunction& psi, double hbar,
                              double expected, int n) {
  const Eigen::Matrix2d cov = psi.envelope.inverse();
  const double w1 = 8.0 * std::sqrt(cov(0, 0)), w2 = 8.0 * std::sqrt(cov(1, 1));
  const Eigen::VectorXd x1 = Eigen::VectorXd::LinSpaced(n, psi.center(0) - w1, psi.center(0) + w1);
  const Eigen::VectorXd x2 = Eigen::VectorXd::LinSpaced(n, psi.center(1) - w2, psi.center(1) + w2);
  const double h1 = x1(1) - x1(0), h2 = x2(1) - x2(0);

  Eigen::MatrixXcd F(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) F(i, j) = psi(x1(i), x2(j));
  }
  const Eigen::MatrixXcd D1x = difference_matrix(n, h1, 1).cast<cplx>();
  const Eigen::MatrixXcd D2x = difference_matrix(n, h1, 2).cast<cplx>();
  const Eigen::MatrixXcd D1y = difference_matrix(n, h2, 1).cast<cplx>();
  const Eigen::MatrixXcd D2y = difference_matrix(n, h2, 2).cast<cplx>();
  const Eigen::MatrixXcd dx = D1x * F, dy = F * D1y.transpose();
  const Eigen::MatrixXcd dxx = D2x * F, dyy = F * D2y.transpose();
  const Eigen::MatrixXcd dxy = D1x * dy;

  // p_i = -i hbar d_i: p_i p_j -> -hbar^2 d_i d_j.
  const cplx mih(0.0, -hbar);
  const double hb2 = hbar * hbar;
  Eigen::MatrixXcd HF(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a = x1(i), b = x2(j);
      const double potential = 0.5 * (H.Q(0, 0) * a * a + 2.0 * H.Q(0, 1) * a * b + H.Q(1, 1) * b * b) +
                               H.L(0) * a + H.L(1) * b + H.c;
      const cplx kinetic = -0.5 * hb2 * (H.Q(2, 2) * dxx(i, j) + 2.0 * H.Q(2, 3) * dxy(i, j) +
                                         H.Q(3, 3) * dyy(i, j)) +
                           mih * (H.L(2) * dx(i, j) + H.L(3) * dy(i, j));
      HF(i, j) = potential * F(i, j) + kinetic;
    }
  }
  const double norm2 = F.squaredNorm();
  const double energy = (F.conjugate().cwiseProduct(HF)).sum().real() / norm2;
  const double residual = std::sqrt((HF - expected * F).squaredNorm() / norm2);
  return {energy, residual};
}

}  // namespace

GroundStateCheck ground_state_energy_check(double alpha, const OscillatorSpec& spec,
                                           const OscillatorGeometry& geom, cplx z1, cplx z2,
                                           int points) {
  spec.validate();
  geom.validate();
  if (points < 17) throw std::invalid_argument("ground_state_energy_check: need at least 17 points");
  const OscillatorGeometry lg = ladder_geometry(spec);
  if (std::abs(geom.a - lg.a) > 1e-12 * lg.a || std::abs(geom.b - lg.b) > 1e-12 * lg.b ||
      std::abs(geom.hbar - spec.hbar) > 1e-12 * spec.hbar) {
    throw std::invalid_argument(
        "ground_state_energy_check: geometry must satisfy omega_i = 2 hbar a_i^2 / M");
  }
  const QuadraticHamiltonian H = hamiltonian_quadratic(alpha, spec, z1, z2);
  const WaveFunction psi = hamiltonian_eigenstate(alpha, spec, z1, z2);

  GroundStateCheck out;
  out.expected = 0.5 * spec.hbar * (spec.omega1 + spec.omega2);
  out.points = points;
  const GridApplication coarse = apply_on_grid(H, psi, spec.hbar, out.expected, points);
  const GridApplication fine = apply_on_grid(H, psi, spec.hbar, out.expected, 2 * points - 1);
  out.energy_coarse = coarse.energy;
  out.energy = fine.energy;
  out.residual_coarse = coarse.residual;
  out.residual_fine = fine.residual;
  out.refines = fine.residual < coarse.residual;
  return out;
}

}  // namespace holosqueeze
