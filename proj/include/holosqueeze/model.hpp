#pragma once

#include <array>

#include <Eigen/Dense>

#include "holosqueeze/states.hpp"

namespace holosqueeze {

/// Two oscillators of common mass with angular frequencies omega1, omega2.
struct OscillatorSpec {
  double omega1 = 1.0;
  double omega2 = 1.0;
  double mass = 1.0;
  double hbar = 1.0;

  void validate() const;
};

// Two length scales appear. The ladder geometry a_i = sqrt(M omega_i / (2 hbar))
// enters c_i = a_i x_i + i p_i / (2 a_i hbar). Position-space wave functions use
// the inverse oscillator length sqrt(M omega_i / hbar) = sqrt(2) a_i.

/// a_i = sqrt(M omega_i / (2 hbar)).
OscillatorGeometry ladder_geometry(const OscillatorSpec& spec);

/// omega_i = 2 hbar a_i^2 / M.
OscillatorSpec spec_from_ladder_geometry(const OscillatorGeometry& geom, double mass);

/// Wave-function geometry (sqrt(2) a, sqrt(2) b) for a ladder geometry (a, b).
OscillatorGeometry position_geometry(const OscillatorGeometry& ladder);

/// C_i^dag = sum_j mu_ij c_j^dag + mu~_ij c_j + xi_i,
/// C_i     = sum_j nu_ij c_j^dag + nu~_ij c_j + zeta_i.
struct LadderCoefficients {
  Eigen::Matrix2d mu;
  Eigen::Matrix2d mu_tilde;
  Eigen::Matrix2d nu;
  Eigen::Matrix2d nu_tilde;
  std::array<cplx, 2> xi;
  std::array<cplx, 2> zeta;
};

/// Two-mode coefficients, alpha in (0, 1].
LadderCoefficients ladder_coefficients(double alpha, cplx z1, cplx z2);

/// Operator on the product Fock space |m, n>, m, n < n_trunc, index m * n_trunc + n.
struct TruncatedOperator {
  Eigen::MatrixXcd matrix;
  int n_trunc = 0;

  int index(int m, int n) const { return m * n_trunc + n; }
  /// Restriction to m, n < n_trunc - margin, where truncation does not reach.
  Eigen::MatrixXcd interior(int margin = 2) const;
};

struct TransformedLadder {
  TruncatedOperator C1, C1_dag, C2, C2_dag;
};

/// Single-mode lowering operator c|n> = sqrt(n)|n-1>, n < n_trunc.
Eigen::MatrixXd lowering_matrix(int n_trunc);

/// Throws std::invalid_argument for n_trunc < 4.
TransformedLadder transformed_ladder_matrices(double alpha, cplx z1, cplx z2, int n_trunc);

enum class FockPath {
  kTransformed,  // hbar w1 C1^dag C1 + hbar w2 C2^dag C2 + hbar (w1 + w2) / 2
  kExpanded,     // term-by-term expansion in c_i, c_i^dag
};

/// Throws std::invalid_argument for n_trunc < 8 or an invalid spec.
TruncatedOperator hamiltonian_fock(double alpha, const OscillatorSpec& spec, cplx z1, cplx z2,
                                   int n_trunc = 20, FockPath path = FockPath::kTransformed);

/// H(g) = g^T Q g / 2 + L^T g + c over g = (x1, x2, p1, p2).
struct QuadraticHamiltonian {
  Eigen::Matrix4d Q = Eigen::Matrix4d::Zero();
  Eigen::Vector4d L = Eigen::Vector4d::Zero();
  double c = 0.0;

  double operator()(const Eigen::Vector4d& g) const { return 0.5 * g.dot(Q * g) + L.dot(g) + c; }
};

/// Position-momentum form of the same Hamiltonian, alpha in (0, 1].
QuadraticHamiltonian hamiltonian_quadratic(double alpha, const OscillatorSpec& spec, cplx z1,
                                           cplx z2);

/// Labels w with psi2(x1, -x2; w), in the position geometry, equal to the ground state.
DisplacementLabels eigenstate_labels(double alpha, cplx z1, cplx z2);

/// Ground state of the Hamiltonian as a shifted two-mode Gaussian, alpha in (0, 1].
/// Its phase-space mean is <c_i> = -z_i.
WaveFunction hamiltonian_eigenstate(double alpha, const OscillatorSpec& spec, cplx z1, cplx z2);

struct GroundStateCheck {
  double energy = 0.0;          // <psi|H|psi> / <psi|psi> on the fine grid
  double expected = 0.0;        // hbar (omega1 + omega2) / 2
  double energy_coarse = 0.0;
  double residual_coarse = 0.0; // ||(H - expected) psi|| / ||psi||
  double residual_fine = 0.0;
  int points = 0;               // coarse grid points per axis; fine uses 2 points - 1
  bool refines = false;         // residual_fine < residual_coarse
};

/// Applies the quadratic Hamiltonian to the ground state by eighth-order central
/// differences on a box of +-8 envelope widths around its mean. `geom` is the
/// ladder geometry and must satisfy omega_i = 2 hbar a_i^2 / M.
GroundStateCheck ground_state_energy_check(double alpha, const OscillatorSpec& spec,
                                           const OscillatorGeometry& geom, cplx z1, cplx z2,
                                           int points = 121);

}  // namespace holosqueeze
