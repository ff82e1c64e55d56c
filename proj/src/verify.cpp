#include "holosqueeze/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "holosqueeze/basis.hpp"
#include "holosqueeze/hermite.hpp"
#include "holosqueeze/model.hpp"
#include "holosqueeze/oracles.hpp"
#include "holosqueeze/phase_space.hpp"
#include "holosqueeze/states.hpp"

namespace holosqueeze {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Recorder {
 public:
  Recorder(std::string suite, VerifyReport& report) : suite_(std::move(suite)), report_(report) {}

  void check(const std::string& name, double value, double tolerance) {
    report_.checks.push_back({suite_, name, value, tolerance, value <= tolerance});
  }

 private:
  std::string suite_;
  VerifyReport& report_;
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const std::vector<cplx>& sample_points() {
  static const std::vector<cplx> pts = {{0.0, 0.0},  {0.4, 0.9},  {-1.2, 0.3},
                                        {0.7, -0.5}, {1.5, 1.1},  {-0.3, -1.4}};
  return pts;
}

void hermite_suite(Recorder& r) {
  double worst = 0.0;
  for (int n = 0; n <= 25; ++n) {
    for (cplx z : sample_points()) {
      const cplx ref = oracle::hermite_holo_sum(n, z);
      worst = std::max(worst, std::abs(hermite_holo(n, z) - ref) / std::max(std::abs(ref), 1.0));
    }
  }
  r.check("recurrence_vs_explicit_sum", worst, 1e-11);

  worst = 0.0;
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const cplx z1(0.5, -0.2), z2(1.1, 0.3);
      worst = std::max(worst, rel(hermite_complex_2v(m, n, z1, z2), hermite_complex_2v(n, m, z2, z1)));
    }
  }
  r.check("two_variable_symmetry", worst, 1e-14);

  worst = 0.0;
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const cplx z1(0.5, -0.2), z2(1.1, 0.3);
      const cplx ref = oracle::hermite_2v_generating(m, n, z1, z2);
      worst = std::max(worst, std::abs(hermite_complex_2v(m, n, z1, z2) - ref) / std::max(std::abs(ref), 1.0));
    }
  }
  r.check("generating_function_coefficients", worst, 1e-9);

  r.check("mehler_product", mehler_product(0.5, 1.0, 1.0, 60).gap(), 1e-10);
  r.check("mehler_product_complex", mehler_product(0.6, {0.3, 0.4}, {-0.5, 0.2}, 60).gap(), 1e-9);
  r.check("mehler_two_variable",
          mehler_two_variable(0.4, 0.4, {0.3, 0.1}, {-0.2, 0.5}, 0.7, -1.1, 50).gap(), 1e-9);

  double diag = 0.0, off = 0.0;
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const QuadratureResult q = orthogonality_integral(m, n, 0.5);
      if (m == n) {
        diag = std::max(diag, rel(q.value, orthogonality_constant(n, n, 0.5)));
      } else {
        off = std::max(off, std::abs(q.value) / q.scale);
      }
    }
  }
  r.check("orthogonality_diagonal", diag, 1e-8);
  r.check("orthogonality_off_diagonal", off, 1e-8);
}

void basis_suite(Recorder& r) {
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double alpha = std::pow(10.0, -4.0 + 0.1 * i);
    const SqueezeParam p = squeeze_from_alpha(alpha);
    // artanh(r) with r = (1 - alpha) / (1 + alpha), written as log1p so that
    // rounding of r near 1 is not amplified.
    const double artanh = 0.5 * std::log1p((1.0 - alpha) / alpha);
    worst = std::max({worst, std::abs(alpha_from_xi(p.xi) - alpha) / alpha,
                      std::abs(artanh - p.xi) / std::max(p.xi, 1.0)});
  }
  r.check("xi_alpha_round_trip", worst, 1e-14);

  worst = 0.0;
  for (int n = 0; n <= 12; ++n) {
    for (cplx z : sample_points()) {
      worst = std::max(worst, rel(h_alpha(n, 0.4, z), oracle::h_alpha_direct(n, 0.4, z)));
    }
  }
  r.check("h_alpha_direct_transcription", worst, 1e-12);

  worst = 0.0;
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const cplx z1(0.3, 0.2), z2(-0.1, 0.4);
      worst = std::max(worst, rel(h_alpha_2v(m, n, 0.5, z1, z2), oracle::h_alpha_2v_direct(m, n, 0.5, z1, z2)));
    }
  }
  r.check("h_alpha_2v_direct_transcription", worst, 1e-12);

  for (double alpha : {0.3, 0.6}) {
    const Eigen::MatrixXcd gram = basis_gram_matrix(alpha, 4, 40);
    const double err = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    r.check("orthonormality_alpha_" + std::to_string(alpha).substr(0, 3), err, 1e-7);
  }

  const cplx z(1.0, 0.0);
  const double s60 = coefficient_norm_partial(SqueezeMode::kTwoMode, 0.2, z, z, 60);
  const double s80 = coefficient_norm_partial(SqueezeMode::kTwoMode, 0.2, z, z, 80);
  r.check("coefficient_norm_tail", (s80 - s60) / s80, 1e-8);
  r.check("coefficient_norm_limit", std::abs(s80 / std::exp(2.0) - 1.0), 1e-10);
}

void states_suite(Recorder& r) {
  const std::vector<std::pair<double, double>> geoms = {{1.0, 1.0}, {1.0, 2.0}};
  const std::vector<DisplacementLabels> labels = {{{0.0, 0.0}, {0.0, 0.0}},
                                                  {{0.3, 0.2}, {-0.1, 0.25}}};
  double worst_norm = 0.0, worst_shift = 0.0;
  for (int k = 1; k <= 2; ++k) {
    const SqueezeMode mode = squeeze_mode_from_int(k);
    for (double alpha : {0.2, 0.5, 0.8}) {
      for (auto [a, b] : geoms) {
        const OscillatorGeometry g{a, b, 1.0};
        for (const auto& lab : labels) {
          const WaveFunction f = make_wave_function(mode, g, lab, alpha);
          const Eigen::Matrix2d cov = f.envelope.inverse();
          const Eigen::Vector2d w(9.0 * std::sqrt(cov(0, 0)), 9.0 * std::sqrt(cov(1, 1)));
          const cplx n = oracle::trapezoid_2d(
              [&](double x1, double x2) { return cplx(std::norm(f(x1, x2))); }, f.center, w, 161);
          worst_norm = std::max(worst_norm, std::abs(n - 1.0));

          const WaveFunction base = unshifted_gaussian(mode, alpha, g).wave_function();
          const ShiftParams sp = shift_params(mode, alpha, g, lab);
          for (double x1 : {-0.7, 0.1, 0.9}) {
            for (double x2 : {-0.4, 0.3}) {
              worst_shift = std::max(worst_shift, std::abs(heisenberg_weyl_shift(sp, base.eval, x1, x2, 1.0) -
                                                           f(x1, x2)));
            }
          }
        }
      }
    }
  }
  r.check("normalization", worst_norm, 1e-9);
  r.check("shift_reconstruction", worst_shift, 1e-12);

  const OscillatorGeometry g{1.0, 1.5, 1.0};
  const DisplacementLabels lab{{0.3, 0.2}, {-0.1, 0.25}};
  for (int k = 1; k <= 2; ++k) {
    const SqueezeMode mode = squeeze_mode_from_int(k);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double x1 = -2.5 + 0.25 * i, x2 = -2.5 + 0.25 * j;
        worst = std::max(worst, std::abs(series_expansion_psi(mode, 50, x1, x2, g, lab, 0.5) -
                                         psi(mode, x1, x2, g, lab, 0.5)));
      }
    }
    r.check("series_convergence_k" + std::to_string(k), worst, 1e-7);
  }

  const DisplacementLabels zero{};
  const Eigen::MatrixXcd c = bargmann_coefficients(SqueezeMode::kTwoMode, 0.5, zero, 12);
  double worst = 0.0;
  for (auto [x1, x2] : std::vector<std::pair<double, double>>{{0, 0}, {0.5, -0.3}, {-0.8, 0.4}, {1.0, 1.0}, {-0.2, -1.1}}) {
    worst = std::max(worst, std::abs(inverse_segal_bargmann(c, x1, x2, g).value - psi2(x1, x2, g, zero, 0.5)));
  }
  r.check("inverse_segal_bargmann", worst, 1e-5);
}

void phase_space_suite(Recorder& r, const VerifyConfig& cfg) {
  const double h = cfg.hbar;
  const OscillatorGeometry g{1.0, 1.5, h};
  double dual = 0.0, spec = 0.0, pure = 0.0, en = 0.0, route = 0.0;
  bool verdicts = true;
  for (int i = 1; i <= 19; ++i) {
    const double alpha = 0.05 * i;
    for (int k = 1; k <= 2; ++k) {
      const SqueezeMode mode = squeeze_mode_from_int(k);
      const CovarianceMatrix cov = covariance(mode, alpha, g);
      const CovarianceMatrix via = wigner_gaussian(unshifted_gaussian(mode, alpha, g), h).covariance();
      // Inverting the rounded M amplifies its rounding by cond(M), about 1/alpha^2.
      const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(unshifted_gaussian(mode, alpha, g).matrix()).eigenvalues();
      dual = std::max(dual, (cov.sigma - via.sigma).cwiseAbs().maxCoeff() / cov.sigma.cwiseAbs().maxCoeff() / (ev(1) / ev(0)));
      const SymplecticSpectrum s = symplectic_spectrum(cov);
      pure = std::max({pure, std::abs(s.min() / (0.5 * h) - 1.0), std::abs(s.max() / (0.5 * h) - 1.0)});
      const CovarianceMatrix pt = partial_transpose(cov);
      const SymplecticSpectrum st = symplectic_spectrum(pt);
      const SymplecticSpectrum sq = symplectic_spectrum_squared(pt);
      route = std::max({route, std::abs(st.min() - sq.min()) / st.min(), std::abs(st.max() - sq.max()) / st.max()});
      const double lo = k == 1 ? 0.5 * h : 0.5 * h * alpha;
      const double hi = k == 1 ? 0.5 * h : 0.5 * h / alpha;
      spec = std::max({spec, std::abs(st.min() / lo - 1.0), std::abs(st.max() / hi - 1.0)});
      const PptVerdict v = ppt_separable(cov);
      verdicts &= v.verdict == (k == 1 ? Separability::kSeparable : Separability::kEntangled);
      const double closed = k == 1 ? 0.0 : std::max(-std::log(alpha), 0.0);
      en = std::max(en, std::abs(log_negativity(cov) - closed));
    }
  }
  r.check("covariance_dual_path_per_condition", dual, 1e-14);
  r.check("symplectic_closed_form", spec, 1e-12);
  r.check("symplectic_routes_agree", route, 1e-12);
  r.check("pure_state_spectrum", pure, 1e-12);
  r.check("ppt_verdicts", verdicts ? 0.0 : 1.0, 0.0);
  r.check("log_negativity_closed_form", en, 1e-12);

  const QuadraticGaussian base = unshifted_gaussian(SqueezeMode::kTwoMode, 0.5, g);
  const GaussianWigner W = wigner_gaussian(base, h);
  double worst = 0.0;
  for (double x : {-0.5, 0.0, 0.5}) {
    for (double p : {-0.6 * h, 0.0, 0.6 * h}) {
      const PhaseSpacePoint pt{x, -0.5 * x, p, 0.3 * p};
      worst = std::max(worst, std::abs(wigner_numeric(base.wave_function(), pt, h, cfg.wigner_order).value - W(pt)));
    }
  }
  r.check("wigner_numeric_stencil", worst, 1e-6);
}

void model_suite(Recorder& r, const VerifyConfig& cfg) {
  double bog = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const LadderCoefficients lc = ladder_coefficients(0.05 * i, 0.0, 0.0);
    bog = std::max(bog, std::abs(lc.mu(0, 0) * lc.mu(0, 0) - lc.mu_tilde(0, 1) * lc.mu_tilde(0, 1) - 1.0));
  }
  r.check("bogoliubov_identity", bog, 1e-15);

  const OscillatorSpec spec{1.3, 0.7, cfg.mass, cfg.hbar};
  const double escale = cfg.hbar * (spec.omega1 + spec.omega2);
  double paths = 0.0, comm = 0.0, fock = 0.0;
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (cplx z : {cplx(0.0, 0.0), cplx(0.3, 0.1)}) {
      const TruncatedOperator A = hamiltonian_fock(alpha, spec, z, z, cfg.truncation, FockPath::kTransformed);
      const TruncatedOperator B = hamiltonian_fock(alpha, spec, z, z, cfg.truncation, FockPath::kExpanded);
      paths = std::max(paths, (A.interior() - B.interior()).cwiseAbs().maxCoeff() / escale);

      const TransformedLadder t = transformed_ladder_matrices(alpha, z, z, 10);
      const auto commutator = [](const TruncatedOperator& x, const TruncatedOperator& y) {
        return TruncatedOperator{x.matrix * y.matrix - y.matrix * x.matrix, x.n_trunc};
      };
      const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(64, 64);
      comm = std::max({comm, (commutator(t.C1, t.C1_dag).interior() - I).cwiseAbs().maxCoeff(),
                       (commutator(t.C2, t.C2_dag).interior() - I).cwiseAbs().maxCoeff(),
                       commutator(t.C1, t.C2_dag).interior().cwiseAbs().maxCoeff(),
                       commutator(t.C1, t.C2).interior().cwiseAbs().maxCoeff()});

      const QuadraticHamiltonian Hq = hamiltonian_quadratic(alpha, spec, z, z);
      for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
          const double e = oracle::fock_diagonal_expectation(Hq, spec, m, n);
          fock = std::max(fock, std::abs(e - A.matrix(A.index(m, n), A.index(m, n)).real()) / escale);
        }
      }
    }
  }
  r.check("fock_paths_agree", paths, 1e-10);
  r.check("transformed_commutators", comm, 1e-12);
  r.check("quadratic_vs_fock_diagonal", fock, 1e-8);

  const OscillatorSpec sym{2.0 * cfg.hbar / cfg.mass, 2.0 * cfg.hbar / cfg.mass, cfg.mass, cfg.hbar};
  const GroundStateCheck gs = ground_state_energy_check(0.5, sym, ladder_geometry(sym), 0.0, 0.0);
  r.check("ground_state_energy", std::abs(gs.energy - gs.expected) / gs.expected, 1e-6);
  r.check("ground_state_residual_refines", gs.refines ? 0.0 : 1.0, 0.0);

  const QuadraticHamiltonian h1 = hamiltonian_quadratic(1.0, spec, {0.2, 0.1}, {-0.1, 0.3});
  const QuadraticHamiltonian hn = hamiltonian_quadratic(1.0 - 1e-8, spec, {0.2, 0.1}, {-0.1, 0.3});
  r.check("alpha_to_one_continuity",
          std::max((h1.Q - hn.Q).cwiseAbs().maxCoeff(), (h1.L - hn.L).cwiseAbs().maxCoeff()), 1e-6);
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"hermite", "basis", "states", "phase_space", "model", "all"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyConfig& config) {
  const std::map<std::string, std::function<void(Recorder&)>> suites = {
      {"hermite", hermite_suite},
      {"basis", basis_suite},
      {"states", states_suite},
      {"phase_space", [&](Recorder& r) { phase_space_suite(r, config); }},
      {"model", [&](Recorder& r) { model_suite(r, config); }},
  };
  VerifyReport report;
  if (suite == "all") {
    for (const auto& name : verify_suite_names()) {
      if (name == "all") continue;
      Recorder r(name, report);
      suites.at(name)(r);
    }
    return report;
  }
  const auto it = suites.find(suite);
  if (it == suites.end()) throw std::invalid_argument("unknown verify suite: " + suite);
  Recorder r(suite, report);
  it->second(r);
  return report;
}

}  // namespace holosqueeze
