#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holosqueeze/model.hpp"
#include "holosqueeze/phase_space.hpp"
#include "holosqueeze/verify.hpp"

namespace holosqueeze::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kSuccess = 0, kCheckFailure = 1, kUsageError = 2 };

struct RunConfig {
  double hbar = 1.0;
  double mass = 1.0;
  int order = 48;
  int truncation = 20;
  double tolerance = 1e-8;
  std::string format = "json";
  std::string out;

  /// Throws std::invalid_argument on non-positive values or an unknown format.
  void validate() const;
  Json to_json() const;
};

/// A 2D slice of phase space: two varying axes, the rest pinned at `fixed`.
struct GridSpec {
  std::string axis1 = "x1";
  std::string axis2 = "p1";
  double lo1 = -3.0, hi1 = 3.0;
  double lo2 = -3.0, hi2 = 3.0;
  int n1 = 61;
  int n2 = 61;
  PhaseSpacePoint fixed;

  void validate() const;
  Json to_json() const;
};

// Every command returns a document {command, parameters, summary, columns, rows}
// and a flag telling whether its built-in checks held.
struct CommandResult {
  Json document;
  bool ok = true;
};

/// Rows per (k, alpha): spectrum of the partially transposed covariance, PPT
/// verdict, log-negativity and its closed form.
CommandResult cmd_entanglement_sweep(const std::vector<double>& alphas, const OscillatorGeometry& geom,
                                     const RunConfig& config);

/// Closed-form Wigner function on a slice; with `numeric`, also the chord
/// quadrature at config.order.
CommandResult cmd_wigner_grid(SqueezeMode k, double alpha, const OscillatorGeometry& geom,
                              const DisplacementLabels& labels, const GridSpec& slice,
                              const RunConfig& config, bool numeric = false);

CommandResult cmd_verify(const std::string& suite, const RunConfig& config);

/// (Q, L, c), a truncated Fock summary and the ground-state energy check.
CommandResult cmd_hamiltonian(double alpha, const OscillatorSpec& spec, const DisplacementLabels& labels,
                              const RunConfig& config, int grid_points = 121);

/// JSON with every float printed as %.17g, or CSV: `#` metadata lines, one
/// header line, then rows.
std::string render(const Json& document, const std::string& format);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holosqueeze::cli
