#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

namespace holosqueeze::cli {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump_json(const Json& j, std::string& out, int indent) {
  const std::string pad(2 * (indent + 1), ' '), close(2 * indent, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        dump_json(value, out, indent + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      // Arrays of scalars stay on one line; this keeps grids compact.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        dump_json(value, out, indent + 1);
      }
      out += flat ? "]" : "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string csv_cell(const Json& j) {
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + csv_cell(j[i]);
    out.emplace_back(prefix, s);
  } else {
    out.emplace_back(prefix, csv_cell(j));
  }
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json geometry_json(const OscillatorGeometry& g) { return {{"a", g.a}, {"b", g.b}, {"hbar", g.hbar}}; }

Json labels_json(const DisplacementLabels& l) { return {{"z1", complex_json(l.z1)}, {"z2", complex_json(l.z2)}}; }

Json document(const std::string& command, Json parameters) {
  Json d;
  d["command"] = command;
  d["parameters"] = std::move(parameters);
  d["summary"] = Json::object();
  d["columns"] = Json::array();
  d["rows"] = Json::array();
  return d;
}

int axis_index(const std::string& axis) {
  static const std::map<std::string, int> idx = {{"x1", 0}, {"x2", 1}, {"p1", 2}, {"p2", 3}};
  const auto it = idx.find(axis);
  if (it == idx.end()) throw std::invalid_argument("unknown phase-space axis: " + axis);
  return it->second;
}

}  // namespace

void RunConfig::validate() const {
  if (!(hbar > 0.0) || !(mass > 0.0) || !(tolerance > 0.0)) {
    throw std::invalid_argument("hbar, mass and tol must be positive");
  }
  if (order < 1 || truncation < 1) throw std::invalid_argument("order and trunc must be positive");
  if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
}

Json RunConfig::to_json() const {
  return {{"hbar", hbar}, {"mass", mass}, {"order", order}, {"trunc", truncation},
          {"tol", tolerance}, {"format", format}};
}

void GridSpec::validate() const {
  const int i1 = axis_index(axis1), i2 = axis_index(axis2);
  if (i1 == i2) throw std::invalid_argument("slice axes must differ");
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("slice point counts must be >= 2");
  if (!std::isfinite(lo1) || !std::isfinite(hi1) || !std::isfinite(lo2) || !std::isfinite(hi2) ||
      !(lo1 < hi1) || !(lo2 < hi2)) {
    throw std::invalid_argument("slice ranges must be finite and ordered");
  }
}

Json GridSpec::to_json() const {
  return {{"axis1", axis1}, {"range1", {lo1, hi1}}, {"n1", n1},
          {"axis2", axis2}, {"range2", {lo2, hi2}}, {"n2", n2},
          {"fixed", {{"x1", fixed.x1}, {"x2", fixed.x2}, {"p1", fixed.p1}, {"p2", fixed.p2}}}};
}

CommandResult cmd_entanglement_sweep(const std::vector<double>& alphas, const OscillatorGeometry& geom,
                                     const RunConfig& config) {
  config.validate();
  geom.validate();
  if (alphas.empty()) throw std::invalid_argument("sweep needs at least one alpha");
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("sweep: every alpha must lie in (0,1)");
  }
  CommandResult res;
  res.document = document("sweep", {{"alphas", alphas}, {"geometry", geometry_json(geom)}, {"config", config.to_json()}});
  Json& d = res.document;
  d["columns"] = {"k", "alpha", "xi", "lambda1", "lambda2", "verdict", "log_negativity", "closed_form", "residual"};
  double worst = 0.0;
  for (int k = 1; k <= 2; ++k) {
    for (double alpha : alphas) {
      const CovarianceMatrix cov = covariance(squeeze_mode_from_int(k), alpha, geom);
      const SymplecticSpectrum s = symplectic_spectrum(partial_transpose(cov));
      const PptVerdict v = ppt_separable(cov);
      const double en = log_negativity(cov);
      const double closed = k == 1 ? 0.0 : std::max(-std::log(alpha), 0.0);
      const double residual = std::abs(en - closed);
      worst = std::max(worst, residual);
      d["rows"].push_back({k, alpha, squeeze_from_alpha(alpha).xi, s.min(), s.max(), to_string(v.verdict),
                           en, closed, residual});
    }
  }
  res.ok = worst <= config.tolerance;
  d["summary"] = {{"max_residual", worst}, {"tolerance", config.tolerance}, {"passed", res.ok}};
  return res;
}

CommandResult cmd_wigner_grid(SqueezeMode k, double alpha, const OscillatorGeometry& geom,
                              const DisplacementLabels& labels, const GridSpec& slice,
                              const RunConfig& config, bool numeric) {
  config.validate();
  slice.validate();
  const OscillatorGeometry g{geom.a, geom.b, config.hbar};
  const GaussianWigner W = wigner_gaussian(k, alpha, g, labels);
  const WaveFunction f = make_wave_function(k, g, labels, alpha);
  const int i1 = axis_index(slice.axis1), i2 = axis_index(slice.axis2);

  CommandResult res;
  res.document = document("wigner", {{"k", to_int(k)}, {"alpha", alpha}, {"geometry", geometry_json(g)},
                                     {"labels", labels_json(labels)}, {"slice", slice.to_json()},
                                     {"numeric", numeric}, {"config", config.to_json()}});
  Json& d = res.document;
  d["columns"] = {slice.axis1, slice.axis2, "W"};
  if (numeric) {
    d["columns"].push_back("W_numeric");
    d["columns"].push_back("W_numeric_imag");
  }

  const double h1 = (slice.hi1 - slice.lo1) / (slice.n1 - 1), h2 = (slice.hi2 - slice.lo2) / (slice.n2 - 1);
  double best = -1.0, sum = 0.0, numeric_gap = 0.0;
  Eigen::Vector4d best_at = slice.fixed.as_vector();
  for (int i = 0; i < slice.n1; ++i) {
    for (int j = 0; j < slice.n2; ++j) {
      Eigen::Vector4d gam = slice.fixed.as_vector();
      gam(i1) = slice.lo1 + i * h1;
      gam(i2) = slice.lo2 + j * h2;
      const double w = W(gam);
      // Trapezoid weights for the slice integral.
      const double tw = ((i == 0 || i == slice.n1 - 1) ? 0.5 : 1.0) * ((j == 0 || j == slice.n2 - 1) ? 0.5 : 1.0);
      sum += tw * w;
      if (w > best) {
        best = w;
        best_at = gam;
      }
      Json row = {gam(i1), gam(i2), w};
      if (numeric) {
        const QuadratureResult q = wigner_numeric(f, {gam(0), gam(1), gam(2), gam(3)}, g.hbar, config.order);
        numeric_gap = std::max(numeric_gap, std::abs(q.value.real() - w));
        row.push_back(q.value.real());
        row.push_back(q.value.imag());
      }
      d["rows"].push_back(std::move(row));
    }
  }

  // Integrating W over the slice leaves the Gaussian marginal in the other two coordinates.
  std::vector<int> rest;
  for (int i = 0; i < 4; ++i) {
    if (i != i1 && i != i2) rest.push_back(i);
  }
  const Eigen::Matrix4d& S = W.covariance().sigma;
  Eigen::Matrix2d Sff;
  Eigen::Vector2d df;
  for (int a = 0; a < 2; ++a) {
    df(a) = slice.fixed.as_vector()(rest[a]) - W.mean()(rest[a]);
    for (int b = 0; b < 2; ++b) Sff(a, b) = S(rest[a], rest[b]);
  }
  const double marginal = std::exp(-0.5 * df.dot(Sff.inverse() * df)) / (2.0 * std::numbers::pi * std::sqrt(Sff.determinant()));
  const double integral = sum * h1 * h2;

  const double pih = std::numbers::pi * g.hbar;
  d["summary"] = {{"max_value", best},
                  {"max_location", {best_at(i1), best_at(i2)}},
                  {"mean", {W.mean()(i1), W.mean()(i2)}},
                  {"peak_bound", 1.0 / (pih * pih)},
                  {"slice_integral", integral},
                  {"marginal_closed_form", marginal}};
  if (numeric) {
    res.ok = numeric_gap <= config.tolerance;
    d["summary"]["numeric_max_gap"] = numeric_gap;
    d["summary"]["tolerance"] = config.tolerance;
    d["summary"]["passed"] = res.ok;
  }
  return res;
}

CommandResult cmd_verify(const std::string& suite, const RunConfig& config) {
  config.validate();
  VerifyConfig vc;
  vc.hbar = config.hbar;
  vc.mass = config.mass;
  vc.wigner_order = config.order;
  vc.truncation = config.truncation;
  const VerifyReport report = run_verify(suite, vc);

  CommandResult res;
  res.document = document("verify", {{"suite", suite}, {"config", config.to_json()}});
  Json& d = res.document;
  d["columns"] = {"suite", "check", "value", "tolerance", "status"};
  int failed = 0;
  for (const CheckResult& c : report.checks) {
    failed += c.passed ? 0 : 1;
    d["rows"].push_back({c.suite, c.name, c.value, c.tolerance, c.passed ? "PASS" : "FAIL"});
  }
  res.ok = report.all_passed();
  d["summary"] = {{"checks", report.checks.size()}, {"failed", failed}, {"passed", res.ok}};
  return res;
}

CommandResult cmd_hamiltonian(double alpha, const OscillatorSpec& spec, const DisplacementLabels& labels,
                              const RunConfig& config, int grid_points) {
  config.validate();
  spec.validate();
  const QuadraticHamiltonian H = hamiltonian_quadratic(alpha, spec, labels.z1, labels.z2);
  const TruncatedOperator A = hamiltonian_fock(alpha, spec, labels.z1, labels.z2, config.truncation,
                                               FockPath::kTransformed);
  const TruncatedOperator B = hamiltonian_fock(alpha, spec, labels.z1, labels.z2, config.truncation,
                                               FockPath::kExpanded);
  const OscillatorGeometry lg = ladder_geometry(spec);
  const GroundStateCheck gs = ground_state_energy_check(alpha, spec, lg, labels.z1, labels.z2, grid_points);

  CommandResult res;
  res.document = document("hamiltonian",
                          {{"alpha", alpha},
                           {"spec", {{"omega1", spec.omega1}, {"omega2", spec.omega2}, {"mass", spec.mass}, {"hbar", spec.hbar}}},
                           {"labels", labels_json(labels)},
                           {"ladder_geometry", geometry_json(lg)},
                           {"grid_points", grid_points},
                           {"config", config.to_json()}});
  Json& d = res.document;
  d["columns"] = {"term", "row", "col", "value"};
  static const char* names[] = {"x1", "x2", "p1", "p2"};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) d["rows"].push_back({"Q", names[i], names[j], H.Q(i, j)});
  }
  for (int i = 0; i < 4; ++i) d["rows"].push_back({"L", names[i], "", H.L(i)});
  d["rows"].push_back({"c", "", "", H.c});

  const double gap = (A.interior() - B.interior()).cwiseAbs().maxCoeff();
  const double herm = (A.matrix - A.matrix.adjoint()).cwiseAbs().maxCoeff();
  const double energy_error = std::abs(gs.energy - gs.expected);
  res.ok = energy_error <= config.tolerance && gs.refines;
  d["summary"] = {
      {"fock", {{"n_trunc", config.truncation},
                {"dimension", A.matrix.rows()},
                {"path_gap_interior", gap},
                {"hermiticity_gap", herm},
                {"vacuum_expectation", A.matrix(0, 0).real()}}},
      {"ground_state", {{"energy", gs.energy},
                        {"expected", gs.expected},
                        {"energy_error", energy_error},
                        {"energy_coarse", gs.energy_coarse},
                        {"residual_coarse", gs.residual_coarse},
                        {"residual_fine", gs.residual_fine},
                        {"refines", gs.refines}}},
      {"tolerance", config.tolerance},
      {"passed", res.ok}};
  return res;
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") {
    std::string out;
    dump_json(doc, out, 0);
    return out + "\n";
  }
  if (format != "csv") throw std::invalid_argument("format must be json or csv");
  std::vector<std::pair<std::string, std::string>> meta;
  flatten(doc["parameters"], "parameters", meta);
  flatten(doc["summary"], "summary", meta);
  std::ostringstream os;
  os << "# command=" << doc["command"].get<std::string>() << "\n";
  for (const auto& [k, v] : meta) os << "# " << k << "=" << v << "\n";
  bool first = true;
  for (const auto& c : doc["columns"]) {
    os << (first ? "" : ",") << c.get<std::string>();
    first = false;
  }
  os << "\n";
  for (const auto& row : doc["rows"]) {
    first = true;
    for (const auto& cell : row) {
      os << (first ? "" : ",") << csv_cell(cell);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

DisplacementLabels labels_from(const std::vector<double>& z1, const std::vector<double>& z2) {
  return {cplx(z1.at(0), z1.at(1)), cplx(z2.at(0), z2.at(1))};
}

bool emit(const CommandResult& r, const RunConfig& cfg, std::ostream& out) {
  const std::string text = render(r.document, cfg.format);
  if (cfg.out.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f || !(f << text) || !(f.flush())) {
    throw std::runtime_error("cannot write output file: " + cfg.out);
  }
  return true;
}

std::vector<double> default_alphas() {
  std::vector<double> a;
  for (int i = 1; i <= 19; ++i) a.push_back(0.05 * i);
  return a;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite squeezed coherent states: entanglement, Wigner grids, Hamiltonian export"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--hbar", cfg.hbar, "Action unit")->envname("HOLOSQUEEZE_HBAR")->capture_default_str();
  app.add_option("--mass", cfg.mass, "Oscillator mass")->envname("HOLOSQUEEZE_MASS")->capture_default_str();
  app.add_option("--order", cfg.order, "Quadrature order per axis")->envname("HOLOSQUEEZE_ORDER")->capture_default_str();
  app.add_option("--trunc", cfg.truncation, "Fock truncation per mode")->envname("HOLOSQUEEZE_TRUNC")->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "Tolerance for built-in checks")->envname("HOLOSQUEEZE_TOL")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("HOLOSQUEEZE_FORMAT")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default stdout)")->envname("HOLOSQUEEZE_OUT");

  double a = 1.0, b = 1.0;
  auto add_geometry = [&](CLI::App* sub) {
    sub->add_option("--a", a, "Inverse oscillator length along x1")->capture_default_str();
    sub->add_option("--b", b, "Inverse oscillator length along x2")->capture_default_str();
  };
  std::vector<double> z1{0.0, 0.0}, z2{0.0, 0.0};
  auto add_labels = [&](CLI::App* sub) {
    sub->add_option("--z1", z1, "Label z1 as re,im")->expected(2)->delimiter(',');
    sub->add_option("--z2", z2, "Label z2 as re,im")->expected(2)->delimiter(',');
  };

  auto* sweep = app.add_subcommand("sweep", "PPT verdicts and log-negativity over alpha");
  std::vector<double> alphas = default_alphas();
  sweep->add_option("--alphas", alphas, "Comma-separated alpha values in (0,1)")->delimiter(',');
  add_geometry(sweep);

  auto* wigner = app.add_subcommand("wigner", "Wigner function on a 2D phase-space slice");
  int k = 2;
  double alpha = 0.5;
  GridSpec slice;
  std::vector<double> range1{slice.lo1, slice.hi1}, range2{slice.lo2, slice.hi2};
  bool numeric = false;
  wigner->add_option("--k", k, "Squeezing route (1 or 2)")->check(CLI::IsMember({1, 2}))->capture_default_str();
  wigner->add_option("--alpha", alpha, "Measure parameter in (0,1)")->capture_default_str();
  wigner->add_option("--axis1", slice.axis1)->check(CLI::IsMember({"x1", "x2", "p1", "p2"}))->capture_default_str();
  wigner->add_option("--axis2", slice.axis2)->check(CLI::IsMember({"x1", "x2", "p1", "p2"}))->capture_default_str();
  wigner->add_option("--range1", range1, "lo,hi")->expected(2)->delimiter(',');
  wigner->add_option("--range2", range2, "lo,hi")->expected(2)->delimiter(',');
  wigner->add_option("--n1", slice.n1)->capture_default_str();
  wigner->add_option("--n2", slice.n2)->capture_default_str();
  wigner->add_option("--x1", slice.fixed.x1, "Pinned value when x1 is not a slice axis");
  wigner->add_option("--x2", slice.fixed.x2, "Pinned value when x2 is not a slice axis");
  wigner->add_option("--p1", slice.fixed.p1, "Pinned value when p1 is not a slice axis");
  wigner->add_option("--p2", slice.fixed.p2, "Pinned value when p2 is not a slice axis");
  wigner->add_flag("--numeric", numeric, "Also evaluate the chord quadrature at --order");
  add_geometry(wigner);
  add_labels(wigner);

  auto* verify = app.add_subcommand("verify", "Run invariant checks");
  std::string suite = "all";
  verify->add_option("--suite", suite)->check(CLI::IsMember(verify_suite_names()))->capture_default_str();

  auto* ham = app.add_subcommand("hamiltonian", "Export the quadratic Hamiltonian and its checks");
  OscillatorSpec spec;
  double ham_alpha = 0.5;
  int points = 121;
  ham->add_option("--alpha", ham_alpha, "Measure parameter in (0,1]")->capture_default_str();
  ham->add_option("--omega1", spec.omega1)->capture_default_str();
  ham->add_option("--omega2", spec.omega2)->capture_default_str();
  ham->add_option("--points", points, "Coarse finite-difference grid points per axis")->capture_default_str();
  add_labels(ham);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    cfg.validate();
    CommandResult r;
    if (sweep->parsed()) {
      r = cmd_entanglement_sweep(alphas, {a, b, cfg.hbar}, cfg);
    } else if (wigner->parsed()) {
      slice.lo1 = range1.at(0);
      slice.hi1 = range1.at(1);
      slice.lo2 = range2.at(0);
      slice.hi2 = range2.at(1);
      r = cmd_wigner_grid(squeeze_mode_from_int(k), alpha, {a, b, cfg.hbar}, labels_from(z1, z2), slice, cfg, numeric);
    } else if (verify->parsed()) {
      r = cmd_verify(suite, cfg);
    } else {
      spec.mass = cfg.mass;
      spec.hbar = cfg.hbar;
      r = cmd_hamiltonian(ham_alpha, spec, labels_from(z1, z2), cfg, points);
    }
    emit(r, cfg, out);
    if (!r.ok) err << "check failure: see summary\n";
    return r.ok ? kSuccess : kCheckFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}

}  // namespace holosqueeze::cli
