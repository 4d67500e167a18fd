#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcscatter/canonical_operators.hpp"
#include "arcscatter/csv.hpp"
#include "arcscatter/flat_arc.hpp"
#include "arcscatter/kernel_operators.hpp"
#include "arcscatter/run_config.hpp"
#include "arcscatter/scattering.hpp"
#include "arcscatter/spectral.hpp"

namespace {

using arcscatter::RunConfig;
using json = nlohmann::json;

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

std::string out_path(const RunConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  return (std::filesystem::path(config.out_dir) / name).string();
}

void write_summary(const RunConfig& config, const json& summary) {
  std::ofstream out(out_path(config, "summary.json"), std::ios::binary);
  out << summary.dump(2) << '\n';
}

json config_json(const RunConfig& config) {
  return json{{"arc.family", config.arc_family},
              {"arc.param1", config.arc_param1},
              {"arc.param2", config.arc_param2},
              {"N", config.resolution},
              {"tol", config.tol},
              {"max_iter", config.max_iter}};
}

const char* bc_name(arcscatter::BoundaryCondition bc) {
  return bc == arcscatter::BoundaryCondition::Dirichlet ? "dirichlet"
                                                        : "neumann";
}

const char* formulation_name(arcscatter::Formulation f) {
  switch (f) {
    case arcscatter::Formulation::SecondKindNS: return "second_kind_ns";
    case arcscatter::Formulation::FirstKindS: return "first_kind_s";
    case arcscatter::Formulation::FirstKindN: return "first_kind_n";
  }
  return "?";
}

arcscatter::ScatteringProblem make_problem(const RunConfig& config, double k) {
  return {config.make_arc(), k, config.bc,
          arcscatter::Vec2(std::cos(config.incident_angle),
                           std::sin(config.incident_angle)),
          config.resolution};
}

int run_solve(const RunConfig& config) {
  const double k = config.single_k();
  const auto problem = make_problem(config, k);
  const auto result = arcscatter::solve(problem, config.formulation,
                                        config.tol, config.max_iter);
  if (!result.converged) {
    std::cerr << "solve: no convergence in " << result.iterations
              << " iterations (residual "
              << (result.residual_history.empty()
                      ? 0.0
                      : result.residual_history.back())
              << ")\n";
    return kExitNumericalFailure;
  }

  const arcscatter::NodalGrid grid(config.resolution);
  const auto nodal =
      arcscatter::from_coefficients(result.physical_density, grid);
  std::vector<std::vector<double>> density_rows;
  for (int j = 0; j < grid.size(); ++j)
    density_rows.push_back(
        {grid.nodes[j], nodal[j].real(), nodal[j].imag()});
  arcscatter::write_csv(out_path(config, "density.csv"),
                        {"theta", "re", "im"}, density_rows);

  std::vector<std::vector<double>> coeff_rows;
  for (int m = 0; m < result.physical_density.size(); ++m)
    coeff_rows.push_back({static_cast<double>(m),
                          result.physical_density[m].real(),
                          result.physical_density[m].imag()});
  arcscatter::write_csv(out_path(config, "density_coefficients.csv"),
                        {"m", "re", "im"}, coeff_rows);

  // near field on a ring well outside the arc
  std::vector<arcscatter::Vec2> points;
  std::vector<double> angles;
  for (int i = 0; i < 72; ++i) {
    const double a = 2.0 * M_PI * i / 72;
    points.emplace_back(3.0 * std::cos(a), 3.0 * std::sin(a));
    angles.push_back(a);
  }
  const auto field = arcscatter::evaluate_field(result, problem, points);
  std::vector<std::vector<double>> field_rows;
  for (size_t i = 0; i < points.size(); ++i)
    field_rows.push_back({points[i].x(), points[i].y(), field[i].real(),
                          field[i].imag()});
  arcscatter::write_csv(out_path(config, "field.csv"), {"x", "y", "re", "im"},
                        field_rows);

  const auto pattern = arcscatter::far_field(result, problem, angles);
  std::vector<std::vector<double>> far_rows;
  for (size_t i = 0; i < angles.size(); ++i)
    far_rows.push_back({angles[i], pattern[i].real(), pattern[i].imag()});
  arcscatter::write_csv(out_path(config, "far_field.csv"),
                        {"angle", "re", "im"}, far_rows);

  std::vector<std::vector<double>> iter_rows;
  for (size_t i = 0; i < result.residual_history.size(); ++i)
    iter_rows.push_back(
        {static_cast<double>(i), result.residual_history[i]});
  arcscatter::write_csv(out_path(config, "iterations.csv"),
                        {"iter", "residual"}, iter_rows);

  json summary = config_json(config);
  summary["command"] = "solve";
  summary["k"] = k;
  summary["bc"] = bc_name(config.bc);
  summary["formulation"] = formulation_name(config.formulation);
  summary["iterations"] = result.iterations;
  summary["converged"] = result.converged;
  summary["boundary_residual"] = result.boundary_residual;
  write_summary(config, summary);
  return 0;
}

int run_spectrum(const RunConfig& config) {
  const double k = config.single_k();
  const auto report = arcscatter::calderon_remainder(config.make_arc(), k,
                                                     config.resolution);

  std::vector<std::vector<double>> eig_rows;
  for (const auto& ev : report.product.eigenvalues)
    eig_rows.push_back({ev.real(), ev.imag()});
  arcscatter::write_csv(out_path(config, "eigenvalues.csv"), {"re", "im"},
                        eig_rows);

  std::vector<std::vector<double>> sv_rows;
  for (size_t j = 0; j < report.remainder.singular_value_decay.size(); ++j)
    sv_rows.push_back({static_cast<double>(j),
                       report.remainder.singular_value_decay[j]});
  arcscatter::write_csv(out_path(config, "remainder_singular_values.csv"),
                        {"j", "sigma_ratio"}, sv_rows);

  json summary = config_json(config);
  summary["command"] = "spectrum";
  summary["k"] = k;
  summary["min_abs_eigenvalue"] = report.product.min_abs;
  summary["max_abs_eigenvalue"] = report.product.max_abs;
  summary["cluster_fraction_within_0.15_of_-0.25"] = arcscatter::cluster_fraction(
      report.product, arcscatter::Complex(-0.25), 0.15);
  summary["remainder_rank_cut_index"] = report.rank_cut_index;
  summary["remainder_max_norm"] = report.remainder_max_norm;
  write_summary(config, summary);
  return 0;
}

int run_sweep(const RunConfig& config) {
  std::vector<std::vector<double>> rows;
  for (double k : config.k_values) {
    const auto problem = make_problem(config, k);
    const auto second = arcscatter::solve(
        problem, arcscatter::Formulation::SecondKindNS, config.tol,
        config.max_iter);
    const auto first_form = config.bc == arcscatter::BoundaryCondition::Dirichlet
                                ? arcscatter::Formulation::FirstKindS
                                : arcscatter::Formulation::FirstKindN;
    const auto first =
        arcscatter::solve(problem, first_form, config.tol, config.max_iter);
    const auto report = arcscatter::calderon_remainder(problem.arc, k,
                                                       config.resolution);
    rows.push_back({k, static_cast<double>(second.iterations),
                    static_cast<double>(first.iterations),
                    report.product.min_abs, report.product.max_abs});
  }
  arcscatter::write_csv(
      out_path(config, "sweep.csv"),
      {"k", "iterations_second_kind", "iterations_first_kind", "min_abs_eig",
       "max_abs_eig"},
      rows);

  json summary = config_json(config);
  summary["command"] = "sweep";
  summary["k_count"] = config.k_values.size();
  write_summary(config, summary);
  return 0;
}

struct Check {
  std::string name;
  double deviation;
  double threshold;
  bool pass() const { return deviation < threshold; }
};

int run_verify(const RunConfig& config) {
  using namespace arcscatter;
  std::vector<Check> checks;
  const int n = 64;

  {
    const MatrixXc s = assemble_S(Arc::flat_segment(), 0.0, n).matrix.entries;
    const double dev = (s - symm_matrix(n).entries).cwiseAbs().maxCoeff();
    checks.push_back({"flat_single_layer_diagonal", dev, 1e-12});
  }
  {
    const MatrixXc closed = j0_closed_form(n).entries;
    const MatrixXc product = d0_matrix(n).entries * symm_matrix(n).entries *
                             t0_matrix(n).entries * symm_matrix(n).entries;
    const double dev = (closed.leftCols(n - 2) - product.leftCols(n - 2))
                           .cwiseAbs()
                           .maxCoeff();
    checks.push_back({"j0_factorization", dev, 1e-12});
    double wdev = 0.0;
    for (int c = 0; c < n - 2; ++c) {
      VectorXc e = VectorXc::Zero(n);
      e[c] = 1.0;
      const VectorXc w =
          w0_apply(CosineSeries::from_basis_coefficients(e)).basis_coefficients();
      wdev = std::max(wdev, (w - closed.col(c)).cwiseAbs().maxCoeff());
    }
    checks.push_back({"j0_averaging_form", wdev, 1e-13});
  }
  {
    const MatrixXc j0 = j0_closed_form(n).entries;
    const MatrixXc i0 = j0_inverse(n).entries;
    const MatrixXc left = i0 * j0, right = j0 * i0;
    double dev = 0.0;
    for (int c = 0; c <= n - 3; ++c)
      for (int r = 0; r <= n - 3; ++r) {
        const Complex id = r == c ? 1.0 : 0.0;
        dev = std::max({dev, std::abs(left(r, c) - id),
                        std::abs(right(r, c) - id)});
      }
    checks.push_back({"j0_inverse_identity", dev, 1e-11});
  }
  {
    const MatrixXc ct = cesaro_matrix(n).entries * t0_matrix(n).entries;
    const double dev =
        (ct.leftCols(n - 2) -
         MatrixXc::Identity(n, n).leftCols(n - 2)).cwiseAbs().maxCoeff();
    checks.push_back({"cesaro_t0_identity", dev, 1e-12});
  }
  {
    double dev = 0.0;
    for (double x : {-0.8, -0.3, 0.0, 0.4, 0.9}) {
      const double quad = flat_unweighted(FlatKind::S0_param,
                                          [](double) { return 1.0; }, x);
      dev = std::max(dev, std::abs(quad - s0_of_one(x)));
    }
    checks.push_back({"s0_of_one_oracle", dev, 1e-8});
  }
  {
    double dev = 0.0;
    for (double x : {-0.5, 0.0, 0.7}) {
      const double quad = flat_unweighted(FlatKind::N0_param,
                                          [](double) { return 1.0; }, x);
      dev = std::max(dev, std::abs(quad - n0_of_one(x)));
    }
    checks.push_back({"n0_of_one_oracle", dev, 1e-6});
  }
  {
    const NsOfOne ns = ns_of_one(0.9999);
    const double dev =
        std::abs(ns.value / ns.singular_part - 1.0);
    checks.push_back({"ns_of_one_edge_dominance", dev, 0.02});
  }

  bool all_pass = true;
  json report = json::array();
  for (const Check& c : checks) {
    all_pass = all_pass && c.pass();
    std::cout << (c.pass() ? "PASS" : "FAIL") << "  " << c.name
              << "  max_deviation=" << arcscatter::format_number(c.deviation)
              << "  threshold=" << arcscatter::format_number(c.threshold)
              << "\n";
    report.push_back({{"name", c.name},
                      {"deviation", c.deviation},
                      {"threshold", c.threshold},
                      {"pass", c.pass()}});
  }
  json summary = config_json(config);
  summary["command"] = "verify";
  summary["checks"] = report;
  summary["all_pass"] = all_pass;
  write_summary(config, summary);
  return all_pass ? 0 : kExitNumericalFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helmholtz scattering by smooth open arcs"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("-c,--config", config_path, "key=value configuration file");
  app.add_option("-s,--set", overrides, "override, e.g. -s k=10 -s N=256");

  auto* cmd_solve = app.add_subcommand("solve", "solve one scattering problem");
  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "operator spectrum and Calderon remainder");
  auto* cmd_sweep = app.add_subcommand("sweep", "iteration/spectrum sweep over k");
  auto* cmd_verify =
      app.add_subcommand("verify", "run the analytic identity and oracle suite");
  for (auto* cmd : {cmd_solve, cmd_spectrum, cmd_sweep, cmd_verify})
    cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  RunConfig config;
  try {
    config = arcscatter::parse_config(config_path, overrides);
  } catch (const arcscatter::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (cmd_solve->parsed()) return run_solve(config);
    if (cmd_spectrum->parsed()) return run_spectrum(config);
    if (cmd_sweep->parsed()) return run_sweep(config);
    if (cmd_verify->parsed()) return run_verify(config);
  } catch (const arcscatter::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
  return kExitConfigError;
}
