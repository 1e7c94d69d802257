#include "statdg/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "statdg/diagnostics.hpp"
#include "statdg/errors.hpp"
#include "statdg/evolution.hpp"
#include "statdg/fixtures.hpp"
#include "statdg/io.hpp"
#include "statdg/kernel.hpp"
#include "statdg/projectors.hpp"
#include "statdg/setups.hpp"
#include "statdg/solver.hpp"

namespace statdg {
namespace {

namespace fs = std::filesystem;

std::string out_path(const std::string& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir + ": " + ec.message());
  return (fs::path(dir) / name).string();
}

Solver make_solver(const SolveConfig& c) {
  if (c.model == "euler") {
    EulerModel model;
    model.gamma = c.gamma;
    model.kind = c.flux;
    model.lowmach_f = c.lowmach_f;
    return Solver(model, c.grid, c.degree);
  }
  return Solver(acoustics(), acoustic_flux(c.flux), c.grid, c.degree);
}

InitialData make_initial(const SolveConfig& c) {
  if (c.model == "euler") return gresho_vortex(c.eps, c.gamma);
  return acoustic_vortex();
}

std::vector<std::string> var_names(const SolveConfig& c) {
  if (c.model == "euler") return {"rho", "rhou", "rhov", "E"};
  return {"u", "v", "p"};
}

nlohmann::ordered_json resolved_config_json(const SolveConfig& c) {
  nlohmann::ordered_json j;
  j["model"] = c.model;
  j["flux"] = to_string(c.flux);
  j["degree"] = c.degree;
  j["grid"] = {{"nx", c.grid.nx}, {"ny", c.grid.ny}, {"lx", c.grid.lx}, {"ly", c.grid.ly}};
  j["cfl"] = resolved_cfl(c);
  j["rk_order"] = resolved_rk_order(c);
  j["t_final"] = c.t_final;
  j["cadence"] = c.cadence;
  if (c.model == "euler") {
    j["eps"] = c.eps;
    j["gamma"] = c.gamma;
    if (c.flux == FluxKind::lowmach) j["lowmach_f"] = c.lowmach_f;
  }
  return j;
}

double max_center_speed(const Solver& solver, const DGField& q) {
  std::vector<double> state(static_cast<std::size_t>(q.nvars()));
  double measured[3];
  double best = 0.0;
  for (int i = 0; i < solver.grid().nx; ++i) {
    for (int j = 0; j < solver.grid().ny; ++j) {
      q.eval(solver.basis(), i, j, 0.0, 0.0, state.data());
      solver.measured_vars(state.data(), measured);
      best = std::max(best, std::hypot(measured[0], measured[1]));
    }
  }
  return best;
}

}  // namespace

int cmd_solve(const SolveConfig& config, const std::string& out_dir, bool dry_run,
              std::ostream& out) {
  Solver solver = make_solver(config);
  const InitialData initial = make_initial(config);
  const TimeControls controls = time_controls(config);
  if (dry_run) {
    const DGField q0 = project_to_dg(config.grid, config.degree, solver.nvars(), initial);
    const double dt = solver.compute_dt(controls.cfl, q0);
    const long steps = static_cast<long>(std::ceil(config.t_final / dt - 1e-12));
    out << resolved_config_json(config).dump(1) << '\n';
    out << "dt=" << format_double(dt) << " steps=" << steps << '\n';
    return 0;
  }
  const RunResult result = solver.run(initial, controls);
  const std::string snap = out_path(out_dir, "snapshot.csv");
  const std::string diag = out_path(out_dir, "diagnostics.csv");
  write_snapshot_csv(snap, solver, result.final_state, var_names(config));
  write_diagnostics_csv(diag, result.rows, solver.nvars());
  out << "wrote " << snap << '\n';
  out << "wrote " << diag << '\n';
  out << "steps=" << result.steps << " dt=" << format_double(result.dt) << '\n';
  return 0;
}

int cmd_analyze(const AnalyzeConfig& config, const std::string& out_dir,
                std::ostream& out) {
  const LinearModel model = acoustics();
  const FluxMatrices flux = acoustic_flux(config.flux);
  std::vector<std::pair<double, double>> samples;
  for (double a : config.k_samples) {
    for (double b : config.k_samples) {
      samples.emplace_back(a / config.dx, b / config.dy);
    }
  }
  const KernelSweep sweep = kernel_dim_sweep(model, flux, config.degree, config.dx,
                                             config.dy, samples, config.svd_tol);
  const StationarityOrder order =
      steady_order_fit(model, flux, config.degree, config.kx, config.ky, config.dx_ladder);
  const std::string report = out_path(out_dir, "kernel_report.json");
  write_kernel_report_json(report, sweep, &order);
  out << "flux=" << to_string(sweep.flux) << " K=" << sweep.degree
      << " min_dim=" << sweep.min_dim << " max_dim=" << sweep.max_dim
      << " verdict=" << sweep.verdict;
  if (order.exact) {
    out << " order=exact-kernel";
  } else {
    out << " order_slope=" << format_double(order.fit.slope);
  }
  out << '\n';
  out << "wrote " << report << '\n';
  return 0;
}

int cmd_fixtures(const std::string& fixtures_path, std::ostream& out) {
  const FixtureSet set =
      fixtures_path.empty() ? load_fixtures() : load_fixtures(fixtures_path);
  const auto checks = verify_kernel_fixtures(set);
  out << "flux      K  vectors  max_residual\n";
  bool ok = true;
  for (const auto& c : checks) {
    out << std::left << std::setw(10) << c.flux << std::setw(3) << c.degree
        << std::setw(9) << c.count << format_double(c.max_residual) << '\n';
    ok = ok && c.max_residual < 1e-10;
  }
  if (!ok) throw NumericalError("kernel fixture residual exceeds 1e-10");
  out << "all " << checks.size() << " fixture sets verified\n";
  return 0;
}

int cmd_convergence(const SolveConfig& config, const std::string& out_dir,
                    std::ostream& out) {
  SolveConfig fine = config;
  fine.grid.nx *= 2;
  fine.grid.ny *= 2;
  Solver coarse_solver = make_solver(config);
  Solver fine_solver = make_solver(fine);
  const InitialData initial = make_initial(config);
  const TimeControls controls = time_controls(config);
  const RunResult coarse = coarse_solver.run(initial, controls);
  const RunResult refined = fine_solver.run(initial, controls);
  const auto orders = order_in_time(coarse.rows, refined.rows);
  const std::string order_file = out_path(out_dir, "order.csv");
  const std::string diag_coarse = out_path(out_dir, "diagnostics_coarse.csv");
  const std::string diag_fine = out_path(out_dir, "diagnostics_fine.csv");
  write_order_csv(order_file, orders);
  write_diagnostics_csv(diag_coarse, coarse.rows, coarse_solver.nvars());
  write_diagnostics_csv(diag_fine, refined.rows, fine_solver.nvars());
  out << "wrote " << order_file << '\n';
  out << "wrote " << diag_coarse << '\n';
  out << "wrote " << diag_fine << '\n';
  if (!orders.empty()) {
    const auto& last = orders.back();
    out << "final t=" << format_double(last.t)
        << " order_all=" << format_double(last.order[3]) << '\n';
  }
  return 0;
}

int cmd_sweep_euler(const SweepConfig& config, const std::string& out_dir,
                    std::ostream& out) {
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (const auto& cs : config.cases) {
    for (double eps : config.eps_values) {
      SolveConfig run_cfg;
      run_cfg.model = "euler";
      run_cfg.flux = cs.flux;
      run_cfg.degree = cs.degree;
      run_cfg.grid = config.grid;
      run_cfg.cfl = config.cfl;
      run_cfg.t_final = config.t_final;
      run_cfg.cadence = config.cadence;
      run_cfg.eps = eps;
      run_cfg.gamma = config.gamma;
      run_cfg.lowmach_f = config.lowmach_f;
      Solver solver = make_solver(run_cfg);
      const RunResult result = solver.run(make_initial(run_cfg), time_controls(run_cfg));
      const std::string key = to_string(cs.flux) + "-K" + std::to_string(cs.degree) +
                              "-eps" + format_double(eps) + "-" +
                              std::to_string(config.grid.nx) + "x" +
                              std::to_string(config.grid.ny);
      nlohmann::ordered_json item;
      item["flux"] = to_string(cs.flux);
      item["K"] = cs.degree;
      item["eps"] = eps;
      item["nx"] = config.grid.nx;
      item["ny"] = config.grid.ny;
      item["t_final"] = config.t_final;
      item["steps"] = result.steps;
      item["max_center_speed"] = max_center_speed(solver, result.final_state);
      const auto& last = result.rows.back();
      item["l2_err_u"] = last.l2_err[0];
      item["l2_err_v"] = last.l2_err[1];
      item["l2_err_p"] = last.l2_err[2];
      results[key] = std::move(item);
      out << key << " max_center_speed="
          << format_double(results[key]["max_center_speed"].get<double>()) << '\n';
    }
  }
  const std::string summary = out_path(out_dir, "sweep_summary.json");
  std::ofstream file(summary, std::ios::binary);
  if (!file) throw IoError("cannot open output file: " + summary);
  file << results.dump(1) << '\n';
  if (!file) throw IoError("write failed: " + summary);
  out << "wrote " << summary << '\n';
  return 0;
}

int run_cli(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const std::string text =
        opts.config_path.empty() ? std::string("{}") : read_text_file(opts.config_path);
    const ConfigOverrides ov{opts.flux_override, opts.degree_override};
    if (opts.command == "solve") {
      return cmd_solve(parse_solve_config(text, ov), opts.out_dir, opts.dry_run, out);
    }
    if (opts.command == "analyze") {
      if (opts.fixtures) return cmd_fixtures(opts.fixtures_path, out);
      return cmd_analyze(parse_analyze_config(text, ov), opts.out_dir, out);
    }
    if (opts.command == "convergence") {
      return cmd_convergence(parse_solve_config(text, ov), opts.out_dir, out);
    }
    if (opts.command == "sweep-euler") {
      return cmd_sweep_euler(parse_sweep_config(text, ov), opts.out_dir, out);
    }
    throw ConfigError("unknown command '" + opts.command + "'");
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return 3;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace statdg
