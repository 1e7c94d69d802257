#include "statdg/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "statdg/errors.hpp"

namespace statdg {
namespace {

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
  }
}

Grid parse_grid(const nlohmann::json& j) {
  reject_unknown_keys(j, {"nx", "ny", "lx", "ly"}, "grid");
  Grid g{j.value("nx", 25), j.value("ny", 25), j.value("lx", 1.0), j.value("ly", 1.0)};
  if (g.nx < 2 || g.ny < 2) throw ConfigError("grid: nx and ny must be at least 2");
  if (g.lx <= 0.0 || g.ly <= 0.0) throw ConfigError("grid: lx and ly must be positive");
  return g;
}

FluxKind parse_flux(const nlohmann::json& j, const std::string& where) {
  if (!j.contains("flux")) throw ConfigError(where + ": missing required key 'flux'");
  return flux_kind_from_string(j.at("flux").get<std::string>());
}

int parse_degree(const nlohmann::json& j, int fallback) {
  const int k = j.value("degree", fallback);
  if (k < 0 || k > 6) throw ConfigError("degree must be in [0, 6]");
  return k;
}

nlohmann::json parse_text(const std::string& text, const ConfigOverrides& overrides) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("cannot parse config JSON: ") + e.what());
  }
  if (!overrides.flux.empty()) j["flux"] = overrides.flux;
  if (overrides.degree >= 0) j["degree"] = overrides.degree;
  return j;
}

// Translate value-type mismatches (string where a number belongs, ...)
// into configuration errors.
template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config value error: ") + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in && !in.eof()) throw IoError("cannot read file: " + path);
  return ss.str();
}

SolveConfig parse_solve_config(const std::string& json_text,
                               const ConfigOverrides& overrides) {
  const nlohmann::json j = parse_text(json_text, overrides);
  return guarded([&] {
    reject_unknown_keys(j,
                        {"model", "flux", "degree", "grid", "cfl", "rk_order", "t_final",
                         "cadence", "eps", "gamma", "lowmach_f"},
                        "solve config");
    SolveConfig c;
    c.model = j.value("model", std::string("acoustics"));
    if (c.model != "acoustics" && c.model != "euler") {
      throw ConfigError("model must be 'acoustics' or 'euler', got '" + c.model + "'");
    }
    c.flux = parse_flux(j, "solve config");
    c.degree = parse_degree(j, 1);
    if (j.contains("grid")) c.grid = parse_grid(j.at("grid"));
    c.cfl = j.value("cfl", 0.0);
    if (c.cfl < 0.0) throw ConfigError("cfl must be positive");
    c.rk_order = j.value("rk_order", 0);
    if (c.rk_order != 0 && (c.rk_order < 1 || c.rk_order > 4)) {
      throw ConfigError("rk_order must be in {1, 2, 3, 4}");
    }
    c.t_final = j.value("t_final", 10.0);
    if (c.t_final <= 0.0) throw ConfigError("t_final must be positive");
    c.cadence = j.value("cadence", std::min(1.0, c.t_final));
    if (c.cadence <= 0.0) throw ConfigError("cadence must be positive");
    c.eps = j.value("eps", 1e-2);
    if (c.eps <= 0.0 || c.eps > 1.0) throw ConfigError("eps must be in (0, 1]");
    c.gamma = j.value("gamma", 1.4);
    if (c.gamma <= 1.0) throw ConfigError("gamma must exceed 1");
    c.lowmach_f = j.value("lowmach_f", 0.1);
    if (c.lowmach_f < 0.0) throw ConfigError("lowmach_f must be nonnegative");
    if (c.model == "acoustics" && c.flux == FluxKind::roe) {
      throw ConfigError("flux 'roe' is only available for the euler model");
    }
    if (c.model == "euler" &&
        (c.flux == FluxKind::upwind || c.flux == FluxKind::central)) {
      throw ConfigError("flux '" + to_string(c.flux) + "' is only available for acoustics");
    }
    return c;
  });
}

AnalyzeConfig parse_analyze_config(const std::string& json_text,
                                   const ConfigOverrides& overrides) {
  const nlohmann::json j = parse_text(json_text, overrides);
  return guarded([&] {
    reject_unknown_keys(
        j, {"flux", "degree", "dx", "dy", "svd_tol", "k_samples", "dx_ladder", "kx", "ky"},
        "analyze config");
    AnalyzeConfig c;
    c.flux = parse_flux(j, "analyze config");
    if (c.flux == FluxKind::roe) {
      throw ConfigError("flux 'roe' has no linear evolution matrix to analyze");
    }
    c.degree = parse_degree(j, 1);
    c.dx = j.value("dx", 1.0);
    c.dy = j.value("dy", 1.0);
    if (c.dx <= 0.0 || c.dy <= 0.0) throw ConfigError("dx and dy must be positive");
    c.svd_tol = j.value("svd_tol", 1e-9);
    if (c.svd_tol <= 0.0 || c.svd_tol >= 1.0) {
      throw ConfigError("svd_tol must be in (0, 1)");
    }
    if (j.contains("k_samples")) {
      c.k_samples = j.at("k_samples").get<std::vector<double>>();
      for (double v : c.k_samples) {
        if (v <= 0.0) throw ConfigError("k_samples entries must be positive");
      }
    }
    if (j.contains("dx_ladder")) {
      c.dx_ladder = j.at("dx_ladder").get<std::vector<double>>();
    } else {
      for (int p = 3; p <= 8; ++p) c.dx_ladder.push_back(std::pow(2.0, -p));
    }
    if (c.dx_ladder.size() < 2) throw ConfigError("dx_ladder needs at least 2 spacings");
    for (double v : c.dx_ladder) {
      if (v <= 0.0) throw ConfigError("dx_ladder entries must be positive");
    }
    c.kx = j.value("kx", 1.0);
    c.ky = j.value("ky", 0.7);
    return c;
  });
}

SweepConfig parse_sweep_config(const std::string& json_text,
                               const ConfigOverrides& overrides) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("cannot parse config JSON: ") + e.what());
  }
  return guarded([&] {
    reject_unknown_keys(
        j,
        {"cases", "flux", "degree", "eps", "grid", "t_final", "cfl", "cadence", "gamma",
         "lowmach_f"},
        "sweep config");
    SweepConfig c;
    if (j.contains("cases")) {
      for (const auto& item : j.at("cases")) {
        reject_unknown_keys(item, {"flux", "degree"}, "sweep case");
        SweepCase sc;
        sc.flux = parse_flux(item, "sweep case");
        sc.degree = parse_degree(item, 0);
        c.cases.push_back(sc);
      }
      if (c.cases.empty()) throw ConfigError("sweep config: 'cases' must be nonempty");
    } else if (j.contains("flux") || !overrides.flux.empty()) {
      // Single-case shorthand: top-level flux/degree, possibly overridden.
      nlohmann::json item = nlohmann::json::object();
      if (j.contains("flux")) item["flux"] = j.at("flux");
      if (!overrides.flux.empty()) item["flux"] = overrides.flux;
      if (j.contains("degree")) item["degree"] = j.at("degree");
      if (overrides.degree >= 0) item["degree"] = overrides.degree;
      SweepCase sc;
      sc.flux = parse_flux(item, "sweep case");
      sc.degree = parse_degree(item, 0);
      c.cases.push_back(sc);
    } else {
      c.cases = {{FluxKind::rusanov, 0}, {FluxKind::rusanov, 2}, {FluxKind::roe, 1}};
    }
    for (const auto& sc : c.cases) {
      if (sc.flux != FluxKind::rusanov && sc.flux != FluxKind::roe &&
          sc.flux != FluxKind::lowmach) {
        throw ConfigError("sweep case: flux must be rusanov, roe, or lowmach");
      }
    }
    if (j.contains("eps")) {
      c.eps_values = j.at("eps").get<std::vector<double>>();
      for (double e : c.eps_values) {
        if (e <= 0.0 || e > 1.0) throw ConfigError("eps values must be in (0, 1]");
      }
      if (c.eps_values.empty()) throw ConfigError("sweep config: 'eps' must be nonempty");
    }
    if (j.contains("grid")) c.grid = parse_grid(j.at("grid"));
    c.t_final = j.value("t_final", 1.0);
    if (c.t_final <= 0.0) throw ConfigError("t_final must be positive");
    c.cfl = j.value("cfl", 0.0);
    if (j.contains("cfl") && c.cfl <= 0.0) throw ConfigError("cfl must be positive");
    c.cadence = j.value("cadence", 0.25);
    if (c.cadence <= 0.0) throw ConfigError("cadence must be positive");
    c.gamma = j.value("gamma", 1.4);
    if (c.gamma <= 1.0) throw ConfigError("gamma must exceed 1");
    c.lowmach_f = j.value("lowmach_f", 0.1);
    if (c.lowmach_f < 0.0) throw ConfigError("lowmach_f must be nonnegative");
    return c;
  });
}

double resolved_cfl(const SolveConfig& c) {
  if (c.cfl > 0.0) return c.cfl;
  // Explicit DG needs a time step that shrinks with the polynomial degree;
  // the acoustic default 0.03 is conservative enough as it stands.
  if (c.model == "euler") return 0.4 / (2 * c.degree + 1);
  return 0.03;
}

int resolved_rk_order(const SolveConfig& c) {
  if (c.rk_order != 0) return c.rk_order;
  if (c.flux == FluxKind::central) return 3;
  return std::clamp(c.degree + 1, 1, 4);
}

TimeControls time_controls(const SolveConfig& c) {
  TimeControls tc;
  tc.cfl = resolved_cfl(c);
  tc.rk_order = resolved_rk_order(c);
  tc.t_final = c.t_final;
  tc.cadence = c.cadence;
  return tc;
}

}  // namespace statdg
