#include "statdg/model.hpp"

#include "statdg/errors.hpp"

namespace statdg {

FluxKind flux_kind_from_string(const std::string& name) {
  if (name == "upwind") return FluxKind::upwind;
  if (name == "rusanov") return FluxKind::rusanov;
  if (name == "central") return FluxKind::central;
  if (name == "lowmach") return FluxKind::lowmach;
  if (name == "roe") return FluxKind::roe;
  throw ConfigError("unknown flux kind: " + name);
}

std::string to_string(FluxKind kind) {
  switch (kind) {
    case FluxKind::upwind: return "upwind";
    case FluxKind::rusanov: return "rusanov";
    case FluxKind::central: return "central";
    case FluxKind::lowmach: return "lowmach";
    case FluxKind::roe: return "roe";
  }
  return "?";
}

LinearModel acoustics() {
  LinearModel model;
  model.m = 3;
  model.var_names = {"u", "v", "p"};
  model.Jx = {0, 0, 1,  //
              0, 0, 0,  //
              1, 0, 0};
  model.Jy = {0, 0, 0,  //
              0, 0, 1,  //
              0, 1, 0};
  return model;
}

FluxMatrices acoustic_flux(FluxKind kind) {
  FluxMatrices f;
  f.kind = kind;
  switch (kind) {
    case FluxKind::upwind:
      f.Dx = {1, 0, 0, 0, 0, 0, 0, 0, 1};
      f.Dy = {0, 0, 0, 0, 1, 0, 0, 0, 1};
      break;
    case FluxKind::rusanov:
      f.Dx = {1, 0, 0, 0, 1, 0, 0, 0, 1};
      f.Dy = f.Dx;
      break;
    case FluxKind::central:
      f.Dx = {0, 0, 0, 0, 0, 0, 0, 0, 1};
      f.Dy = f.Dx;
      break;
    case FluxKind::lowmach:
      f.Dx = {0, 0, 1, 0, 0, 0, -1, 0, 2};
      f.Dy = {0, 0, 0, 0, 0, 1, 0, -1, 2};
      break;
    case FluxKind::roe:
      throw ConfigError("roe flux is not defined for the acoustic system");
  }
  return f;
}

void numerical_flux_linear(const LinearModel& model, const FluxMatrices& flux,
                           int dir, const double* qL, const double* qR,
                           double* out) {
  int m = model.m;
  const std::vector<double>& J = (dir == 0) ? model.Jx : model.Jy;
  const std::vector<double>& D = (dir == 0) ? flux.Dx : flux.Dy;
  for (int a = 0; a < m; ++a) {
    double acc = 0.0;
    for (int b = 0; b < m; ++b) {
      acc += 0.5 * J[a * m + b] * (qL[b] + qR[b]) - 0.5 * D[a * m + b] * (qR[b] - qL[b]);
    }
    out[a] = acc;
  }
}

}  // namespace statdg
