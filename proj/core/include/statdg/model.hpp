#pragma once

#include <array>
#include <string>
#include <vector>

namespace statdg {

enum class FluxKind { upwind, rusanov, central, lowmach, roe };

FluxKind flux_kind_from_string(const std::string& name);
std::string to_string(FluxKind kind);

// Linear hyperbolic system q_t + Jx q_x + Jy q_y = 0 with m variables.
struct LinearModel {
  int m = 0;
  std::vector<double> Jx;  // row-major m x m
  std::vector<double> Jy;
  std::vector<std::string> var_names;
};

// Diffusion matrices of the interface flux
//   fhat = J (qL + qR)/2 - D (qR - qL)/2.
struct FluxMatrices {
  FluxKind kind = FluxKind::upwind;
  std::vector<double> Dx;  // row-major m x m
  std::vector<double> Dy;
};

// Acoustic system in (u, v, p): u_t + p_x = 0, v_t + p_y = 0,
// p_t + u_x + v_y = 0.
LinearModel acoustics();

// Diffusion matrices for the acoustic system; `roe` is not a linear kind.
FluxMatrices acoustic_flux(FluxKind kind);

// fhat for the x (dir=0) or y (dir=1) interface.
void numerical_flux_linear(const LinearModel& model, const FluxMatrices& flux,
                           int dir, const double* qL, const double* qR,
                           double* out);

}  // namespace statdg
