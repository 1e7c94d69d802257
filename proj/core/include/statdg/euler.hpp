#pragma once

#include <array>

#include "statdg/model.hpp"

namespace statdg {

// Compressible Euler equations in conservative variables (rho, rho u, rho v, e)
// with ideal gas closure p = (gamma - 1)(e - rho |v|^2 / 2).
struct EulerModel {
  double gamma = 1.4;
  FluxKind kind = FluxKind::rusanov;
  // Cut-off parameter of the low Mach diffusion matrices.
  double lowmach_f = 0.1;
};

using State4 = std::array<double, 4>;

// Throws StateError on nonpositive density or pressure.
State4 cons_to_prim(const EulerModel& model, const State4& cons);
State4 prim_to_cons(const EulerModel& model, const State4& prim);

double pressure(const EulerModel& model, const State4& cons);
double sound_speed(const EulerModel& model, const State4& cons);

// Physical flux in direction dir (0 = x, 1 = y).
void euler_flux(const EulerModel& model, int dir, const State4& cons, double* out);

// Interface flux; kind selects rusanov, roe, or lowmach.
void numerical_flux_euler(const EulerModel& model, int dir, const State4& qL,
                          const State4& qR, double* out);

// |u| + c resp. |v| + c, the signal speed bound used for time step control.
double max_signal_speed(const EulerModel& model, int dir, const State4& cons);

}  // namespace statdg
