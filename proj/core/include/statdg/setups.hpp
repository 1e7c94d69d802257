#pragma once

#include <array>
#include <cmath>
#include <functional>

namespace statdg {

using InitialData = std::function<void(double x, double y, double* q)>;

// Stationary vortex for the acoustic system (u, v, p): divergence-free
// velocity with zero pressure, compactly supported around (1/2, 1/2).
// V(r) = (1 - cos(pi r / w))^2 / 4 for r <= 2w, else 0, with w = 0.2.
InitialData acoustic_vortex(double width = 0.2, double cx = 0.5, double cy = 0.5);

// Gresho vortex for the Euler equations (rho, rho u, rho v, E) centred at
// (1/2, 1/2) with unit peak rotation speed at r = 1/5. The background
// pressure p0 = 1/(gamma eps^2) - 1/2 sets the maximum Mach number to eps.
InitialData gresho_vortex(double eps, double gamma = 1.4, double cx = 0.5, double cy = 0.5);

double gresho_background_pressure(double eps, double gamma = 1.4);

}  // namespace statdg
