#include "statdg/setups.hpp"

#include <numbers>

namespace statdg {

InitialData acoustic_vortex(double width, double cx, double cy) {
  return [=](double x, double y, double* q) {
    const double rx = x - cx;
    const double ry = y - cy;
    const double r = std::hypot(rx, ry);
    double speed = 0.0;
    if (r > 0.0 && r <= 2.0 * width) {
      const double c = 1.0 - std::cos(std::numbers::pi * r / width);
      speed = 0.25 * c * c;
    }
    q[0] = r > 0.0 ? -speed * ry / r : 0.0;
    q[1] = r > 0.0 ? speed * rx / r : 0.0;
    q[2] = 0.0;
  };
}

double gresho_background_pressure(double eps, double gamma) {
  return 1.0 / (gamma * eps * eps) - 0.5;
}

InitialData gresho_vortex(double eps, double gamma, double cx, double cy) {
  const double p0 = gresho_background_pressure(eps, gamma);
  return [=](double x, double y, double* q) {
    const double rx = x - cx;
    const double ry = y - cy;
    const double r = std::hypot(rx, ry);
    double vphi = 0.0;
    double p = p0 + 4.0 * std::numbers::ln2 - 2.0;
    if (r < 0.2) {
      vphi = 5.0 * r;
      p = p0 + 12.5 * r * r;
    } else if (r < 0.4) {
      vphi = 2.0 - 5.0 * r;
      p = p0 + 4.0 * std::log(5.0 * r) + 4.0 - 20.0 * r + 12.5 * r * r;
    }
    const double u = r > 0.0 ? -vphi * ry / r : 0.0;
    const double v = r > 0.0 ? vphi * rx / r : 0.0;
    q[0] = 1.0;
    q[1] = u;
    q[2] = v;
    q[3] = p / (gamma - 1.0) + 0.5 * (u * u + v * v);
  };
}

}  // namespace statdg
