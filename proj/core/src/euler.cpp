#include "statdg/euler.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "statdg/errors.hpp"

namespace statdg {

namespace {

void check_physical(double rho, double p) {
  if (!(rho > 0.0) || !(p > 0.0) || !std::isfinite(rho) || !std::isfinite(p)) {
    throw StateError("nonphysical state: rho=" + std::to_string(rho) +
                     " p=" + std::to_string(p));
  }
}

// Roe-averaged |A| applied to the conservative jump, built from the
// eigendecomposition at the sqrt(rho)-weighted average state.
void roe_dissipation(const EulerModel& model, int dir, const State4& qL,
                     const State4& qR, double* out) {
  State4 pL = cons_to_prim(model, qL), pR = cons_to_prim(model, qR);
  double sL = std::sqrt(pL[0]), sR = std::sqrt(pR[0]);
  double w = 1.0 / (sL + sR);
  double u = (sL * pL[1] + sR * pR[1]) * w;
  double v = (sL * pL[2] + sR * pR[2]) * w;
  double HL = (qL[3] + pL[3]) / pL[0];
  double HR = (qR[3] + pR[3]) / pR[0];
  double H = (sL * HL + sR * HR) * w;
  double c2 = (model.gamma - 1.0) * (H - 0.5 * (u * u + v * v));
  if (!(c2 > 0.0)) throw StateError("roe average has nonpositive sound speed");
  double c = std::sqrt(c2);

  double un = (dir == 0) ? u : v;
  Eigen::Matrix4d R;
  Eigen::Vector4d lam(std::abs(un - c), std::abs(un), std::abs(un), std::abs(un + c));
  double ke = 0.5 * (u * u + v * v);
  if (dir == 0) {
    R << 1, 1, 0, 1,  //
        u - c, u, 0, u + c,  //
        v, v, 1, v,  //
        H - u * c, ke, v, H + u * c;
  } else {
    R << 1, 1, 0, 1,  //
        u, u, 1, u,  //
        v - c, v, 0, v + c,  //
        H - v * c, ke, u, H + v * c;
  }
  Eigen::Vector4d dq(qR[0] - qL[0], qR[1] - qL[1], qR[2] - qL[2], qR[3] - qL[3]);
  Eigen::Vector4d beta = R.partialPivLu().solve(dq);
  Eigen::Vector4d diss = R * lam.cwiseProduct(beta).matrix();
  for (int a = 0; a < 4; ++a) out[a] = diss[a];
}

// Low Mach diffusion matrix in primitive variables (rho, u, v, p),
// evaluated at the arithmetic mean primitive state.
void lowmach_dissipation(const EulerModel& model, int dir, const State4& qL,
                         const State4& qR, double* out) {
  State4 pL = cons_to_prim(model, qL), pR = cons_to_prim(model, qR);
  State4 pm;
  for (int a = 0; a < 4; ++a) pm[a] = 0.5 * (pL[a] + pR[a]);
  double rho = pm[0], u = pm[1], v = pm[2], p = pm[3];
  check_physical(rho, p);
  double c = std::sqrt(model.gamma * p / rho);
  double f = model.lowmach_f;
  double vmag = std::sqrt(u * u + v * v);

  // Conservative jump -> primitive jump via the exact Jacobian at the mean.
  double d_rho = qR[0] - qL[0];
  double d_u = (qR[1] - qL[1] - u * d_rho) / rho;
  double d_v = (qR[2] - qL[2] - v * d_rho) / rho;
  double d_p = (model.gamma - 1.0) *
               (qR[3] - qL[3] - 0.5 * (u * u + v * v) * d_rho - rho * u * d_u -
                rho * v * d_v);

  double w0, w1, w2, w3;
  if (dir == 0) {
    w0 = (std::abs(u) + f) * d_rho - d_u;
    w1 = (vmag + f) * d_u + d_p;
    w2 = (std::abs(u) + f) * d_v;
    w3 = -c * c * d_u + 2.0 * c * d_p;
  } else {
    w0 = (std::abs(v) + f) * d_rho - d_v;
    w1 = (std::abs(v) + f) * d_u;
    w2 = (vmag + f) * d_v + d_p;
    w3 = -c * c * d_v + 2.0 * c * d_p;
  }

  // Back to conservative variables through d(cons)/d(prim) at the mean.
  out[0] = w0;
  out[1] = u * w0 + rho * w1;
  out[2] = v * w0 + rho * w2;
  out[3] = 0.5 * (u * u + v * v) * w0 + rho * u * w1 + rho * v * w2 +
           w3 / (model.gamma - 1.0);
}

}  // namespace

State4 cons_to_prim(const EulerModel& model, const State4& cons) {
  double rho = cons[0];
  double p = pressure(model, cons);
  check_physical(rho, p);
  return {rho, cons[1] / rho, cons[2] / rho, p};
}

State4 prim_to_cons(const EulerModel& model, const State4& prim) {
  double rho = prim[0], u = prim[1], v = prim[2], p = prim[3];
  return {rho, rho * u, rho * v, p / (model.gamma - 1.0) + 0.5 * rho * (u * u + v * v)};
}

double pressure(const EulerModel& model, const State4& cons) {
  double rho = cons[0];
  return (model.gamma - 1.0) *
         (cons[3] - 0.5 * (cons[1] * cons[1] + cons[2] * cons[2]) / rho);
}

double sound_speed(const EulerModel& model, const State4& cons) {
  double p = pressure(model, cons);
  check_physical(cons[0], p);
  return std::sqrt(model.gamma * p / cons[0]);
}

void euler_flux(const EulerModel& model, int dir, const State4& cons, double* out) {
  double rho = cons[0];
  double p = pressure(model, cons);
  check_physical(rho, p);
  double u = cons[1] / rho, v = cons[2] / rho;
  if (dir == 0) {
    out[0] = cons[1];
    out[1] = cons[1] * u + p;
    out[2] = cons[1] * v;
    out[3] = u * (cons[3] + p);
  } else {
    out[0] = cons[2];
    out[1] = cons[2] * u;
    out[2] = cons[2] * v + p;
    out[3] = v * (cons[3] + p);
  }
}

void numerical_flux_euler(const EulerModel& model, int dir, const State4& qL,
                          const State4& qR, double* out) {
  double fL[4], fR[4];
  euler_flux(model, dir, qL, fL);
  euler_flux(model, dir, qR, fR);

  double diss[4] = {0, 0, 0, 0};
  switch (model.kind) {
    case FluxKind::rusanov: {
      double lam = std::max(max_signal_speed(model, dir, qL),
                            max_signal_speed(model, dir, qR));
      for (int a = 0; a < 4; ++a) diss[a] = lam * (qR[a] - qL[a]);
      break;
    }
    case FluxKind::roe:
      roe_dissipation(model, dir, qL, qR, diss);
      break;
    case FluxKind::lowmach:
      lowmach_dissipation(model, dir, qL, qR, diss);
      break;
    default:
      throw ConfigError("flux kind " + to_string(model.kind) +
                        " is not defined for the Euler system");
  }
  for (int a = 0; a < 4; ++a) out[a] = 0.5 * (fL[a] + fR[a]) - 0.5 * diss[a];
}

double max_signal_speed(const EulerModel& model, int dir, const State4& cons) {
  double c = sound_speed(model, cons);
  double vel = cons[1 + dir] / cons[0];
  return std::abs(vel) + c;
}

}  // namespace statdg
