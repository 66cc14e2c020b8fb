#ifndef WENODG_TIME_INTEGRATION_HPP
#define WENODG_TIME_INTEGRATION_HPP

#include <algorithm>
#include <stdexcept>

#include <Eigen/Dense>

#include "wenodg/stabilization.hpp"
#include "wenodg/state_field.hpp"

namespace wenodg {

enum class TimeScheme { SSPRK22, SSPRK33, SSPRK54 };

struct TimeStepConfig {
  double cfl = 0.3;
  double t_final = 1.0;
  TimeScheme scheme = TimeScheme::SSPRK33;
  double fixed_dt = 0.0; // > 0 overrides the CFL rule
};

inline TimeScheme ssp_scheme_of_order(int order) {
  switch (order) {
    case 2: return TimeScheme::SSPRK22;
    case 3: return TimeScheme::SSPRK33;
    case 4: return TimeScheme::SSPRK54;
    default: throw std::invalid_argument("ssp_scheme_of_order: order must be 2, 3 or 4");
  }
}

inline int stages(TimeScheme s) {
  switch (s) {
    case TimeScheme::SSPRK22: return 2;
    case TimeScheme::SSPRK33: return 3;
    case TimeScheme::SSPRK54: return 5;
  }
  return 0;
}

/// One step of the optimal three-stage third-order SSP Runge-Kutta method.
/// `rhs(u, t, out)` must evaluate out = M^{-1} R(u) at stage time t.
template <class Rhs>
void ssp_rk3_step(Rhs&& rhs, StateField& u, double t, double dt) {
  const Eigen::VectorXd un = u.data;
  Eigen::VectorXd k;
  rhs(u, t, k);
  u.data = un + dt * k;
  rhs(u, t + dt, k);
  u.data = 0.75 * un + 0.25 * u.data + 0.25 * dt * k;
  rhs(u, t + 0.5 * dt, k);
  u.data = (1.0 / 3.0) * un + (2.0 / 3.0) * u.data + (2.0 / 3.0) * dt * k;
}

template <class Rhs>
void ssp_rk2_step(Rhs&& rhs, StateField& u, double t, double dt) {
  const Eigen::VectorXd un = u.data;
  Eigen::VectorXd k;
  rhs(u, t, k);
  u.data = un + dt * k;
  rhs(u, t + dt, k);
  u.data = 0.5 * un + 0.5 * u.data + 0.5 * dt * k;
}

/// Five-stage fourth-order SSP scheme (Spiteri-Ruuth coefficients).
template <class Rhs>
void ssp_rk54_step(Rhs&& rhs, StateField& u, double t, double dt) {
  const Eigen::VectorXd un = u.data;
  Eigen::VectorXd k1, k2, k3, k4;

  const double c1 = 0.391752226571890;
  const double c2 = 0.555629506348765 * c1 + 0.368410593050371;
  const double c3 = 0.379898148511597 * c2 + 0.251891774271694;
  const double c4 = 0.821920045606868 * c3 + 0.544974750228521;

  rhs(u, t, k1);
  Eigen::VectorXd u1 = un + 0.391752226571890 * dt * k1;
  u.data = u1;
  rhs(u, t + c1 * dt, k1);
  Eigen::VectorXd u2 = 0.444370493651235 * un + 0.555629506348765 * u1 +
                       0.368410593050371 * dt * k1;
  u.data = u2;
  rhs(u, t + c2 * dt, k2);
  Eigen::VectorXd u3 = 0.620101851488403 * un + 0.379898148511597 * u2 +
                       0.251891774271694 * dt * k2;
  u.data = u3;
  rhs(u, t + c3 * dt, k3);
  Eigen::VectorXd u4 = 0.178079954393132 * un + 0.821920045606868 * u3 +
                       0.544974750228521 * dt * k3;
  u.data = u4;
  rhs(u, t + c4 * dt, k4);
  u.data = 0.517231671970585 * u2 + 0.096059710526147 * u3 + 0.063692468666290 * dt * k3 +
           0.386708617503269 * u4 + 0.226007483236906 * dt * k4;
}

template <class Rhs>
void ssp_step(TimeScheme s, Rhs&& rhs, StateField& u, double t, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("ssp_step: dt > 0 required");
  switch (s) {
    case TimeScheme::SSPRK22: ssp_rk2_step(rhs, u, t, dt); break;
    case TimeScheme::SSPRK33: ssp_rk3_step(rhs, u, t, dt); break;
    case TimeScheme::SSPRK54: ssp_rk54_step(rhs, u, t, dt); break;
  }
}

template <class Rhs>
void ssp_step_of_order(int order, Rhs&& rhs, StateField& u, double t, double dt) {
  ssp_step(ssp_scheme_of_order(order), rhs, u, t, dt);
}

/// dt = cfl * min_e h_e / (lambda_e (2p+1)), clamped to the remaining time.
/// A globally quiescent field (lambda_e = 0 everywhere) yields the remainder.
inline double stable_timestep(const Discretization& d, const StateField& field, double cfl,
                              double remaining) {
  const int p = d.elem->degree();
  const int ncells = static_cast<int>(d.mesh->cells.size());
  double dt = std::numeric_limits<double>::infinity();
  for (int e = 0; e < ncells; ++e) {
    const double lam = d.cell_wavespeed(field, e);
    if (lam > 0.0) dt = std::min(dt, d.mesh->cells[e].diameter / (lam * (2 * p + 1)));
  }
  if (!std::isfinite(dt)) return remaining;
  return std::min(cfl * dt, remaining);
}

} // namespace wenodg

#endif
