#ifndef WENODG_CONSERVATION_LAWS_HPP
#define WENODG_CONSERVATION_LAWS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "wenodg/errors.hpp"

namespace wenodg {

/// Conserved state with at most 4 components (Euler in 2D); stack allocated.
using StateVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1>;
/// Flux matrix F(U): components x space dimensions.
using FluxMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 2>;

using VelocityField = std::function<std::array<double, 2>(const std::array<double, 2>&)>;

struct ConservationLaw {
  enum class Kind { LinearAdvection, Burgers, KPP, Euler };

  Kind kind = Kind::LinearAdvection;
  int dim = 1;
  int components = 1;
  double gamma = 1.4;                  // Euler heat capacity ratio
  std::array<double, 2> velocity{1, 0}; // constant advection velocity
  VelocityField velocity_field;        // overrides `velocity` when set

  std::array<double, 2> advection_velocity(const std::array<double, 2>& x) const {
    return velocity_field ? velocity_field(x) : velocity;
  }
  bool is_euler() const { return kind == Kind::Euler; }
  std::string name() const {
    switch (kind) {
      case Kind::LinearAdvection: return "linear_advection";
      case Kind::Burgers: return "burgers";
      case Kind::KPP: return "kpp";
      case Kind::Euler: return "euler";
    }
    return "?";
  }

  static ConservationLaw advection(double vx, int dim = 1, double vy = 0.0) {
    ConservationLaw law;
    law.kind = Kind::LinearAdvection;
    law.dim = dim;
    law.velocity = {vx, vy};
    return law;
  }
  static ConservationLaw advection_field(VelocityField v) {
    ConservationLaw law;
    law.kind = Kind::LinearAdvection;
    law.dim = 2;
    law.velocity_field = std::move(v);
    return law;
  }
  static ConservationLaw burgers() {
    ConservationLaw law;
    law.kind = Kind::Burgers;
    return law;
  }
  static ConservationLaw kpp() {
    ConservationLaw law;
    law.kind = Kind::KPP;
    law.dim = 2;
    return law;
  }
  static ConservationLaw euler(int dim, double gamma = 1.4) {
    ConservationLaw law;
    law.kind = Kind::Euler;
    law.dim = dim;
    law.components = dim + 2;
    law.gamma = gamma;
    return law;
  }
};

/// p = (gamma-1) (rho E - |rho v|^2 / (2 rho)); throws on nonphysical input.
inline double pressure(const StateVec& U, double gamma, int dim) {
  const double rho = U[0];
  if (!(rho > 0.0)) throw invalid_state_error("nonpositive density " + std::to_string(rho));
  double ke = U[1] * U[1];
  if (dim == 2) ke += U[2] * U[2];
  ke /= 2.0 * rho;
  const double internal = U[dim + 1] - ke;
  if (!(internal > 0.0))
    throw invalid_state_error("nonpositive internal energy " + std::to_string(internal));
  return (gamma - 1.0) * internal;
}

inline double pressure(const ConservationLaw& law, const StateVec& U) {
  return pressure(U, law.gamma, law.dim);
}

inline double sound_speed(const ConservationLaw& law, const StateVec& U) {
  return std::sqrt(law.gamma * pressure(law, U) / U[0]);
}

/// Conserved Euler state from primitive (rho, v, p).
inline StateVec euler_state(double rho, double vx, double p, double gamma) {
  StateVec U(3);
  U << rho, rho * vx, p / (gamma - 1.0) + 0.5 * rho * vx * vx;
  return U;
}
inline StateVec euler_state2d(double rho, double vx, double vy, double p, double gamma) {
  StateVec U(4);
  U << rho, rho * vx, rho * vy, p / (gamma - 1.0) + 0.5 * rho * (vx * vx + vy * vy);
  return U;
}

/// F(U) evaluated at position x (only variable-velocity advection looks at x).
inline FluxMat physical_flux(const ConservationLaw& law, const StateVec& U,
                             const std::array<double, 2>& x = {0, 0}) {
  FluxMat F(law.components, law.dim);
  switch (law.kind) {
    case ConservationLaw::Kind::LinearAdvection: {
      const auto v = law.advection_velocity(x);
      for (int a = 0; a < law.dim; ++a) F(0, a) = v[a] * U[0];
      break;
    }
    case ConservationLaw::Kind::Burgers:
      F(0, 0) = 0.5 * U[0] * U[0];
      break;
    case ConservationLaw::Kind::KPP:
      F(0, 0) = std::sin(U[0]);
      F(0, 1) = std::cos(U[0]);
      break;
    case ConservationLaw::Kind::Euler: {
      const double p = pressure(law, U);
      const double rho = U[0];
      if (law.dim == 1) {
        const double v = U[1] / rho;
        F(0, 0) = U[1];
        F(1, 0) = U[1] * v + p;
        F(2, 0) = (U[2] + p) * v;
      } else {
        const double vx = U[1] / rho, vy = U[2] / rho;
        F(0, 0) = U[1];
        F(1, 0) = U[1] * vx + p;
        F(2, 0) = U[2] * vx;
        F(3, 0) = (U[3] + p) * vx;
        F(0, 1) = U[2];
        F(1, 1) = U[1] * vy;
        F(2, 1) = U[2] * vy + p;
        F(3, 1) = (U[3] + p) * vy;
      }
      break;
    }
  }
  return F;
}

/// F(U) . n without forming the full flux matrix.
inline StateVec flux_dot_n(const ConservationLaw& law, const StateVec& U,
                           const std::array<double, 2>& n, const std::array<double, 2>& x = {0, 0}) {
  StateVec H(law.components);
  switch (law.kind) {
    case ConservationLaw::Kind::LinearAdvection: {
      const auto v = law.advection_velocity(x);
      double vn = v[0] * n[0];
      if (law.dim == 2) vn += v[1] * n[1];
      H[0] = vn * U[0];
      break;
    }
    case ConservationLaw::Kind::Burgers:
      H[0] = 0.5 * U[0] * U[0] * n[0];
      break;
    case ConservationLaw::Kind::KPP:
      H[0] = std::sin(U[0]) * n[0] + std::cos(U[0]) * n[1];
      break;
    case ConservationLaw::Kind::Euler: {
      const double p = pressure(law, U);
      const double rho = U[0];
      if (law.dim == 1) {
        const double vn = (U[1] / rho) * n[0];
        H[0] = rho * vn;
        H[1] = U[1] * vn + p * n[0];
        H[2] = (U[2] + p) * vn;
      } else {
        const double vn = (U[1] * n[0] + U[2] * n[1]) / rho;
        H[0] = rho * vn;
        H[1] = U[1] * vn + p * n[0];
        H[2] = U[2] * vn + p * n[1];
        H[3] = (U[3] + p) * vn;
      }
      break;
    }
  }
  return H;
}

/// Local wave speed |F'(U)| at a point; the L-infinity surrogate used for the
/// viscosity parameter and the CFL condition. KPP uses the global bound 1.
inline double max_local_speed(const ConservationLaw& law, const StateVec& U,
                              const std::array<double, 2>& x = {0, 0}) {
  switch (law.kind) {
    case ConservationLaw::Kind::LinearAdvection: {
      const auto v = law.advection_velocity(x);
      return law.dim == 2 ? std::hypot(v[0], v[1]) : std::abs(v[0]);
    }
    case ConservationLaw::Kind::Burgers:
      return std::abs(U[0]);
    case ConservationLaw::Kind::KPP:
      return 1.0;
    case ConservationLaw::Kind::Euler: {
      const double a = sound_speed(law, U);
      const double rho = U[0];
      const double vmag = (law.dim == 1) ? std::abs(U[1] / rho)
                                         : std::hypot(U[1] / rho, U[2] / rho);
      return vmag + a;
    }
  }
  return 0.0;
}

/// Maximum wave speed s+ of the 1D Riemann problem in direction n.
/// Scalar laws use the closed-form maxima of |F'| over the segment.
inline double max_wavespeed_normal(const ConservationLaw& law, const StateVec& UL,
                                   const StateVec& UR, const std::array<double, 2>& n,
                                   const std::array<double, 2>& x = {0, 0}) {
  switch (law.kind) {
    case ConservationLaw::Kind::LinearAdvection: {
      const auto v = law.advection_velocity(x);
      double vn = v[0] * n[0];
      if (law.dim == 2) vn += v[1] * n[1];
      return std::abs(vn);
    }
    case ConservationLaw::Kind::Burgers:
      // |F'| = |u| is convex in u, maximized at a segment endpoint
      return std::max(std::abs(UL[0]), std::abs(UR[0])) * std::abs(n[0]);
    case ConservationLaw::Kind::KPP:
      return 1.0;
    case ConservationLaw::Kind::Euler: {
      const double aL = sound_speed(law, UL), aR = sound_speed(law, UR);
      double vnL = UL[1] / UL[0] * n[0], vnR = UR[1] / UR[0] * n[0];
      if (law.dim == 2) {
        vnL += UL[2] / UL[0] * n[1];
        vnR += UR[2] / UR[0] * n[1];
      }
      return std::max(std::abs(vnL) + aL, std::abs(vnR) + aR);
    }
  }
  return 0.0;
}

/// Local Lax-Friedrichs flux.
inline StateVec llf_flux(const ConservationLaw& law, const StateVec& UL, const StateVec& UR,
                         const std::array<double, 2>& n, const std::array<double, 2>& x = {0, 0}) {
  const double s = max_wavespeed_normal(law, UL, UR, n, x);
  return 0.5 * (flux_dot_n(law, UL, n, x) + flux_dot_n(law, UR, n, x)) - 0.5 * s * (UR - UL);
}

/// HLL flux for the Euler system with Davis wave-speed bounds.
inline StateVec hll_flux(const ConservationLaw& law, const StateVec& UL, const StateVec& UR,
                         const std::array<double, 2>& n) {
  const double aL = sound_speed(law, UL), aR = sound_speed(law, UR);
  double vnL = UL[1] / UL[0] * n[0], vnR = UR[1] / UR[0] * n[0];
  if (law.dim == 2) {
    vnL += UL[2] / UL[0] * n[1];
    vnR += UR[2] / UR[0] * n[1];
  }
  const double sm = std::min(vnL - aL, vnR - aR);
  const double sp = std::max(vnL + aL, vnR + aR);
  if (sm > 0.0) return flux_dot_n(law, UL, n);
  if (sp < 0.0) return flux_dot_n(law, UR, n);
  const StateVec FL = flux_dot_n(law, UL, n);
  const StateVec FR = flux_dot_n(law, UR, n);
  return (sp * FL - sm * FR + sm * sp * (UR - UL)) / (sp - sm);
}

enum class FluxChoice { LLF, HLL };

inline StateVec numerical_flux(const ConservationLaw& law, FluxChoice flux, const StateVec& UL,
                               const StateVec& UR, const std::array<double, 2>& n,
                               const std::array<double, 2>& x = {0, 0}) {
  if (flux == FluxChoice::HLL) return hll_flux(law, UL, UR, n);
  return llf_flux(law, UL, UR, n, x);
}

/// Default per-law flux assignment: scalar problems use LLF, Euler uses HLL.
inline FluxChoice default_flux(const ConservationLaw& law) {
  return law.is_euler() ? FluxChoice::HLL : FluxChoice::LLF;
}

inline bool valid_state(const ConservationLaw& law, const StateVec& U) {
  if (!U.allFinite()) return false;
  if (!law.is_euler()) return true;
  if (!(U[0] > 0.0)) return false;
  double ke = U[1] * U[1];
  if (law.dim == 2) ke += U[2] * U[2];
  return U[law.dim + 1] - ke / (2.0 * U[0]) > 0.0;
}

} // namespace wenodg

#endif
