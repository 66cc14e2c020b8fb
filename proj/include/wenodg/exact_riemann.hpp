#ifndef WENODG_EXACT_RIEMANN_HPP
#define WENODG_EXACT_RIEMANN_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "wenodg/conservation_laws.hpp"

namespace wenodg {

struct PrimState {
  double rho = 1.0, v = 0.0, p = 1.0;
};

/// Exact solver for the 1D Euler Riemann problem (Toro's pressure-function
/// iteration with the two-rarefaction initial guess). Sampling follows the
/// usual wave-pattern case analysis along rays xi = x/t.
class ExactRiemann {
public:
  ExactRiemann(PrimState left, PrimState right, double gamma = 1.4)
      : L_(left), R_(right), g_(gamma) {
    aL_ = std::sqrt(g_ * L_.p / L_.rho);
    aR_ = std::sqrt(g_ * R_.p / R_.rho);
    if (2.0 * (aL_ + aR_) / (g_ - 1.0) <= R_.v - L_.v)
      throw std::runtime_error("ExactRiemann: initial states generate vacuum");
    solve();
  }

  double star_pressure() const { return pstar_; }
  double star_velocity() const { return ustar_; }

  /// f_K(p) of the pressure equation for one side.
  static double side_function(double p, const PrimState& s, double gamma) {
    const double a = std::sqrt(gamma * s.p / s.rho);
    if (p > s.p) {
      const double A = 2.0 / ((gamma + 1.0) * s.rho);
      const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
      return (p - s.p) * std::sqrt(A / (p + B));
    }
    return 2.0 * a / (gamma - 1.0) * (std::pow(p / s.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
  }

  static double side_derivative(double p, const PrimState& s, double gamma) {
    const double a = std::sqrt(gamma * s.p / s.rho);
    if (p > s.p) {
      const double A = 2.0 / ((gamma + 1.0) * s.rho);
      const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
      return std::sqrt(A / (p + B)) * (1.0 - 0.5 * (p - s.p) / (B + p));
    }
    return std::pow(p / s.p, -(gamma + 1.0) / (2.0 * gamma)) / (s.rho * a);
  }

  /// Self-similar solution at the ray xi = (x - x0) / t.
  PrimState sample(double xi) const {
    if (xi <= ustar_) return sample_left(xi);
    return sample_right(xi);
  }

  StateVec sample_conserved(double xi) const {
    const PrimState s = sample(xi);
    return euler_state(s.rho, s.v, s.p, g_);
  }

private:
  void solve() {
    // two-rarefaction initial guess
    const double z = (g_ - 1.0) / (2.0 * g_);
    double p = std::pow((aL_ + aR_ - 0.5 * (g_ - 1.0) * (R_.v - L_.v)) /
                            (aL_ / std::pow(L_.p, z) + aR_ / std::pow(R_.p, z)),
                        1.0 / z);
    p = std::max(p, 1e-12);
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const double f = side_function(p, L_, g_) + side_function(p, R_, g_) + (R_.v - L_.v);
      const double fp = side_derivative(p, L_, g_) + side_derivative(p, R_, g_);
      double pn = p - f / fp;
      if (pn < 0.0) pn = 1e-12;
      const double change = std::abs(pn - p) / (0.5 * (pn + p));
      p = pn;
      if (change < 1e-12) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("ExactRiemann: pressure iteration failed to converge");
    pstar_ = p;
    ustar_ = 0.5 * (L_.v + R_.v) +
             0.5 * (side_function(p, R_, g_) - side_function(p, L_, g_));
  }

  PrimState sample_left(double xi) const {
    const double gm = (g_ - 1.0) / (g_ + 1.0);
    if (pstar_ > L_.p) { // left shock
      const double SL = L_.v - aL_ * std::sqrt((g_ + 1.0) / (2.0 * g_) * pstar_ / L_.p +
                                               (g_ - 1.0) / (2.0 * g_));
      if (xi < SL) return L_;
      const double rho = L_.rho * ((pstar_ / L_.p + gm) / (gm * pstar_ / L_.p + 1.0));
      return {rho, ustar_, pstar_};
    }
    // left rarefaction
    const double aLs = aL_ * std::pow(pstar_ / L_.p, (g_ - 1.0) / (2.0 * g_));
    const double head = L_.v - aL_;
    const double tail = ustar_ - aLs;
    if (xi < head) return L_;
    if (xi > tail) return {L_.rho * std::pow(pstar_ / L_.p, 1.0 / g_), ustar_, pstar_};
    const double f = 2.0 / (g_ + 1.0) + gm / aL_ * (L_.v - xi);
    return {L_.rho * std::pow(f, 2.0 / (g_ - 1.0)),
            2.0 / (g_ + 1.0) * (aL_ + 0.5 * (g_ - 1.0) * L_.v + xi),
            L_.p * std::pow(f, 2.0 * g_ / (g_ - 1.0))};
  }

  PrimState sample_right(double xi) const {
    const double gm = (g_ - 1.0) / (g_ + 1.0);
    if (pstar_ > R_.p) { // right shock
      const double SR = R_.v + aR_ * std::sqrt((g_ + 1.0) / (2.0 * g_) * pstar_ / R_.p +
                                               (g_ - 1.0) / (2.0 * g_));
      if (xi > SR) return R_;
      const double rho = R_.rho * ((pstar_ / R_.p + gm) / (gm * pstar_ / R_.p + 1.0));
      return {rho, ustar_, pstar_};
    }
    // right rarefaction
    const double aRs = aR_ * std::pow(pstar_ / R_.p, (g_ - 1.0) / (2.0 * g_));
    const double head = R_.v + aR_;
    const double tail = ustar_ + aRs;
    if (xi > head) return R_;
    if (xi < tail) return {R_.rho * std::pow(pstar_ / R_.p, 1.0 / g_), ustar_, pstar_};
    const double f = 2.0 / (g_ + 1.0) - gm / aR_ * (R_.v - xi);
    return {R_.rho * std::pow(f, 2.0 / (g_ - 1.0)),
            2.0 / (g_ + 1.0) * (-aR_ + 0.5 * (g_ - 1.0) * R_.v + xi),
            R_.p * std::pow(f, 2.0 * g_ / (g_ - 1.0))};
  }

  PrimState L_, R_;
  double g_;
  double aL_ = 0, aR_ = 0;
  double pstar_ = 0, ustar_ = 0;
};

} // namespace wenodg

#endif
