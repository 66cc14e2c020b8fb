#ifndef WENODG_GHOST_HPP
#define WENODG_GHOST_HPP

#include <functional>

#include "wenodg/conservation_laws.hpp"
#include "wenodg/mesh.hpp"

namespace wenodg {

/// Exterior trace states for weakly imposed boundary conditions.
/// Inflow and TimeDependentDirichlet prescribe a state (possibly space/time
/// dependent); Outflow copies the interior trace; ReflectingWall mirrors the
/// normal momentum and preserves density, energy and tangential momentum.
struct GhostPolicy {
  using Prescribed = std::function<StateVec(const std::array<double, 2>& x, double t)>;

  const ConservationLaw* law = nullptr;
  Prescribed inflow;
  Prescribed dirichlet;

  StateVec ghost_state(BoundaryTag tag, const StateVec& U_in, const std::array<double, 2>& n,
                       const std::array<double, 2>& x, double t) const {
    switch (tag) {
      case BoundaryTag::Outflow:
        return U_in;
      case BoundaryTag::ReflectingWall: {
        if (!law || !law->is_euler())
          throw config_error("reflecting wall boundary requires the Euler system");
        StateVec U = U_in;
        double mn = U[1] * n[0];
        if (law->dim == 2) mn += U[2] * n[1];
        U[1] -= 2.0 * mn * n[0];
        if (law->dim == 2) U[2] -= 2.0 * mn * n[1];
        return U;
      }
      case BoundaryTag::Inflow:
        if (!inflow) throw config_error("inflow boundary has no prescribed state");
        return inflow(x, t);
      case BoundaryTag::TimeDependentDirichlet:
        if (!dirichlet) throw config_error("dirichlet boundary has no prescribed state");
        return dirichlet(x, t);
      default:
        throw config_error("no ghost rule for boundary tag");
    }
  }
};

} // namespace wenodg

#endif
