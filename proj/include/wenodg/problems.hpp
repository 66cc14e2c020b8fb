#ifndef WENODG_PROBLEMS_HPP
#define WENODG_PROBLEMS_HPP

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wenodg/discretization.hpp"
#include "wenodg/exact_riemann.hpp"
#include "wenodg/ghost.hpp"

namespace wenodg {

/// One benchmark setup: domain, law, boundary tags, initial data, final time
/// and (when available) the exact solution.
struct BenchmarkProblem {
  std::string name;
  ConservationLaw law;
  int dim = 1;
  std::array<double, 2> lo{0, 0}, hi{1, 1};
  std::array<int, 2> default_counts{128, 1};
  std::array<BoundaryTag, 4> sides{BoundaryTag::Periodic, BoundaryTag::Periodic,
                                   BoundaryTag::Outflow, BoundaryTag::Outflow};
  double t_final = 1.0;

  std::function<StateVec(const std::array<double, 2>&)> initial;
  std::function<StateVec(const std::array<double, 2>&, double)> exact; // null if unavailable
  GhostPolicy::Prescribed inflow;
  GhostPolicy::Prescribed dirichlet;
  std::function<void(Mesh&)> retag; // optional per-face boundary adjustment

  Mesh build_mesh(std::array<int, 2> counts) const {
    Mesh m = build_structured_mesh(lo, hi, counts, dim, sides);
    if (retag) retag(m);
    return m;
  }

  GhostPolicy make_ghost() const {
    GhostPolicy g;
    g.law = &law;
    g.inflow = inflow;
    g.dirichlet = dirichlet;
    return g;
  }

  bool has_exact(double t) const {
    if (!exact) return false;
    if (law.kind == ConservationLaw::Kind::Burgers) return t < 1.0 / (2.0 * M_PI);
    return true;
  }
};

/// u = u0(x - u t) for u0 = sin(2 pi x), solved by safeguarded Newton.
/// Valid strictly before the shock formation time t_c = 1/(2 pi).
inline double burgers_sine_characteristic(double x, double t) {
  const double tc = 1.0 / (2.0 * M_PI);
  if (t >= tc) throw std::domain_error("burgers exact solution unavailable at t >= 1/(2 pi)");
  auto g = [&](double u) { return u - std::sin(2.0 * M_PI * (x - u * t)); };
  double lo = -1.0 - 1e-12, hi = 1.0 + 1e-12;
  double u = std::sin(2.0 * M_PI * x);
  for (int it = 0; it < 200; ++it) {
    const double gu = g(u);
    if (std::abs(gu) < 1e-14) return u;
    const double dg = 1.0 + 2.0 * M_PI * t * std::cos(2.0 * M_PI * (x - u * t));
    double un = u - gu / dg;
    if (!(un > lo && un < hi)) un = 0.5 * (lo + hi); // bisection fallback
    if (g(un) * g(lo) <= 0.0)
      hi = un;
    else
      lo = un;
    if (std::abs(un - u) < 1e-15) {
      u = un;
      break;
    }
    u = un;
  }
  if (std::abs(g(u)) > 1e-12)
    throw std::runtime_error("burgers characteristic Newton did not converge at x=" +
                             std::to_string(x) + " t=" + std::to_string(t));
  return u;
}

namespace detail {

inline double wrap_unit(double x) { return x - std::floor(x); }

inline StateVec scalar_state(double v) {
  StateVec u(1);
  u[0] = v;
  return u;
}

} // namespace detail

inline std::vector<std::string> benchmark_names() {
  return {"advect_smooth", "advect_composite", "burgers_sine", "solid_body_rotation",
          "kpp",           "sod",              "sod_modified", "lax",
          "shu_osher",     "blast_wave",       "double_mach"};
}

inline BenchmarkProblem get_benchmark(const std::string& name) {
  using detail::scalar_state;
  BenchmarkProblem p;
  p.name = name;

  if (name == "advect_smooth" || name == "advect_composite") {
    p.law = ConservationLaw::advection(1.0);
    p.dim = 1;
    p.lo = {0, 0};
    p.hi = {1, 0};
    p.default_counts = {128, 1};
    p.sides = {BoundaryTag::Periodic, BoundaryTag::Periodic, BoundaryTag::Outflow,
               BoundaryTag::Outflow};
    p.t_final = 1.0;
    std::function<double(double)> u0;
    if (name == "advect_smooth") {
      u0 = [](double x) { return std::cos(2.0 * M_PI * (x - 0.5)); };
    } else {
      u0 = [](double x) {
        if (x >= 0.15 && x <= 0.45) return 1.0;
        if (x > 0.55 && x < 0.85) {
          const double c = std::cos(10.0 * M_PI / 3.0 * (x - 0.7));
          return c * c;
        }
        return 0.0;
      };
    }
    p.initial = [u0](const std::array<double, 2>& x) { return scalar_state(u0(x[0])); };
    p.exact = [u0](const std::array<double, 2>& x, double t) {
      return scalar_state(u0(detail::wrap_unit(x[0] - t)));
    };
    return p;
  }

  if (name == "burgers_sine") {
    p.law = ConservationLaw::burgers();
    p.dim = 1;
    p.lo = {0, 0};
    p.hi = {1, 0};
    p.default_counts = {128, 1};
    p.sides = {BoundaryTag::Periodic, BoundaryTag::Periodic, BoundaryTag::Outflow,
               BoundaryTag::Outflow};
    p.t_final = 0.1; // convergence-study time; shock forms at t_c = 1/(2 pi)
    p.initial = [](const std::array<double, 2>& x) {
      return scalar_state(std::sin(2.0 * M_PI * x[0]));
    };
    p.exact = [](const std::array<double, 2>& x, double t) {
      return scalar_state(burgers_sine_characteristic(x[0], t));
    };
    return p;
  }

  if (name == "solid_body_rotation") {
    p.law = ConservationLaw::advection_field([](const std::array<double, 2>& x) {
      return std::array<double, 2>{2.0 * M_PI * (0.5 - x[1]), 2.0 * M_PI * (x[0] - 0.5)};
    });
    p.dim = 2;
    p.lo = {0, 0};
    p.hi = {1, 1};
    p.default_counts = {128, 128};
    p.sides = {BoundaryTag::Inflow, BoundaryTag::Inflow, BoundaryTag::Inflow,
               BoundaryTag::Inflow};
    p.t_final = 1.0; // one revolution
    p.initial = [](const std::array<double, 2>& x) {
      const double rh = std::hypot(x[0] - 0.25, x[1] - 0.5);
      if (rh <= 0.15)
        return scalar_state(0.25 + 0.25 * std::cos(M_PI * rh / 0.15));
      const double rc = std::hypot(x[0] - 0.5, x[1] - 0.25);
      if (rc <= 0.15) return scalar_state(1.0 - rc / 0.15);
      const double rs = std::hypot(x[0] - 0.5, x[1] - 0.75);
      if (rs <= 0.15 && (std::abs(x[0] - 0.5) >= 0.025 || x[1] >= 0.85)) return scalar_state(1.0);
      return scalar_state(0.0);
    };
    p.inflow = [](const std::array<double, 2>&, double) { return scalar_state(0.0); };
    return p;
  }

  if (name == "kpp") {
    p.law = ConservationLaw::kpp();
    p.dim = 2;
    p.lo = {-2.0, -2.5};
    p.hi = {2.0, 1.5};
    p.default_counts = {128, 128};
    p.sides = {BoundaryTag::Inflow, BoundaryTag::Inflow, BoundaryTag::Inflow,
               BoundaryTag::Inflow};
    p.t_final = 1.0;
    p.initial = [](const std::array<double, 2>& x) {
      return scalar_state(std::hypot(x[0], x[1]) <= 1.0 ? 3.5 * M_PI : 0.25 * M_PI);
    };
    p.inflow = [](const std::array<double, 2>&, double) { return scalar_state(0.25 * M_PI); };
    return p;
  }

  const double gamma = 1.4;
  auto riemann_problem = [&p, gamma](PrimState L, PrimState R, double split) {
    p.law = ConservationLaw::euler(1, gamma);
    p.dim = 1;
    p.initial = [L, R, split, gamma](const std::array<double, 2>& x) {
      const PrimState& s = (x[0] < split) ? L : R;
      return euler_state(s.rho, s.v, s.p, gamma);
    };
    auto solver = std::make_shared<ExactRiemann>(L, R, gamma);
    p.exact = [solver, L, R, split, gamma](const std::array<double, 2>& x, double t) {
      if (t <= 0.0) {
        const PrimState& s = (x[0] < split) ? L : R;
        return euler_state(s.rho, s.v, s.p, gamma);
      }
      return solver->sample_conserved((x[0] - split) / t);
    };
  };

  if (name == "sod") {
    p.lo = {0, 0};
    p.hi = {1, 0};
    p.default_counts = {128, 1};
    p.sides = {BoundaryTag::ReflectingWall, BoundaryTag::ReflectingWall, BoundaryTag::Outflow,
               BoundaryTag::Outflow};
    p.t_final = 0.231;
    riemann_problem({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 0.5);
    return p;
  }

  if (name == "sod_modified") {
    p.lo = {0, 0};
    p.hi = {1, 0};
    p.default_counts = {128, 1};
    p.sides = {BoundaryTag::Inflow, BoundaryTag::ReflectingWall, BoundaryTag::Outflow,
               BoundaryTag::Outflow};
    p.t_final = 0.2;
    riemann_problem({1.0, 0.75, 1.0}, {0.125, 0.0, 0.1}, 0.5);
    p.inflow = [gamma](const std::array<double, 2>&, double) {
      return euler_state(1.0, 0.75, 1.0, gamma);
    };
    return p;
  }

  if (name == "lax") {
    p.lo = {0, 0};
    p.hi = {2, 0};
    p.default_counts = {512, 1};
    p.sides = {BoundaryTag::Inflow, BoundaryTag::Inflow, BoundaryTag::Outflow,
               BoundaryTag::Outflow};
    p.t_final = 0.14;
    riemann_problem({0.445, 0.698, 3.528}, {0.5, 0.0, 0.571}, 1.0);
    p.inflow = [gamma](const std::array<double, 2>& x, double) {
      if (x[0] < 1.0) return euler_state(0.445, 0.698, 3.528, gamma);
      return euler_state(0.5, 0.0, 0.571, gamma);
    };
    return p;
  }

  if (name == "shu_osher") {
    p.law = ConservationLaw::euler(1, gamma);
    p.dim = 1;
    p.lo = {-5, 0};
    p.hi = {5, 0};
    p.default_counts = {512, 1};
    p.sides = {BoundaryTag::Inflow, BoundaryTag::ReflectingWall, BoundaryTag::Outflow,
               BoundaryTag::Outflow};
    p.t_final = 1.8;
    p.initial = [gamma](const std::array<double, 2>& x) {
      if (x[0] < -4.0) return euler_state(3.857143, 2.629369, 10.3333, gamma);
      return euler_state(1.0 + 0.2 * std::sin(5.0 * x[0]), 0.0, 1.0, gamma);
    };
    p.inflow = [gamma](const std::array<double, 2>&, double) {
      return euler_state(3.857143, 2.629369, 10.3333, gamma);
    };
    return p;
  }

  if (name == "blast_wave") {
    p.law = ConservationLaw::euler(1, gamma);
    p.dim = 1;
    p.lo = {0, 0};
    p.hi = {1, 0};
    p.default_counts = {512, 1};
    p.sides = {BoundaryTag::ReflectingWall, BoundaryTag::ReflectingWall, BoundaryTag::Outflow,
               BoundaryTag::Outflow};
    p.t_final = 0.038;
    p.initial = [gamma](const std::array<double, 2>& x) {
      double pr = 0.1;
      if (x[0] < 0.1) pr = 1000.0;
      else if (x[0] >= 0.9) pr = 100.0;
      return euler_state(1.0, 0.0, pr, gamma);
    };
    return p;
  }

  if (name == "double_mach") {
    p.law = ConservationLaw::euler(2, gamma);
    p.dim = 2;
    p.lo = {0, 0};
    p.hi = {4, 1};
    p.default_counts = {192, 48};
    p.sides = {BoundaryTag::Inflow, BoundaryTag::Outflow, BoundaryTag::ReflectingWall,
               BoundaryTag::TimeDependentDirichlet};
    p.t_final = 0.2;
    const double deg30 = M_PI / 6.0;
    const StateVec post = euler_state2d(8.0, 8.25 * std::cos(deg30), -8.25 * std::sin(deg30),
                                        116.5, gamma);
    const StateVec pre = euler_state2d(1.4, 0.0, 0.0, 1.0, gamma);
    const double x0 = 1.0 / 6.0;
    p.initial = [post, pre, x0](const std::array<double, 2>& x) {
      return (x[0] < x0 + x[1] / std::sqrt(3.0)) ? post : pre;
    };
    p.inflow = [post](const std::array<double, 2>&, double) { return post; };
    // top boundary tracks the exact shock motion; the bottom strip ahead of
    // the wall holds the post-shock state
    p.dirichlet = [post, pre, x0](const std::array<double, 2>& x, double t) {
      if (x[1] < 0.5) return post;
      return (x[0] < x0 + (1.0 + 20.0 * t) / std::sqrt(3.0)) ? post : pre;
    };
    p.retag = [x0](Mesh& m) {
      for (Face& f : m.faces)
        if (f.boundary() && f.axis == 1 && f.normal[1] < 0.0 && f.center()[0] < x0)
          f.tag = BoundaryTag::TimeDependentDirichlet;
    };
    return p;
  }

  throw config_error("unknown benchmark '" + name + "'");
}

/// Nodal interpolation of the problem's initial datum.
inline StateField project_initial_condition(const BenchmarkProblem& problem, const Mesh& mesh,
                                            const ReferenceElement& elem) {
  return interpolate(mesh, elem, problem.law.components, problem.initial);
}

} // namespace wenodg

#endif
