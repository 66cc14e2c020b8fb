#ifndef WENODG_STABILIZATION_HPP
#define WENODG_STABILIZATION_HPP

#include <Eigen/Dense>

#include "wenodg/discretization.hpp"

namespace wenodg {

/// nu_e = lambda_e h_e / (2p).
inline double viscosity_parameter(double lambda, double h, int degree) {
  if (degree < 1) throw std::invalid_argument("viscosity_parameter: degree >= 1 required");
  return lambda * h / (2.0 * degree);
}

inline double viscosity_parameter(const Discretization& d, const StateField& field, int e) {
  return viscosity_parameter(d.cell_wavespeed(field, e), d.mesh->cells[e].diameter,
                             d.elem->degree());
}

/// Per-cell diagnostic emitted next to a run when sensor dumping is enabled.
struct ViscosityReport {
  Eigen::VectorXd gamma;  // smoothness sensor in [0,1]
  Eigen::VectorXd nu;     // viscosity parameter
  Eigen::VectorXd lambda; // maximum wave speed
};

/// Contributions s_i = gamma nu int_K grad(phi_i) . grad(U_h) dx of one cell,
/// applied component-wise for systems.
inline Eigen::MatrixXd stabilization_term(const Discretization& d, const StateField& field, int e,
                                          double gamma, double nu) {
  return (gamma * nu) * (d.stiffness * field.block(e));
}

/// Subtracts the stabilization operator from a residual vector:
/// R <- R - s_h(U_h, .) with per-cell coefficients gamma_e nu_e.
inline void apply_stabilization(const Discretization& d, const StateField& field,
                                const Eigen::VectorXd& gamma, const Eigen::VectorXd& nu,
                                Eigen::VectorXd& R) {
  const int N = d.elem->size();
  const int m = d.law.components;
  const int ncells = static_cast<int>(d.mesh->cells.size());
  for (int e = 0; e < ncells; ++e) {
    const double c = gamma[e] * nu[e];
    if (c == 0.0) continue;
    Eigen::Map<Eigen::MatrixXd> rb(R.data() + static_cast<Eigen::Index>(e) * N * m, N, m);
    rb.noalias() -= c * (d.stiffness * field.block(e));
  }
}

/// lambda_e for every cell (KPP uses the global bound 1.0).
inline Eigen::VectorXd cell_wavespeeds(const Discretization& d, const StateField& field) {
  const int ncells = static_cast<int>(d.mesh->cells.size());
  Eigen::VectorXd lam(ncells);
  for (int e = 0; e < ncells; ++e) lam[e] = d.cell_wavespeed(field, e);
  return lam;
}

inline Eigen::VectorXd viscosity_parameters(const Discretization& d,
                                            const Eigen::VectorXd& lambda) {
  const int p = d.elem->degree();
  Eigen::VectorXd nu(lambda.size());
  for (int e = 0; e < lambda.size(); ++e)
    nu[e] = viscosity_parameter(lambda[e], d.mesh->cells[e].diameter, p);
  return nu;
}

} // namespace wenodg

#endif
