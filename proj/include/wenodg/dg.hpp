#ifndef WENODG_DG_HPP
#define WENODG_DG_HPP

#include <Eigen/Dense>

#include "wenodg/discretization.hpp"
#include "wenodg/ghost.hpp"

namespace wenodg {

/// Semi-discrete DG residual R(U): per cell and test function,
///   R_i = int_K grad(phi_i) . F(U_h) dx - int_dK phi_i H(U-, U+, n) ds,
/// with ghost states supplying the exterior trace on boundary faces.
/// The result is written into `R` (same layout as the field data).
inline void dg_rhs(const Discretization& d, const StateField& field, const GhostPolicy& policy,
                   FluxChoice flux, double t, Eigen::VectorXd& R) {
  const Mesh& mesh = *d.mesh;
  const ReferenceElement& elem = *d.elem;
  const int N = elem.size();
  const int m = d.law.components;
  const int nq = elem.quadrature().size();
  const int ncells = static_cast<int>(mesh.cells.size());

  R.setConstant(field.size(), 0.0);
  auto rblock = [&](int e) {
    return Eigen::Map<Eigen::MatrixXd>(R.data() + static_cast<Eigen::Index>(e) * N * m, N, m);
  };

  // volume term
  Eigen::MatrixXd vals(nq, m);
  std::array<Eigen::MatrixXd, 2> fq{Eigen::MatrixXd(nq, m), Eigen::MatrixXd(nq, m)};
  StateVec U(m);
  for (int e = 0; e < ncells; ++e) {
    if (elem.degree() == 0) break; // gradients vanish
    const Cell& cell = mesh.cells[e];
    vals.noalias() = elem.phi() * field.block(e);
    for (int q = 0; q < nq; ++q) {
      U = vals.row(q).transpose();
      FluxMat F;
      try {
        F = physical_flux(d.law, U, d.quad_point(cell, q));
      } catch (const invalid_state_error& err) {
        throw invalid_state_error(std::string(err.what()) + " (volume point of cell " +
                                      std::to_string(e) + ")",
                                  e);
      }
      const double w = elem.quadrature().weights[q] * d.volume;
      for (int a = 0; a < mesh.dim; ++a) fq[a].row(q) = (w / d.dx[a]) * F.col(a).transpose();
    }
    for (int a = 0; a < mesh.dim; ++a) rblock(e).noalias() += elem.dphi(a).transpose() * fq[a];
  }

  // surface term
  const int nfq = d.face_points();
  StateVec UL(m), UR(m), H(m);
  for (const Face& f : mesh.faces) {
    const auto& TL = d.trace[f.left_local >= 0 ? f.left_local : 0];
    for (int q = 0; q < nfq; ++q) {
      const double s = d.face_s[q];
      UL = (TL.row(q) * field.block(f.left)).transpose();
      const std::array<double, 2> x = f.point(s);
      try {
        if (f.boundary())
          UR = policy.ghost_state(f.tag, UL, f.normal, x, t);
        else
          UR = (d.trace[f.right_local].row(q) * field.block(f.right)).transpose();
        H = numerical_flux(d.law, flux, UL, UR, f.normal, x);
      } catch (const invalid_state_error& err) {
        throw invalid_state_error(std::string(err.what()) + " (face " + std::to_string(f.id) +
                                      " of cell " + std::to_string(f.left) + ")",
                                  f.left);
      }
      const double w = d.face_w[q] * f.measure;
      rblock(f.left).noalias() -= w * TL.row(q).transpose() * H.transpose();
      if (!f.boundary())
        rblock(f.right).noalias() += w * d.trace[f.right_local].row(q).transpose() * H.transpose();
    }
  }
}

inline Eigen::VectorXd dg_rhs(const Discretization& d, const StateField& field,
                              const GhostPolicy& policy, FluxChoice flux, double t) {
  Eigen::VectorXd R;
  dg_rhs(d, field, policy, flux, t, R);
  return R;
}

} // namespace wenodg

#endif
