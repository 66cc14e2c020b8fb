#ifndef WENODG_DISCRETIZATION_HPP
#define WENODG_DISCRETIZATION_HPP

#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "wenodg/basis.hpp"
#include "wenodg/conservation_laws.hpp"
#include "wenodg/mesh.hpp"
#include "wenodg/state_field.hpp"

namespace wenodg {

/// Block-diagonal DG mass operator. On an affine Cartesian mesh every block
/// equals cell volume times the reference mass matrix.
struct BlockMass {
  const Mesh* mesh = nullptr;
  int basis_size = 0;
  Eigen::MatrixXd reference;
  Eigen::MatrixXd reference_inverse;

  Eigen::MatrixXd cell_block(int e) const { return mesh->cells[e].volume * reference; }

  void apply(const StateField& in, StateField& out) const {
    const int ncells = static_cast<int>(mesh->cells.size());
    for (int e = 0; e < ncells; ++e)
      out.block(e) = mesh->cells[e].volume * (reference * in.block(e));
  }

  /// In-place M^{-1} r, block by block and component by component.
  void apply_inverse(StateField& r) const {
    const int ncells = static_cast<int>(mesh->cells.size());
    for (int e = 0; e < ncells; ++e)
      r.block(e) = (reference_inverse * r.block(e)) / mesh->cells[e].volume;
  }
};

inline BlockMass assemble_mass(const Mesh& mesh, const ReferenceElement& elem) {
  BlockMass M;
  M.mesh = &mesh;
  M.basis_size = elem.size();
  M.reference = elem.reference_mass();
  M.reference_inverse = elem.reference_mass_inverse();
  return M;
}

/// Mass matrix of a single affine Cartesian cell.
inline Eigen::MatrixXd local_mass_matrix(const ReferenceElement& elem, const Cell& cell) {
  if (!(cell.volume > 0.0)) throw std::invalid_argument("local_mass_matrix: degenerate cell");
  return cell.volume * elem.reference_mass();
}

/// Precomputed element tables shared by the residual, stabilization and
/// sensor evaluations. Uniform Cartesian meshes make every cell identical, so
/// all matrices are computed once.
struct Discretization {
  const Mesh* mesh = nullptr;
  const ReferenceElement* elem = nullptr;
  ConservationLaw law;

  std::array<double, 2> dx{1, 1};
  double volume = 1;
  double diameter = 1;

  // face quadrature: parameter values, reference weights (sum to 1)
  Eigen::VectorXd face_s;
  Eigen::VectorXd face_w;
  std::array<Eigen::MatrixXd, 4> trace; // nfq x N basis values per local face

  Eigen::MatrixXd stiffness; // physical grad-grad matrix of one cell
  Eigen::MatrixXd sobolev;   // Gram matrix of the scaled Sobolev semi-norm
  Eigen::MatrixXd mass_inv;  // physical inverse mass of one cell

  int nfaces_local() const { return 2 * mesh->dim; }
  int face_points() const { return static_cast<int>(face_s.size()); }

  Discretization(const Mesh& m, const ReferenceElement& e, ConservationLaw l)
      : mesh(&m), elem(&e), law(std::move(l)) {
    const Cell& c0 = m.cells.front();
    dx[0] = c0.extent(0);
    dx[1] = (m.dim == 2) ? c0.extent(1) : 1.0;
    volume = c0.volume;
    diameter = c0.diameter;

    const int N = e.size();
    const int nq1 = static_cast<int>(std::round(std::pow(e.quadrature().size(), 1.0 / m.dim)));
    if (m.dim == 1) {
      face_s.resize(1);
      face_s[0] = 0.5;
      face_w = Eigen::VectorXd::Ones(1);
    } else {
      QuadratureRule line = gauss_rule(1, nq1);
      face_s = line.points.col(0);
      face_w = line.weights;
    }
    const int nfq = face_points();
    for (int lf = 0; lf < nfaces_local(); ++lf) {
      trace[lf].resize(nfq, N);
      for (int q = 0; q < nfq; ++q) {
        Eigen::Vector2d xi;
        const double s = face_s[q];
        switch (lf) {
          case 0: xi << 0.0, s; break;
          case 1: xi << 1.0, s; break;
          case 2: xi << s, 0.0; break;
          case 3: xi << s, 1.0; break;
        }
        if (m.dim == 1) xi[0] = (lf == 0) ? 0.0 : 1.0;
        for (int j = 0; j < N; ++j) trace[lf](q, j) = e.eval_basis(j, xi);
      }
    }

    // physical stiffness: sum over axes of (|K|/dx_a^2) * int dPhi_a dPhi_a
    stiffness = Eigen::MatrixXd::Zero(N, N);
    for (int a = 0; a < m.dim; ++a)
      stiffness += (volume / (dx[a] * dx[a])) *
                   (e.dphi(a).transpose() * e.quadrature().weights.asDiagonal() * e.dphi(a));

    sobolev = build_sobolev_matrix();
    mass_inv = e.reference_mass_inverse() / volume;
  }

  /// Physical coordinates of a reference point in cell e.
  std::array<double, 2> to_physical(const Cell& cell, const Eigen::VectorXd& xi) const {
    std::array<double, 2> x{cell.lo[0] + xi[0] * dx[0], 0};
    if (mesh->dim == 2) x[1] = cell.lo[1] + xi[1] * dx[1];
    return x;
  }

  std::array<double, 2> quad_point(const Cell& cell, int q) const {
    std::array<double, 2> x{cell.lo[0] + elem->quadrature().points(q, 0) * dx[0], 0};
    if (mesh->dim == 2) x[1] = cell.lo[1] + elem->quadrature().points(q, 1) * dx[1];
    return x;
  }

  /// lambda_e: maximum local wave speed over the volume quadrature points.
  double cell_wavespeed(const StateField& field, int e) const {
    const auto u = field.block(e);
    const int nq = elem->quadrature().size();
    double lam = 0.0;
    StateVec U(law.components);
    for (int q = 0; q < nq; ++q) {
      U = (elem->phi().row(q) * u).transpose();
      lam = std::max(lam, max_local_speed(law, U, quad_point(mesh->cells[e], q)));
    }
    return lam;
  }

  /// Scaled Sobolev semi-norm (squared) of a single-component coefficient
  /// vector on any cell of the uniform mesh.
  double seminorm2(const Eigen::Ref<const Eigen::VectorXd>& coeffs) const {
    return coeffs.dot(sobolev * coeffs);
  }

private:
  Eigen::MatrixXd build_sobolev_matrix() const {
    const int p = elem->degree();
    const int N = elem->size();
    const int d = mesh->dim;
    const double h = diameter;
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(N, N);
    if (p == 0) return S;

    // 1D Gram matrices of r-th derivatives on [0,1]
    const auto& line = elem->line_basis();
    QuadratureRule q1 = gauss_rule(1, p + 1);
    std::vector<Eigen::MatrixXd> A(p + 1);
    for (int r = 0; r <= p; ++r) {
      A[r] = Eigen::MatrixXd::Zero(p + 1, p + 1);
      for (int qq = 0; qq < q1.size(); ++qq) {
        Eigen::VectorXd der(p + 1);
        for (int j = 0; j <= p; ++j) der[j] = line.deriv(j, q1.points(qq, 0), r);
        A[r] += q1.weights[qq] * der * der.transpose();
      }
    }

    if (d == 1) {
      for (int k = 1; k <= p; ++k)
        S += std::pow(h, 2 * k - 1) * volume * std::pow(dx[0], -2.0 * k) * A[k];
      return S;
    }
    const int n1 = p + 1;
    for (int k1 = 0; k1 <= p; ++k1)
      for (int k2 = 0; k2 <= p; ++k2) {
        const int total = k1 + k2;
        if (total < 1 || total > p) continue;
        const double scale = std::pow(h, 2.0 * total - d) * volume *
                             std::pow(dx[0], -2.0 * k1) * std::pow(dx[1], -2.0 * k2);
        for (int jy = 0; jy < n1; ++jy)
          for (int jx = 0; jx < n1; ++jx)
            for (int iy = 0; iy < n1; ++iy)
              for (int ix = 0; ix < n1; ++ix)
                S(iy * n1 + ix, jy * n1 + jx) += scale * A[k1](ix, jx) * A[k2](iy, jy);
      }
    return S;
  }
};

/// Nodal interpolation of an initial state function U0(x).
template <class Fn>
StateField interpolate(const Mesh& mesh, const ReferenceElement& elem, int ncomp, Fn&& u0) {
  StateField f(mesh, elem, ncomp);
  const int N = elem.size();
  for (const Cell& cell : mesh.cells) {
    auto blk = f.block(cell.id);
    for (int j = 0; j < N; ++j) {
      std::array<double, 2> x{cell.lo[0] + elem.nodes()(j, 0) * cell.extent(0), 0};
      if (mesh.dim == 2) x[1] = cell.lo[1] + elem.nodes()(j, 1) * cell.extent(1);
      const StateVec U = u0(x);
      for (int c = 0; c < ncomp; ++c) blk(j, c) = U[c];
    }
  }
  return f;
}

} // namespace wenodg

#endif
