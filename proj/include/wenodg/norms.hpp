#ifndef WENODG_NORMS_HPP
#define WENODG_NORMS_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "wenodg/discretization.hpp"

namespace wenodg {

/// L1 norm of (u_h - u_exact), per component, over-integrated with p+3 Gauss
/// points per axis: the integrand is nonsmooth, so the extra order keeps
/// quadrature noise below the reported digits.
inline Eigen::VectorXd l1_error(const Mesh& mesh, const ReferenceElement& elem,
                                const StateField& field,
                                const std::function<StateVec(const std::array<double, 2>&, double)>& exact,
                                double t) {
  if (!exact) throw std::invalid_argument("l1_error: exact solution unavailable");
  const int m = field.components;
  const int N = elem.size();
  QuadratureRule rule = gauss_rule(mesh.dim, elem.degree() + 3);
  const int nq = rule.size();
  Eigen::MatrixXd phi(nq, N);
  for (int q = 0; q < nq; ++q)
    for (int j = 0; j < N; ++j) phi(q, j) = elem.eval_basis(j, rule.points.row(q));

  Eigen::VectorXd err = Eigen::VectorXd::Zero(m);
  Eigen::MatrixXd vals;
  for (const Cell& cell : mesh.cells) {
    vals.noalias() = phi * field.block(cell.id);
    for (int q = 0; q < nq; ++q) {
      std::array<double, 2> x{cell.lo[0] + rule.points(q, 0) * cell.extent(0), 0};
      if (mesh.dim == 2) x[1] = cell.lo[1] + rule.points(q, 1) * cell.extent(1);
      const StateVec ue = exact(x, t);
      const double w = rule.weights[q] * cell.volume;
      for (int c = 0; c < m; ++c) err[c] += w * std::abs(vals(q, c) - ue[c]);
    }
  }
  return err;
}

/// Pairwise experimental orders of convergence from (h, E) pairs with h
/// strictly decreasing: log(E2/E1) / log(h2/h1).
inline std::vector<double> compute_eoc(const std::vector<std::pair<double, double>>& errors) {
  if (errors.size() < 2) throw std::invalid_argument("compute_eoc: need at least 2 entries");
  std::vector<double> eoc;
  for (size_t i = 1; i < errors.size(); ++i) {
    const auto [h1, e1] = errors[i - 1];
    const auto [h2, e2] = errors[i];
    if (!(h2 < h1)) throw std::invalid_argument("compute_eoc: h must be strictly decreasing");
    if (!(e1 > 0.0) || !(e2 > 0.0) || !(h1 > 0.0))
      throw std::invalid_argument("compute_eoc: errors and h must be positive");
    eoc.push_back(std::log(e2 / e1) / std::log(h2 / h1));
  }
  return eoc;
}

} // namespace wenodg

#endif
