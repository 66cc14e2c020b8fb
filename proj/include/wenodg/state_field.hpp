#ifndef WENODG_STATE_FIELD_HPP
#define WENODG_STATE_FIELD_HPP

#include <Eigen/Dense>

#include "wenodg/basis.hpp"
#include "wenodg/mesh.hpp"

namespace wenodg {

/// Piecewise-polynomial coefficient vector: one block of basis_size x m nodal
/// coefficients per cell. Within a block, node index varies fastest, so each
/// component is a contiguous column.
struct StateField {
  const Mesh* mesh = nullptr;
  int degree = 1;
  int components = 1;
  int basis_size = 2;
  Eigen::VectorXd data;

  StateField() = default;
  StateField(const Mesh& m, const ReferenceElement& elem, int ncomp)
      : mesh(&m), degree(elem.degree()), components(ncomp), basis_size(elem.size()),
        data(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m.cells.size()) * elem.size() * ncomp)) {}

  int block_size() const { return basis_size * components; }
  Eigen::Index size() const { return data.size(); }

  Eigen::Map<Eigen::MatrixXd> block(int cell) {
    return {data.data() + static_cast<Eigen::Index>(cell) * block_size(), basis_size, components};
  }
  Eigen::Map<const Eigen::MatrixXd> block(int cell) const {
    return {data.data() + static_cast<Eigen::Index>(cell) * block_size(), basis_size, components};
  }

  /// Nodal values of component c on a cell.
  Eigen::Map<const Eigen::VectorXd> component(int cell, int c) const {
    return {data.data() + static_cast<Eigen::Index>(cell) * block_size() + static_cast<Eigen::Index>(c) * basis_size,
            basis_size};
  }

  /// Per-component minimum/maximum over all nodal coefficients.
  void nodal_range(int c, double& mn, double& mx) const {
    mn = std::numeric_limits<double>::infinity();
    mx = -mn;
    const int ncells = static_cast<int>(mesh->cells.size());
    for (int e = 0; e < ncells; ++e) {
      auto u = component(e, c);
      mn = std::min(mn, u.minCoeff());
      mx = std::max(mx, u.maxCoeff());
    }
  }
};

} // namespace wenodg

#endif
