#ifndef WENODG_BASIS_HPP
#define WENODG_BASIS_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "wenodg/quadrature.hpp"

namespace wenodg {

namespace detail {

/// 1D Lagrange basis on equispaced nodes of [0,1], stored as monomial
/// coefficients so that derivatives of any order are exact. Conditioning is a
/// non-issue for the low degrees used here.
struct Lagrange1D {
  int degree = 1;
  Eigen::VectorXd nodes;  // degree+1
  Eigen::MatrixXd coeffs; // row j = monomial coefficients of basis j

  explicit Lagrange1D(int p) : degree(p) {
    const int n = p + 1;
    nodes.resize(n);
    if (p == 0)
      nodes[0] = 0.5;
    else
      for (int j = 0; j < n; ++j) nodes[j] = static_cast<double>(j) / p;
    Eigen::MatrixXd vand(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) vand(i, k) = std::pow(nodes[i], k);
    // row j of coeffs solves V c = e_j
    coeffs = vand.fullPivLu().solve(Eigen::MatrixXd::Identity(n, n)).transpose();
  }

  /// Value of basis j at t; valid for any real t (polynomial extension).
  double value(int j, double t) const { return deriv(j, t, 0); }

  /// k-th derivative of basis j at t.
  double deriv(int j, double t, int k) const {
    const int n = degree + 1;
    double acc = 0.0;
    for (int m = k; m < n; ++m) {
      double fac = 1.0;
      for (int r = 0; r < k; ++r) fac *= (m - r);
      acc += coeffs(j, m) * fac * std::pow(t, m - k);
    }
    return acc;
  }
};

} // namespace detail

/// Degree-p nodal Lagrange element on the reference cell [0,1]^dim
/// (equispaced nodes, tensor product in 2D) with its volume quadrature,
/// tabulated basis values/gradients and the reference mass matrix.
class ReferenceElement {
public:
  ReferenceElement(int dim, int degree, int quad_points_per_axis = -1)
      : dim_(dim), degree_(degree), line_(degree) {
    if (dim < 1 || dim > 2) throw std::invalid_argument("ReferenceElement: dim must be 1 or 2");
    if (degree < 0) throw std::invalid_argument("ReferenceElement: degree >= 0 required");
    const int n1 = degree + 1;
    size_ = (dim == 1) ? n1 : n1 * n1;

    nodes_.resize(size_, dim);
    for (int j = 0; j < size_; ++j) {
      nodes_(j, 0) = line_.nodes[j % n1];
      if (dim == 2) nodes_(j, 1) = line_.nodes[j / n1];
    }

    const int nq1 = (quad_points_per_axis > 0) ? quad_points_per_axis : degree + 1;
    quad_ = gauss_rule(dim, nq1);
    const int nq = quad_.size();
    phi_.resize(nq, size_);
    for (int a = 0; a < dim; ++a) dphi_[a].resize(nq, size_);
    for (int q = 0; q < nq; ++q) {
      for (int j = 0; j < size_; ++j) {
        phi_(q, j) = eval_basis(j, quad_.points.row(q));
        for (int a = 0; a < dim; ++a) dphi_[a](q, j) = eval_basis_deriv(j, quad_.points.row(q), a);
      }
    }
    mass_ = phi_.transpose() * quad_.weights.asDiagonal() * phi_;
    mass_inv_ = mass_.llt().solve(Eigen::MatrixXd::Identity(size_, size_));
    avg_ = quad_.weights.transpose() * phi_; // integral of each basis over the reference cell
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return size_; }

  const Eigen::MatrixXd& nodes() const { return nodes_; }
  const QuadratureRule& quadrature() const { return quad_; }
  const Eigen::MatrixXd& phi() const { return phi_; }
  const Eigen::MatrixXd& dphi(int axis) const { return dphi_[axis]; }
  const Eigen::MatrixXd& reference_mass() const { return mass_; }
  const Eigen::MatrixXd& reference_mass_inverse() const { return mass_inv_; }
  /// Row vector of reference basis integrals; avg over a cell = avg_ * coeffs.
  const Eigen::RowVectorXd& averaging() const { return avg_; }
  const detail::Lagrange1D& line_basis() const { return line_; }

  /// Basis value at an arbitrary reference point (polynomial extension
  /// outside [0,1]^dim is intentional; used by the reconstruction stencils).
  template <class Vec>
  double eval_basis(int j, const Vec& xi) const {
    const int n1 = degree_ + 1;
    double v = line_.value(j % n1, xi[0]);
    if (dim_ == 2) v *= line_.value(j / n1, xi[1]);
    return v;
  }

  /// Mixed partial derivative D^{(kx,ky)} of basis j at a reference point.
  template <class Vec>
  double eval_basis_deriv(int j, const Vec& xi, int axis) const {
    std::array<int, 2> k{0, 0};
    k[axis] = 1;
    return eval_basis_mixed(j, xi, k);
  }

  template <class Vec>
  double eval_basis_mixed(int j, const Vec& xi, const std::array<int, 2>& k) const {
    const int n1 = degree_ + 1;
    double v = line_.deriv(j % n1, xi[0], k[0]);
    if (dim_ == 2) v *= line_.deriv(j / n1, xi[1], k[1]);
    return v;
  }

private:
  int dim_;
  int degree_;
  int size_;
  detail::Lagrange1D line_;
  Eigen::MatrixXd nodes_;
  QuadratureRule quad_;
  Eigen::MatrixXd phi_;
  std::array<Eigen::MatrixXd, 2> dphi_;
  Eigen::MatrixXd mass_;
  Eigen::MatrixXd mass_inv_;
  Eigen::RowVectorXd avg_;
};

/// Values and reference gradients of all basis functions at a point of the
/// closed reference element.
inline void reference_basis(const ReferenceElement& elem, const Eigen::VectorXd& point,
                            Eigen::VectorXd& values, Eigen::MatrixXd& gradients) {
  if (point.size() != elem.dim()) throw std::invalid_argument("reference_basis: point dim mismatch");
  for (int a = 0; a < elem.dim(); ++a)
    if (point[a] < -1e-14 || point[a] > 1.0 + 1e-14)
      throw std::domain_error("reference_basis: point outside reference element");
  values.resize(elem.size());
  gradients.resize(elem.size(), elem.dim());
  for (int j = 0; j < elem.size(); ++j) {
    values[j] = elem.eval_basis(j, point);
    for (int a = 0; a < elem.dim(); ++a) gradients(j, a) = elem.eval_basis_deriv(j, point, a);
  }
}

} // namespace wenodg

#endif
