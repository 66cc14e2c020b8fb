#ifndef WENODG_QUADRATURE_HPP
#define WENODG_QUADRATURE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace wenodg {

/// Quadrature rule on the reference element [0,1]^dim.
/// Weights are positive and sum to one (the reference measure).
struct QuadratureRule {
  int dim = 1;
  Eigen::MatrixXd points;  // nq x dim
  Eigen::VectorXd weights; // nq

  int size() const { return static_cast<int>(weights.size()); }
};

namespace detail {

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
inline void gauss_legendre(int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // recurrence for P_n(t) and P'_n(t)
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pn = (n == 0) ? 1.0 : p1;
      pp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = pn / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    double wi = 2.0 / ((1.0 - t * t) * pp * pp);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
  if (n == 1) {
    x[0] = 0.0;
    w[0] = 2.0;
  }
}

} // namespace detail

/// Gauss rule with `npoints` points per axis on [0,1]^dim, exact for 1D
/// polynomials of degree 2*npoints-1 (tensor product in 2D).
inline QuadratureRule gauss_rule(int dim, int npoints) {
  if (npoints < 1) throw std::invalid_argument("gauss_rule: npoints >= 1 required");
  if (dim < 1 || dim > 2) throw std::invalid_argument("gauss_rule: dim must be 1 or 2");
  Eigen::VectorXd x, w;
  detail::gauss_legendre(npoints, x, w);
  // map [-1,1] -> [0,1]
  Eigen::VectorXd x01 = (x.array() + 1.0) * 0.5;
  Eigen::VectorXd w01 = w * 0.5;

  QuadratureRule rule;
  rule.dim = dim;
  if (dim == 1) {
    rule.points.resize(npoints, 1);
    rule.points.col(0) = x01;
    rule.weights = w01;
  } else {
    const int nq = npoints * npoints;
    rule.points.resize(nq, 2);
    rule.weights.resize(nq);
    for (int j = 0; j < npoints; ++j)
      for (int i = 0; i < npoints; ++i) {
        const int q = j * npoints + i;
        rule.points(q, 0) = x01[i];
        rule.points(q, 1) = x01[j];
        rule.weights[q] = w01[i] * w01[j];
      }
  }
  return rule;
}

} // namespace wenodg

#endif
