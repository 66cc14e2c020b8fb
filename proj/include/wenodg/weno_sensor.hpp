#ifndef WENODG_WENO_SENSOR_HPP
#define WENODG_WENO_SENSOR_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "wenodg/discretization.hpp"

namespace wenodg {

struct SensorConfig {
  enum class Variant { Relative, Zhao };

  double q = 1.0;   // sensitivity exponent of the relative sensor
  double b = 0.0;   // activation threshold; b = 0 is the plain sensor
  Variant variant = Variant::Relative;
  double theta = 1.0; // Zhao sensitivity to deviations from ideal weights
  double eps = 1e-12; // regularizer base; effective value scales with the data
  double neighbor_weight = 0.001; // linear weight of each neighbor candidate

  double central_weight(int m_e) const { return 1.0 - m_e * neighbor_weight; }
};

/// Candidate polynomials of one cell: column 0 is the cell's own DG
/// polynomial, column l >= 1 the Hermite fit against face neighbor l.
struct CandidateSet {
  Eigen::MatrixXd polys; // basis_size x (m_e + 1)
  Eigen::VectorXd beta;  // smoothness indicators (squared scaled semi-norm)
  Eigen::VectorXd omega; // nonlinear weights, sum to one

  int neighbors() const { return static_cast<int>(polys.cols()) - 1; }
};

/// sqrt of the scaled Sobolev semi-norm Gram form; zero iff v is constant.
inline double scaled_sobolev_seminorm(const Discretization& d,
                                      const Eigen::Ref<const Eigen::VectorXd>& coeffs) {
  return std::sqrt(std::max(0.0, d.seminorm2(coeffs)));
}

/// Hermite-WENO smoothness machinery. Candidate polynomials are degree-p
/// polynomials on the central cell that preserve its average exactly and fit
/// the neighbor's values and first derivatives at the neighbor's volume
/// quadrature points in the least-squares sense. On a uniform Cartesian mesh
/// the fit operators depend only on the neighbor direction, so they are
/// precomputed once:
///   candidate = C[dir] * u_neighbor + mean(u_own) * g[dir].
class WenoSensor {
public:
  explicit WenoSensor(const Discretization& d) : d_(&d) {
    const ReferenceElement& elem = *d.elem;
    if (elem.degree() < 1)
      throw std::invalid_argument("WenoSensor: degree >= 1 required");
    const Mesh& mesh = *d.mesh;
    const int N = elem.size();
    const int dim = mesh.dim;
    const int nq = elem.quadrature().size();

    avg_ = elem.averaging();
    // null-space basis of the averaging constraint
    Eigen::MatrixXd a = avg_.transpose();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd Q = qr.householderQ();
    Eigen::MatrixXd Z = Q.rightCols(N - 1);

    const std::array<std::array<double, 2>, 4> offsets{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
    const int rows = (1 + dim) * nq;
    for (int dir = 0; dir < 2 * dim; ++dir) {
      Eigen::MatrixXd A(rows, N), B(rows, N);
      for (int q = 0; q < nq; ++q) {
        Eigen::Vector2d xi_nb = Eigen::Vector2d::Zero();
        xi_nb.head(dim) = elem.quadrature().points.row(q).head(dim).transpose();
        Eigen::Vector2d xi_own = xi_nb;
        for (int ax = 0; ax < dim; ++ax) xi_own[ax] += offsets[dir][ax];
        for (int j = 0; j < N; ++j) {
          A(q, j) = elem.eval_basis(j, xi_own);
          B(q, j) = elem.phi()(q, j);
          for (int ax = 0; ax < dim; ++ax) {
            A((1 + ax) * nq + q, j) = elem.eval_basis_deriv(j, xi_own, ax) / d.dx[ax];
            B((1 + ax) * nq + q, j) = elem.dphi(ax)(q, j) / d.dx[ax];
          }
        }
      }
      const Eigen::MatrixXd AZ = A * Z;
      const Eigen::MatrixXd P =
          AZ.completeOrthogonalDecomposition().pseudoInverse(); // (N-1) x rows
      if ((AZ * P * AZ - AZ).norm() > 1e-8 * std::max(1.0, AZ.norm()))
        throw std::runtime_error("WenoSensor: rank-deficient candidate fit");
      C_[dir] = Z * P * B;
      g_[dir] = Eigen::VectorXd::Ones(N) - Z * P * (A * Eigen::VectorXd::Ones(N));
    }

    // neighbor table: (cell id, direction) pairs per cell
    neighbors_.resize(mesh.cells.size());
    for (const Cell& cell : mesh.cells) {
      for (int lf = 0; lf < 2 * dim; ++lf) {
        const int fid = cell.faces[lf];
        if (fid < 0) continue;
        const Face& f = mesh.faces[fid];
        if (f.boundary()) continue;
        const int nb = (f.left == cell.id && f.left_local == lf) ? f.right : f.left;
        neighbors_[cell.id].push_back({nb, lf});
      }
    }
  }

  int sensor_component() const { return 0; } // density for Euler, u for scalar

  /// Candidate polynomials for component `comp` of cell e.
  CandidateSet candidates(const StateField& field, int e, int comp) const {
    const auto& nbs = neighbors_[e];
    const int N = d_->elem->size();
    CandidateSet cs;
    cs.polys.resize(N, static_cast<Eigen::Index>(nbs.size()) + 1);
    const Eigen::VectorXd own = field.component(e, comp);
    const double mu = avg_ * own;
    cs.polys.col(0) = own;
    for (size_t l = 0; l < nbs.size(); ++l) {
      const auto [nb, dir] = nbs[l];
      cs.polys.col(static_cast<Eigen::Index>(l) + 1) =
          C_[dir] * field.component(nb, comp) + mu * g_[dir];
    }
    return cs;
  }

  /// beta_l = ||U_l||_e^2 and the normalized nonlinear weights
  /// omega_l = alpha_l / sum(alpha), alpha_l = lw_l / (eps + beta_l)^2.
  void compute_weights(CandidateSet& cs, const SensorConfig& cfg) const {
    const int n = static_cast<int>(cs.polys.cols());
    cs.beta.resize(n);
    for (int l = 0; l < n; ++l) cs.beta[l] = std::max(0.0, d_->seminorm2(cs.polys.col(l)));
    const int m_e = n - 1;
    const double eps = cfg.eps * (1.0 + cs.beta[0]);
    cs.omega.resize(n);
    for (int l = 0; l < n; ++l) {
      const double lw = (l == 0) ? cfg.central_weight(m_e) : cfg.neighbor_weight;
      const double denom = eps + cs.beta[l];
      cs.omega[l] = lw / (denom * denom);
    }
    cs.omega /= cs.omega.sum();
  }

  /// U* = sum_l omega_l U_l; convex combination, preserves the cell average.
  Eigen::VectorXd reconstruct(const CandidateSet& cs) const { return cs.polys * cs.omega; }

  /// Relative sensor gamma_e = min(1, ||U - U*||_e / ||U||_e)^q with the
  /// activation threshold b; constant cells with matching reconstruction give 0.
  double relative_gamma(const Eigen::Ref<const Eigen::VectorXd>& own,
                        const Eigen::Ref<const Eigen::VectorXd>& ustar,
                        const SensorConfig& cfg) const {
    const double den2 = std::max(0.0, d_->seminorm2(own));
    const double num2 = std::max(0.0, d_->seminorm2(own - ustar));
    const double scale = std::max(1.0, own.cwiseAbs().maxCoeff());
    const double floor = 1e-28 * scale * scale;
    if (den2 <= floor) return num2 <= floor ? 0.0 : 1.0;
    const double r = std::sqrt(num2 / den2);
    if (r < cfg.b) return 0.0;
    return std::pow(std::min(1.0, r), cfg.q);
  }

  /// Zhao et al. sensor from the deviation of nonlinear weights from the
  /// ideal linear weights; in [0,1], zero when omega equals the ideal weights.
  double zhao_gamma(const CandidateSet& cs, const SensorConfig& cfg) const {
    const int m_e = cs.neighbors();
    if (m_e == 0) return 0.0;
    double num = 0.0;
    double min_lw = cfg.central_weight(m_e);
    for (int l = 0; l <= m_e; ++l) {
      const double lw = (l == 0) ? cfg.central_weight(m_e) : cfg.neighbor_weight;
      min_lw = std::min(min_lw, lw);
      num += std::pow(std::abs(cs.omega[l] / lw - 1.0), cfg.theta);
    }
    const double den = std::pow(std::abs(1.0 / min_lw - 1.0), cfg.theta) + m_e;
    return std::clamp(num / den, 0.0, 1.0);
  }

  double gamma(const StateField& field, int e, const SensorConfig& cfg) const {
    CandidateSet cs = candidates(field, e, sensor_component());
    compute_weights(cs, cfg);
    if (cfg.variant == SensorConfig::Variant::Zhao) return zhao_gamma(cs, cfg);
    return relative_gamma(cs.polys.col(0), reconstruct(cs), cfg);
  }

  /// Sensor values for every cell, evaluated from the current stage solution.
  Eigen::VectorXd gammas(const StateField& field, const SensorConfig& cfg) const {
    const int ncells = static_cast<int>(d_->mesh->cells.size());
    Eigen::VectorXd g(ncells);
    for (int e = 0; e < ncells; ++e) g[e] = gamma(field, e, cfg);
    return g;
  }

  const std::vector<std::vector<std::pair<int, int>>>& neighbor_table() const {
    return neighbors_;
  }

private:
  const Discretization* d_;
  Eigen::RowVectorXd avg_;
  std::array<Eigen::MatrixXd, 4> C_;
  std::array<Eigen::VectorXd, 4> g_;
  std::vector<std::vector<std::pair<int, int>>> neighbors_;
};

} // namespace wenodg

#endif
