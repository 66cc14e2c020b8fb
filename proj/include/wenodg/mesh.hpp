#ifndef WENODG_MESH_HPP
#define WENODG_MESH_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wenodg/quadrature.hpp"

namespace wenodg {

enum class BoundaryTag {
  None, // interior face
  Periodic,
  Inflow,
  ReflectingWall,
  Outflow,
  TimeDependentDirichlet,
};

inline const char* to_string(BoundaryTag t) {
  switch (t) {
    case BoundaryTag::None: return "none";
    case BoundaryTag::Periodic: return "periodic";
    case BoundaryTag::Inflow: return "inflow";
    case BoundaryTag::ReflectingWall: return "reflecting_wall";
    case BoundaryTag::Outflow: return "outflow";
    case BoundaryTag::TimeDependentDirichlet: return "time_dependent_dirichlet";
  }
  return "?";
}

struct Cell {
  int id = -1;
  std::array<double, 2> lo{0, 0};
  std::array<double, 2> hi{0, 0};
  double volume = 0;
  double diameter = 0;               // h_e: interval length in 1D, diagonal in 2D
  std::array<int, 4> faces{-1, -1, -1, -1}; // local order: W,E in 1D; W,E,S,N in 2D

  double extent(int axis) const { return hi[axis] - lo[axis]; }
  std::array<double, 2> center() const {
    return {0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])};
  }
};

/// Face between two cells (or a cell and the boundary). The unit normal is
/// oriented from `left` to `right`; boundary faces store the owning cell in
/// `left` and an outward normal. Periodic wrap faces carry both cell ids.
struct Face {
  int id = -1;
  int left = -1;
  int right = -1; // -1 for boundary faces
  BoundaryTag tag = BoundaryTag::None;
  std::array<double, 2> normal{0, 0};
  double measure = 0; // length in 2D, 1 in 1D
  int axis = 0;       // axis of the normal
  double plane = 0;   // coordinate of the face along `axis`
  double tlo = 0, thi = 0; // tangential extent (2D)
  int left_local = -1, right_local = -1; // local face index in each cell
  bool wrap = false;  // periodic identification of opposite sides

  bool boundary() const { return right < 0; }
  std::array<double, 2> point(double s) const {
    std::array<double, 2> x{plane, 0};
    if (axis == 1) x = {tlo + s * (thi - tlo), plane};
    else x[1] = tlo + s * (thi - tlo);
    return x;
  }
  std::array<double, 2> center() const { return point(0.5); }
};

struct Mesh {
  int dim = 1;
  std::array<double, 2> xmin{0, 0}, xmax{1, 1};
  std::array<int, 2> counts{1, 1};
  std::array<bool, 2> periodic{false, false};
  std::vector<Cell> cells;
  std::vector<Face> faces;

  int cell_index(int i, int j = 0) const { return j * counts[0] + i; }
  double domain_measure() const {
    double m = xmax[0] - xmin[0];
    if (dim == 2) m *= xmax[1] - xmin[1];
    return m;
  }
  int faces_per_cell() const { return 2 * dim; }

  /// Reference coordinates of a point of face f seen from one of its cells.
  /// side = 0 for the left cell, 1 for the right cell; s in [0,1] is the
  /// tangential face parameter (ignored in 1D).
  Eigen::VectorXd face_reference_point(const Face& f, int side, double s) const {
    Eigen::VectorXd xi(dim);
    const double along = (side == 0) ? 1.0 : 0.0; // left cell's E/N face, right cell's W/S face
    if (dim == 1) {
      if (f.boundary()) {
        // outward normal decides which end of the owner the face touches
        xi[0] = f.normal[0] > 0 ? 1.0 : 0.0;
      } else {
        xi[0] = along;
      }
      return xi;
    }
    double a;
    if (f.boundary())
      a = f.normal[f.axis] > 0 ? 1.0 : 0.0;
    else
      a = along;
    if (f.axis == 0) {
      xi[0] = a;
      xi[1] = s;
    } else {
      xi[0] = s;
      xi[1] = a;
    }
    return xi;
  }
};

/// Sides are indexed W(0),E(1) in 1D and W(0),E(1),S(2),N(3) in 2D.
inline Mesh build_structured_mesh(const std::array<double, 2>& lo, const std::array<double, 2>& hi,
                                  const std::array<int, 2>& counts, int dim,
                                  const std::array<BoundaryTag, 4>& sides) {
  Mesh mesh;
  mesh.dim = dim;
  mesh.xmin = lo;
  mesh.xmax = hi;
  mesh.counts = counts;
  if (dim < 1 || dim > 2) throw std::invalid_argument("build_structured_mesh: dim must be 1 or 2");
  for (int a = 0; a < dim; ++a) {
    if (!(lo[a] < hi[a])) throw std::invalid_argument("build_structured_mesh: lo < hi required");
    if (counts[a] < 1) throw std::invalid_argument("build_structured_mesh: counts >= 1 required");
  }
  for (int a = 0; a < dim; ++a) {
    const BoundaryTag s0 = sides[2 * a], s1 = sides[2 * a + 1];
    if ((s0 == BoundaryTag::Periodic) != (s1 == BoundaryTag::Periodic))
      throw std::invalid_argument("build_structured_mesh: periodic sides must come in matched pairs");
    mesh.periodic[a] = (s0 == BoundaryTag::Periodic);
    if (mesh.periodic[a] && counts[a] < 2)
      throw std::invalid_argument("build_structured_mesh: periodic axis needs at least 2 cells");
  }

  const int nx = counts[0];
  const int ny = (dim == 2) ? counts[1] : 1;
  const double dx = (hi[0] - lo[0]) / nx;
  const double dy = (dim == 2) ? (hi[1] - lo[1]) / ny : 1.0;

  mesh.cells.resize(static_cast<size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      Cell& c = mesh.cells[mesh.cell_index(i, j)];
      c.id = mesh.cell_index(i, j);
      c.lo = {lo[0] + i * dx, (dim == 2) ? lo[1] + j * dy : 0.0};
      c.hi = {lo[0] + (i + 1) * dx, (dim == 2) ? lo[1] + (j + 1) * dy : 0.0};
      c.volume = (dim == 2) ? dx * dy : dx;
      c.diameter = (dim == 2) ? std::hypot(dx, dy) : dx;
    }

  auto add_face = [&](Face f) {
    f.id = static_cast<int>(mesh.faces.size());
    mesh.faces.push_back(f);
    return f.id;
  };

  // x-oriented faces (normal along +x), row by row
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      const double x = lo[0] + i * dx;
      Face f;
      f.axis = 0;
      f.normal = {1.0, 0.0};
      f.plane = x;
      f.measure = (dim == 2) ? dy : 1.0;
      if (dim == 2) {
        f.tlo = lo[1] + j * dy;
        f.thi = lo[1] + (j + 1) * dy;
      }
      if (i == 0) {
        if (mesh.periodic[0]) continue; // handled by the wrap face at i == nx
        f.left = mesh.cell_index(0, j);
        f.normal = {-1.0, 0.0};
        f.tag = sides[0];
        f.left_local = 0;
        const int id = add_face(f);
        mesh.cells[f.left].faces[0] = id;
      } else if (i == nx) {
        if (mesh.periodic[0]) {
          f.left = mesh.cell_index(nx - 1, j);
          f.right = mesh.cell_index(0, j);
          f.tag = BoundaryTag::Periodic;
          f.wrap = true;
          f.left_local = 1;
          f.right_local = 0;
          const int id = add_face(f);
          mesh.cells[f.left].faces[1] = id;
          mesh.cells[f.right].faces[0] = id;
        } else {
          f.left = mesh.cell_index(nx - 1, j);
          f.tag = sides[1];
          f.left_local = 1;
          const int id = add_face(f);
          mesh.cells[f.left].faces[1] = id;
        }
      } else {
        f.left = mesh.cell_index(i - 1, j);
        f.right = mesh.cell_index(i, j);
        f.left_local = 1;
        f.right_local = 0;
        const int id = add_face(f);
        mesh.cells[f.left].faces[1] = id;
        mesh.cells[f.right].faces[0] = id;
      }
    }
  }

  // y-oriented faces (normal along +y)
  if (dim == 2) {
    for (int j = 0; j <= ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const double y = lo[1] + j * dy;
        Face f;
        f.axis = 1;
        f.normal = {0.0, 1.0};
        f.plane = y;
        f.measure = dx;
        f.tlo = lo[0] + i * dx;
        f.thi = lo[0] + (i + 1) * dx;
        if (j == 0) {
          if (mesh.periodic[1]) continue;
          f.left = mesh.cell_index(i, 0);
          f.normal = {0.0, -1.0};
          f.tag = sides[2];
          f.left_local = 2;
          const int id = add_face(f);
          mesh.cells[f.left].faces[2] = id;
        } else if (j == ny) {
          if (mesh.periodic[1]) {
            f.left = mesh.cell_index(i, ny - 1);
            f.right = mesh.cell_index(i, 0);
            f.tag = BoundaryTag::Periodic;
            f.wrap = true;
            f.left_local = 3;
            f.right_local = 2;
            const int id = add_face(f);
            mesh.cells[f.left].faces[3] = id;
            mesh.cells[f.right].faces[2] = id;
          } else {
            f.left = mesh.cell_index(i, ny - 1);
            f.tag = sides[3];
            f.left_local = 3;
            const int id = add_face(f);
            mesh.cells[f.left].faces[3] = id;
          }
        } else {
          f.left = mesh.cell_index(i, j - 1);
          f.right = mesh.cell_index(i, j);
          f.left_local = 3;
          f.right_local = 2;
          const int id = add_face(f);
          mesh.cells[f.left].faces[3] = id;
          mesh.cells[f.right].faces[2] = id;
        }
      }
    }
  }

  return mesh;
}

/// Convenience overloads for the common symmetric cases.
inline Mesh build_interval_mesh(double a, double b, int n, BoundaryTag left, BoundaryTag right) {
  return build_structured_mesh({a, 0}, {b, 0}, {n, 1}, 1,
                               {left, right, BoundaryTag::Outflow, BoundaryTag::Outflow});
}

/// Physical quadrature points and weights on a face; weights sum to the face
/// measure. 1D faces are points (single abscissa, weight one).
inline std::vector<std::pair<std::array<double, 2>, double>>
face_trace_points(const Mesh& mesh, const Face& face, int npoints) {
  std::vector<std::pair<std::array<double, 2>, double>> out;
  if (mesh.dim == 1) {
    out.push_back({face.point(0.5), 1.0});
    return out;
  }
  QuadratureRule line = gauss_rule(1, npoints);
  for (int q = 0; q < line.size(); ++q)
    out.push_back({face.point(line.points(q, 0)), line.weights[q] * face.measure});
  return out;
}

} // namespace wenodg

#endif
