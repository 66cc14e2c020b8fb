#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wenodg/weno_sensor.hpp"

using namespace wenodg;

namespace {

Discretization make_1d(const Mesh& m, int p) {
  static ReferenceElement* elems[8] = {};
  if (!elems[p]) elems[p] = new ReferenceElement(1, p);
  return Discretization(m, *elems[p], ConservationLaw::advection(1.0));
}

StateVec scalar(double v) {
  StateVec u(1);
  u[0] = v;
  return u;
}

} // namespace

TEST_CASE("scaled Sobolev semi-norm", "[weno]") {
  const double h = 0.35;
  Mesh m = build_interval_mesh(0.0, h, 1, BoundaryTag::Outflow, BoundaryTag::Outflow);

  SECTION("constants have zero semi-norm") {
    ReferenceElement elem(1, 2);
    Discretization d(m, elem, ConservationLaw::burgers());
    Eigen::VectorXd c = Eigen::VectorXd::Constant(3, 5.0);
    REQUIRE(scaled_sobolev_seminorm(d, c) < 1e-14);
  }
  SECTION("v = x gives h") {
    for (int p = 1; p <= 3; ++p) {
      ReferenceElement elem(1, p);
      Discretization d(m, elem, ConservationLaw::burgers());
      Eigen::VectorXd c(elem.size());
      for (int j = 0; j < elem.size(); ++j) c[j] = h * elem.nodes()(j, 0); // v(x) = x
      REQUIRE(scaled_sobolev_seminorm(d, c) == Catch::Approx(h).epsilon(1e-12));
    }
  }
  SECTION("v = x^2 at p = 2 includes both derivative orders") {
    ReferenceElement elem(1, 2);
    Discretization d(m, elem, ConservationLaw::burgers());
    Eigen::VectorXd c(3);
    for (int j = 0; j < 3; ++j) {
      const double x = h * elem.nodes()(j, 0);
      c[j] = x * x;
    }
    // |k|=1: h * int (2x)^2 = 4h^4/3; |k|=2: h^3 * int 4 = 4h^4; total 16h^4/3
    REQUIRE(scaled_sobolev_seminorm(d, c) ==
            Catch::Approx(4.0 * h * h / std::sqrt(3.0)).epsilon(1e-12));
  }
}

TEST_CASE("Hermite candidates", "[weno]") {
  SECTION("global polynomials are reproduced by every candidate") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int p = 1; p <= 3; ++p) {
      Mesh m = build_interval_mesh(-0.2, 1.0, 6, BoundaryTag::Outflow, BoundaryTag::Outflow);
      ReferenceElement elem(1, p);
      Discretization d(m, elem, ConservationLaw::burgers());
      WenoSensor ws(d);
      Eigen::VectorXd c(p + 1);
      for (int k = 0; k <= p; ++k) c[k] = coef(rng);
      StateField u = interpolate(m, elem, 1, [&](const std::array<double, 2>& x) {
        double v = 0;
        for (int k = 0; k <= p; ++k) v += c[k] * std::pow(x[0], k);
        return scalar(v);
      });
      for (int e = 0; e < 6; ++e) {
        CandidateSet cs = ws.candidates(u, e, 0);
        for (int l = 0; l < cs.polys.cols(); ++l)
          REQUIRE((cs.polys.col(l) - cs.polys.col(0)).cwiseAbs().maxCoeff() < 1e-11);
      }
    }
  }
  SECTION("2D tensor polynomials are reproduced") {
    std::array<BoundaryTag, 4> sides{BoundaryTag::Outflow, BoundaryTag::Outflow,
                                     BoundaryTag::Outflow, BoundaryTag::Outflow};
    Mesh m = build_structured_mesh({0, 0}, {1, 1}, {4, 4}, 2, sides);
    ReferenceElement elem(2, 2);
    Discretization d(m, elem, ConservationLaw::kpp());
    WenoSensor ws(d);
    StateField u = interpolate(m, elem, 1, [](const std::array<double, 2>& x) {
      return scalar(1.0 + x[0] - 2.0 * x[1] + 0.5 * x[0] * x[0] - x[0] * x[1] +
                    0.25 * x[1] * x[1]);
    });
    for (int e = 0; e < 16; ++e) {
      CandidateSet cs = ws.candidates(u, e, 0);
      for (int l = 0; l < cs.polys.cols(); ++l)
        REQUIRE((cs.polys.col(l) - cs.polys.col(0)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SECTION("constant fields give constant candidates") {
    Mesh m = build_interval_mesh(0, 1, 5, BoundaryTag::Periodic, BoundaryTag::Periodic);
    Discretization d = make_1d(m, 2);
    WenoSensor ws(d);
    StateField u(m, *d.elem, 1);
    u.data.setConstant(4.2);
    CandidateSet cs = ws.candidates(u, 2, 0);
    REQUIRE(cs.polys.cols() == 3);
    REQUIRE((cs.polys.array() - 4.2).abs().maxCoeff() < 1e-12);
  }
  SECTION("1D step data: hand-solved constrained least squares") {
    // cells (0,h),(h,2h),(2h,3h) with u = 1, 0, 0; candidates of the middle cell
    const double h = 0.2;
    Mesh m = build_interval_mesh(0.0, 3 * h, 3, BoundaryTag::Outflow, BoundaryTag::Outflow);
    Discretization d = make_1d(m, 1);
    WenoSensor ws(d);
    StateField u(m, *d.elem, 1);
    u.block(0).setConstant(1.0);

    CandidateSet cs = ws.candidates(u, 1, 0);
    REQUIRE(cs.neighbors() == 2);
    // oracle: minimize over slope s of sum_q (s d_q - 1)^2 + sum_q s^2 with
    // d_q = x_q - 1.5h at the left neighbor's two Gauss points
    const double g = 0.5 / std::sqrt(3.0);
    const double x1 = h * (0.5 - g), x2 = h * (0.5 + g);
    const double d1 = x1 - 1.5 * h, d2 = x2 - 1.5 * h;
    const double s_expected = (d1 + d2) / (d1 * d1 + d2 * d2 + 2.0);
    const double s_left = (cs.polys(1, 1) - cs.polys(0, 1)) / h;
    REQUIRE(s_left == Catch::Approx(s_expected).epsilon(1e-11));
    REQUIRE(std::abs(s_left) > 0.0);
    // right candidate fits zero data with zero average: identically flat
    const double s_right = (cs.polys(1, 2) - cs.polys(0, 2)) / h;
    REQUIRE(std::abs(s_right) < 1e-13);

    SensorConfig cfg;
    ws.compute_weights(cs, cfg);
    REQUIRE(cs.beta[1] > cs.beta[2]);
  }
}

TEST_CASE("nonlinear weights", "[weno]") {
  Mesh m = build_interval_mesh(0, 1, 5, BoundaryTag::Periodic, BoundaryTag::Periodic);
  Discretization d = make_1d(m, 2);
  WenoSensor ws(d);
  SensorConfig cfg;

  SECTION("equal smoothness recovers the linear weights") {
    StateField u = interpolate(m, *d.elem, 1, [](const std::array<double, 2>& x) {
      return scalar(0.3 + 1.7 * x[0]);
    });
    CandidateSet cs = ws.candidates(u, 2, 0);
    ws.compute_weights(cs, cfg);
    REQUIRE(cs.omega.sum() == Catch::Approx(1.0).margin(1e-13));
    REQUIRE(cs.omega[0] == Catch::Approx(cfg.central_weight(2)).margin(1e-9));
    REQUIRE(cs.omega[1] == Catch::Approx(cfg.neighbor_weight).margin(1e-9));
    REQUIRE(cs.omega[2] == Catch::Approx(cfg.neighbor_weight).margin(1e-9));
  }
  SECTION("a rough candidate loses its weight") {
    StateField u(m, *d.elem, 1);
    u.block(1).col(0) << 0.0, 5.0, -5.0; // oscillatory neighbor
    CandidateSet cs = ws.candidates(u, 2, 0);
    ws.compute_weights(cs, cfg);
    REQUIRE(cs.omega[1] < 1e-6);
  }
}

TEST_CASE("WENO reconstruction", "[weno]") {
  Mesh m = build_interval_mesh(0, 1, 8, BoundaryTag::Periodic, BoundaryTag::Periodic);
  Discretization d = make_1d(m, 2);
  WenoSensor ws(d);
  SensorConfig cfg;

  SECTION("cell averages are preserved on random fields") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> unif(-2, 2);
    for (int rep = 0; rep < 30; ++rep) {
      StateField u(m, *d.elem, 1);
      for (Eigen::Index i = 0; i < u.data.size(); ++i) u.data[i] = unif(rng);
      for (int e = 0; e < 8; ++e) {
        CandidateSet cs = ws.candidates(u, e, 0);
        ws.compute_weights(cs, cfg);
        Eigen::VectorXd ustar = ws.reconstruct(cs);
        const double mu_orig = d.elem->averaging() * u.component(e, 0);
        const double mu_rec = d.elem->averaging() * ustar;
        REQUIRE(mu_rec == Catch::Approx(mu_orig).margin(1e-12));
      }
    }
  }
  SECTION("constant fields reconstruct to the same constant") {
    StateField u(m, *d.elem, 1);
    u.data.setConstant(2.5);
    CandidateSet cs = ws.candidates(u, 3, 0);
    ws.compute_weights(cs, cfg);
    Eigen::VectorXd ustar = ws.reconstruct(cs);
    REQUIRE((ustar.array() - 2.5).abs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("relative smoothness sensor", "[weno]") {
  Mesh m = build_interval_mesh(0, 1, 8, BoundaryTag::Periodic, BoundaryTag::Periodic);
  Discretization d = make_1d(m, 2);
  WenoSensor ws(d);
  SensorConfig cfg;

  SECTION("identical reconstruction gives zero") {
    StateField u(m, *d.elem, 1);
    u.data.setConstant(1.0);
    REQUIRE(ws.gamma(u, 0, cfg) == 0.0);
  }
  SECTION("range is [0,1] on random data, q=1 clamps at one") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unif(-5, 5);
    for (int rep = 0; rep < 40; ++rep) {
      StateField u(m, *d.elem, 1);
      for (Eigen::Index i = 0; i < u.data.size(); ++i) u.data[i] = unif(rng);
      for (int e = 0; e < 8; ++e) {
        const double g = ws.gamma(u, e, cfg);
        REQUIRE(g >= 0.0);
        REQUIRE(g <= 1.0);
      }
      SensorConfig zc = cfg;
      zc.variant = SensorConfig::Variant::Zhao;
      for (int e = 0; e < 8; ++e) {
        const double g = ws.gamma(u, e, zc);
        REQUIRE(g >= 0.0);
        REQUIRE(g <= 1.0);
      }
    }
  }
  SECTION("polynomial exactness") {
    for (int p = 1; p <= 3; ++p) {
      Mesh mp = build_interval_mesh(0, 1, 8, BoundaryTag::Outflow, BoundaryTag::Outflow);
      Discretization dp = make_1d(mp, p);
      WenoSensor wsp(dp);
      StateField u = interpolate(mp, *dp.elem, 1, [&](const std::array<double, 2>& x) {
        double v = 0.4 + x[0];
        if (p >= 2) v += 0.7 * x[0] * x[0];
        if (p >= 3) v -= 1.3 * x[0] * x[0] * x[0];
        return scalar(v);
      });
      for (int e = 0; e < 8; ++e) REQUIRE(wsp.gamma(u, e, cfg) <= 1e-9);
    }
  }
  SECTION("scale invariance") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> unif(-1, 1);
    StateField u(m, *d.elem, 1);
    for (Eigen::Index i = 0; i < u.data.size(); ++i) u.data[i] = unif(rng);
    StateField v = u;
    v.data *= 3.7;
    for (int e = 0; e < 8; ++e)
      REQUIRE(ws.gamma(v, e, cfg) == Catch::Approx(ws.gamma(u, e, cfg)).margin(1e-12));
  }
  SECTION("threshold b zeroes small activations") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unif(-1, 1);
    StateField u = interpolate(m, *d.elem, 1, [&](const std::array<double, 2>& x) {
      return scalar(std::sin(2 * M_PI * x[0]));
    });
    SensorConfig thresholded = cfg;
    thresholded.b = 1.1; // above any possible relative difference
    for (int e = 0; e < 8; ++e) REQUIRE(ws.gamma(u, e, thresholded) == 0.0);
  }
  SECTION("unit step across a face fires both adjacent cells") {
    // nodal interpolation with the midpoint convention at the jump
    for (int p = 1; p <= 2; ++p) {
      Mesh mp = build_interval_mesh(0, 1, 8, BoundaryTag::Periodic, BoundaryTag::Periodic);
      Discretization dp = make_1d(mp, p);
      WenoSensor wsp(dp);
      StateField u = interpolate(mp, *dp.elem, 1, [](const std::array<double, 2>& x) {
        if (x[0] < 0.5) return scalar(1.0);
        if (x[0] > 0.5) return scalar(0.0);
        return scalar(0.5);
      });
      REQUIRE(wsp.gamma(u, 3, cfg) > 0.5);
      REQUIRE(wsp.gamma(u, 4, cfg) > 0.5);
    }
  }
}

TEST_CASE("Zhao sensor", "[weno]") {
  Mesh m = build_interval_mesh(0, 1, 8, BoundaryTag::Periodic, BoundaryTag::Periodic);
  Discretization d = make_1d(m, 2);
  WenoSensor ws(d);

  SECTION("ideal weights give zero") {
    SensorConfig cfg;
    cfg.variant = SensorConfig::Variant::Zhao;
    CandidateSet cs;
    cs.polys.resize(3, 3);
    cs.omega.resize(3);
    cs.omega << cfg.central_weight(2), cfg.neighbor_weight, cfg.neighbor_weight;
    REQUIRE(ws.zhao_gamma(cs, cfg) == Catch::Approx(0.0).margin(1e-15));
  }
  SECTION("dominant candidate under uniform ideal weights") {
    SensorConfig cfg;
    cfg.variant = SensorConfig::Variant::Zhao;
    cfg.neighbor_weight = 0.25; // uniform over m_e = 3: central 1 - 3/4 = 1/4
    CandidateSet cs;
    cs.polys.resize(3, 4);
    cs.omega.resize(4);
    cs.omega << 0.97, 0.01, 0.01, 0.01;
    // direct substitution: num = |0.97/0.25-1| + 3|0.01/0.25-1|, den = |4-1| + 3
    const double expected = (std::abs(0.97 / 0.25 - 1.0) + 3.0 * std::abs(0.01 / 0.25 - 1.0)) /
                            (std::abs(4.0 - 1.0) + 3.0);
    REQUIRE(ws.zhao_gamma(cs, cfg) == Catch::Approx(expected).margin(1e-14));
    REQUIRE(ws.zhao_gamma(cs, cfg) < 1.0);
  }
  SECTION("smooth data stays near zero, a step fires") {
    SensorConfig cfg;
    cfg.variant = SensorConfig::Variant::Zhao;
    StateField smooth = interpolate(m, *d.elem, 1, [](const std::array<double, 2>& x) {
      return scalar(0.2 + 0.3 * x[0]);
    });
    REQUIRE(ws.gamma(smooth, 4, cfg) < 1e-6);
    StateField step = interpolate(m, *d.elem, 1, [](const std::array<double, 2>& x) {
      return scalar(x[0] < 0.5 ? 1.0 : 0.0);
    });
    REQUIRE(ws.gamma(step, 4, cfg) > 0.1);
  }
}
