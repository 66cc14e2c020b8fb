#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wenodg/conservation_laws.hpp"

using namespace wenodg;

namespace {

StateVec scalar(double v) {
  StateVec u(1);
  u[0] = v;
  return u;
}

StateVec random_euler_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> rho(0.1, 3.0), vel(-2.0, 2.0), prs(0.05, 5.0);
  return euler_state(rho(rng), vel(rng), prs(rng), 1.4);
}

} // namespace

TEST_CASE("physical fluxes", "[laws]") {
  SECTION("Burgers") {
    auto law = ConservationLaw::burgers();
    REQUIRE(physical_flux(law, scalar(2.0))(0, 0) == Catch::Approx(2.0).margin(1e-15));
  }
  SECTION("KPP at u=0") {
    auto law = ConservationLaw::kpp();
    FluxMat F = physical_flux(law, scalar(0.0));
    REQUIRE(F(0, 0) == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(F(0, 1) == Catch::Approx(1.0).margin(1e-15));
  }
  SECTION("Euler Sod left state") {
    auto law = ConservationLaw::euler(1);
    StateVec U(3);
    U << 1.0, 0.0, 2.5;
    FluxMat F = physical_flux(law, U);
    REQUIRE(F(0, 0) == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(F(1, 0) == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(F(2, 0) == Catch::Approx(0.0).margin(1e-15));
  }
  SECTION("invalid Euler state is rejected") {
    auto law = ConservationLaw::euler(1);
    StateVec U(3);
    U << -1.0, 0.0, 2.5;
    REQUIRE_THROWS_AS(physical_flux(law, U), invalid_state_error);
    U << 1.0, 10.0, 2.5; // kinetic energy exceeds total
    REQUIRE_THROWS_AS(physical_flux(law, U), invalid_state_error);
  }
}

TEST_CASE("pressure from the ideal-gas law", "[laws]") {
  auto law = ConservationLaw::euler(1);
  StateVec U(3);
  U << 1.0, 0.0, 2.5;
  REQUIRE(pressure(law, U) == Catch::Approx(1.0).margin(1e-14));
  U << 0.125, 0.0, 0.25;
  REQUIRE(pressure(law, U) == Catch::Approx(0.1).margin(1e-14));
  U << 1.0, 1.0, 1.0;
  REQUIRE(pressure(law, U) == Catch::Approx(0.2).margin(1e-14));
}

TEST_CASE("maximum normal wave speeds", "[laws]") {
  SECTION("constant advection") {
    auto law = ConservationLaw::advection(1.0);
    REQUIRE(max_wavespeed_normal(law, scalar(5.0), scalar(-3.0), {1, 0}) ==
            Catch::Approx(1.0).margin(1e-15));
  }
  SECTION("Burgers endpoint maximum") {
    auto law = ConservationLaw::burgers();
    REQUIRE(max_wavespeed_normal(law, scalar(1.0), scalar(-0.5), {1, 0}) ==
            Catch::Approx(1.0).margin(1e-15));
  }
  SECTION("Euler Sod states") {
    auto law = ConservationLaw::euler(1);
    StateVec L(3), R(3);
    L << 1.0, 0.0, 2.5;
    R << 0.125, 0.0, 0.25;
    // a = sqrt(gamma p / rho) evaluated at both states, maximum is sqrt(1.4)
    REQUIRE(max_wavespeed_normal(law, L, R, {1, 0}) ==
            Catch::Approx(std::sqrt(1.4)).margin(1e-14));
  }
}

TEST_CASE("local Lax-Friedrichs flux", "[laws]") {
  auto law = ConservationLaw::burgers();
  SECTION("consistency at equal states") {
    StateVec U = scalar(0.7);
    REQUIRE(llf_flux(law, U, U, {1, 0})[0] ==
            Catch::Approx(0.5 * 0.49).margin(1e-15));
  }
  SECTION("direct evaluation") {
    REQUIRE(llf_flux(law, scalar(1.0), scalar(0.0), {1, 0})[0] ==
            Catch::Approx(0.75).margin(1e-15));
  }
  SECTION("conservation under argument swap") {
    StateVec a = scalar(1.3), b = scalar(-0.4);
    const double h1 = llf_flux(law, a, b, {1, 0})[0];
    const double h2 = llf_flux(law, b, a, {-1, 0})[0];
    REQUIRE(h1 == Catch::Approx(-h2).margin(1e-15));
  }
}

TEST_CASE("HLL flux", "[laws]") {
  auto law = ConservationLaw::euler(1);
  SECTION("consistency at equal states") {
    StateVec U = euler_state(1.0, 0.3, 0.8, 1.4);
    StateVec H = hll_flux(law, U, U, {1, 0});
    StateVec F = flux_dot_n(law, U, {1, 0});
    REQUIRE((H - F).cwiseAbs().maxCoeff() < 1e-14);
  }
  SECTION("supersonic right-moving flow takes the left flux") {
    StateVec L = euler_state(1.0, 5.0, 1.0, 1.4);
    StateVec R = euler_state(1.0, 5.0, 1.2, 1.4);
    StateVec H = hll_flux(law, L, R, {1, 0});
    StateVec F = flux_dot_n(law, L, {1, 0});
    REQUIRE((H - F).cwiseAbs().maxCoeff() < 1e-14);
  }
  SECTION("Sod states middle branch by direct substitution") {
    StateVec L(3), R(3);
    L << 1.0, 0.0, 2.5;
    R << 0.125, 0.0, 0.25;
    // s- = -sqrt(1.4), s+ = +sqrt(1.4); plugging into the three-branch formula:
    const double s = std::sqrt(1.4);
    StateVec FL(3), FR(3);
    FL << 0.0, 1.0, 0.0;
    FR << 0.0, 0.1, 0.0;
    StateVec expected = (s * FL + s * FR + (-s) * s * (R - L)) / (2.0 * s);
    StateVec H = hll_flux(law, L, R, {1, 0});
    REQUIRE((H - expected).cwiseAbs().maxCoeff() < 1e-14);
    REQUIRE(H[0] == Catch::Approx(0.5176569810212164).epsilon(1e-12));
    REQUIRE(H[1] == Catch::Approx(0.55).epsilon(1e-12));
    REQUIRE(H[2] == Catch::Approx(1.3311179511974136).epsilon(1e-12));
  }
}

TEST_CASE("flux consistency and conservation over random states", "[laws]") {
  std::mt19937 rng(42);
  auto euler = ConservationLaw::euler(1);
  auto burgers = ConservationLaw::burgers();
  std::uniform_real_distribution<double> su(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    StateVec U = random_euler_state(rng);
    StateVec V = random_euler_state(rng);
    worst = std::max(worst,
                     (hll_flux(euler, U, U, {1, 0}) - flux_dot_n(euler, U, {1, 0}))
                         .cwiseAbs()
                         .maxCoeff());
    worst = std::max(worst,
                     (llf_flux(euler, U, U, {1, 0}) - flux_dot_n(euler, U, {1, 0}))
                         .cwiseAbs()
                         .maxCoeff());
    worst = std::max(worst, (hll_flux(euler, U, V, {1, 0}) +
                             hll_flux(euler, V, U, {-1, 0}))
                                .cwiseAbs()
                                .maxCoeff());
    StateVec a = scalar(su(rng)), b = scalar(su(rng));
    worst = std::max(worst, std::abs(llf_flux(burgers, a, b, {1, 0})[0] +
                                     llf_flux(burgers, b, a, {-1, 0})[0]));
  }
  REQUIRE(worst < 1e-13);
}

TEST_CASE("HLL intermediate state has positive density", "[laws]") {
  std::mt19937 rng(7);
  auto law = ConservationLaw::euler(1);
  for (int i = 0; i < 500; ++i) {
    StateVec L = random_euler_state(rng), R = random_euler_state(rng);
    const double aL = sound_speed(law, L), aR = sound_speed(law, R);
    const double vL = L[1] / L[0], vR = R[1] / R[0];
    const double sm = std::min(vL - aL, vR - aR), sp = std::max(vL + aL, vR + aR);
    StateVec FL = flux_dot_n(law, L, {1, 0}), FR = flux_dot_n(law, R, {1, 0});
    StateVec mid = (sp * R - sm * L - (FR - FL)) / (sp - sm);
    REQUIRE(mid[0] > 0.0);
  }
}
