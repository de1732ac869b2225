#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lamb/oscillator.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("from_physical derives wave speed and damping") {
  // c = sqrt(T/rho), beta = sqrt(rho T)/M
  const auto osc = lamb::OscillatorParams::from_physical(10.0, 1.0, 1.0, 1.0,
                                                         -0.5);
  REQUIRE_THAT(osc.wave_speed(), WithinRel(1.0, 1e-12));
  REQUIRE_THAT(osc.damping(), WithinRel(0.1, 1e-12));
  REQUIRE_THAT(osc.damped_frequency(), WithinRel(std::sqrt(0.99), 1e-12));
  REQUIRE_THAT(osc.damped_frequency(), WithinAbs(0.994987, 1e-6));

  const auto stiff = lamb::OscillatorParams::from_physical(10.0, 4.0, 1.0, 1.0,
                                                           -0.5);
  REQUIRE_THAT(stiff.wave_speed(), WithinRel(2.0, 1e-12));
  REQUIRE_THAT(stiff.damping(), WithinRel(0.2, 1e-12));
  REQUIRE_THAT(stiff.lamb_b(), WithinRel(5.0, 1e-12));
}

TEST_CASE("default parameter set") {
  const auto osc = lamb::default_oscillator();
  REQUIRE(osc.amplitude() == -0.5);
  REQUIRE(osc.damping() == 0.1);
  REQUIRE(osc.natural_frequency() == 1.0);
  REQUIRE(osc.wave_speed() == 1.0);
  REQUIRE_THAT(osc.lamb_b(), WithinRel(5.0, 1e-15));
  REQUIRE_THAT(osc.lamb_kappa(), WithinRel(std::sqrt(0.99), 1e-15));
}

TEST_CASE("from_physical rejects bad inputs") {
  // beta = 1 >= sigma = 0.5: not underdamped
  REQUIRE_THROWS_WITH(
      lamb::OscillatorParams::from_physical(1.0, 1.0, 1.0, 0.5, -0.5),
      Catch::Matchers::ContainsSubstring("underdamped"));
  REQUIRE_THROWS_AS(
      lamb::OscillatorParams::from_physical(-1.0, 1.0, 1.0, 1.0, -0.5),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      lamb::OscillatorParams::from_physical(1.0, 0.0, 1.0, 1.0, -0.5),
      std::invalid_argument);
  REQUIRE_THROWS_AS(lamb::OscillatorParams(-0.5, 0.2, 0.1, 1.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lamb::OscillatorParams(0.0, 0.1, 1.0, 1.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lamb::OscillatorParams(-0.5, 0.1, 1.0, -1.0),
                    std::invalid_argument);
}

TEST_CASE("physical round trip reproduces the derived identities") {
  for (double mass : {4.0, 10.0, 25.0})
    for (double tension : {0.5, 1.0, 4.0})
      for (double density : {0.5, 1.0, 2.0}) {
        const double beta = std::sqrt(density * tension) / mass;
        const double sigma = 3.0 * beta + 0.4;  // safely underdamped
        const auto osc = lamb::OscillatorParams::from_physical(
            mass, tension, density, sigma, -0.5);
        const double vs = osc.damped_frequency();
        REQUIRE_THAT(osc.wave_speed(),
                     WithinRel(std::sqrt(tension / density), 1e-12));
        REQUIRE_THAT(osc.damping(), WithinRel(beta, 1e-12));
        REQUIRE_THAT(vs * vs + osc.damping() * osc.damping(),
                     WithinRel(sigma * sigma, 1e-12));
        REQUIRE_THAT(osc.lamb_kappa() * osc.wave_speed(),
                     WithinRel(vs, 1e-12));
        REQUIRE_THAT(2.0 * osc.lamb_b() * osc.damping(),
                     WithinRel(osc.wave_speed(), 1e-12));
      }
}

TEST_CASE("derived quantities satisfy the defining identities") {
  // varsigma^2 + beta^2 = sigma^2, kappa c = varsigma, 2 b beta = c
  for (double sigma : {0.3, 1.0, 2.0, 7.5})
    for (double beta : {0.01, 0.1, 0.25})
      for (double c : {0.5, 1.0, 3.0}) {
        if (beta >= sigma) continue;
        const lamb::OscillatorParams osc(-0.5, beta, sigma, c);
        const double vs = osc.damped_frequency();
        REQUIRE_THAT(vs * vs + beta * beta, WithinRel(sigma * sigma, 1e-12));
        REQUIRE_THAT(osc.lamb_kappa() * c, WithinRel(vs, 1e-12));
        REQUIRE_THAT(2.0 * osc.lamb_b() * beta, WithinRel(c, 1e-12));
      }
}

TEST_CASE("displacement history") {
  const auto osc = lamb::default_oscillator();
  const double vs = osc.damped_frequency();

  SECTION("quarter period of the damped oscillation") {
    const double t = std::numbers::pi / (2.0 * vs);  // ~1.57869
    // C e^{-beta t} sin(pi/2) = -0.5 e^{-0.1 t}
    REQUIRE_THAT(lamb::oscillator_displacement(osc, t),
                 WithinAbs(-0.5 * std::exp(-0.1 * t), 1e-15));
    REQUIRE_THAT(lamb::oscillator_displacement(osc, t),
                 WithinAbs(-0.426980, 1e-5));
  }
  SECTION("zero extension") {
    REQUIRE(lamb::oscillator_displacement(osc, 0.0) == 0.0);
    REQUIRE(lamb::oscillator_displacement(osc, -3.0) == 0.0);
    REQUIRE(std::abs(lamb::oscillator_displacement(osc, 1e-12)) < 1e-12);
  }
  SECTION("bounded by the decaying envelope") {
    for (int i = 1; i <= 400; ++i) {
      const double t = 0.05 * i;
      REQUIRE(std::abs(lamb::oscillator_displacement(osc, t)) <=
              0.5 * std::exp(-0.1 * t) + 1e-15);
    }
  }
  SECTION("forcing rate is the displacement derivative") {
    for (double t : {0.3, 1.0, 4.0, 9.0}) {
      const double fd = (lamb::oscillator_displacement(osc, t + 5e-7) -
                         lamb::oscillator_displacement(osc, t - 5e-7)) /
                        1e-6;
      REQUIRE_THAT(lamb::oscillator_forcing_rate(osc, t), WithinAbs(fd, 1e-6));
    }
    // right-continuous at the impulse: h'(0+) = C varsigma
    REQUIRE_THAT(lamb::oscillator_forcing_rate(osc, 0.0),
                 WithinRel(-0.5 * vs, 1e-12));
    REQUIRE(lamb::oscillator_forcing_rate(osc, -1.0) == 0.0);
  }
}
