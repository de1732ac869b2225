#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lamb/line.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using lamb::DispersionRelation;
using lamb::WaveModel;

TEST_CASE("classical closed form on the line") {
  const auto osc = lamb::default_oscillator();
  SECTION("center value at t = 10") {
    const std::vector<double> grid{-1.0, 0.0, 1.0};
    const auto prof = lamb::line_closed_form(osc, 10.0, grid);
    // 0.5 e^{-1} sin(10 sqrt(0.99))
    REQUIRE_THAT(prof.values[1],
                 WithinRel(0.5 * std::exp(-1.0) *
                               std::sin(10.0 * std::sqrt(0.99)),
                           1e-13));
    REQUIRE_THAT(prof.values[1], WithinAbs(-0.09221, 1e-4));
  }
  SECTION("zero outside the light cone") {
    const double t = 4.0;
    const std::vector<double> grid{-6.0, -4.0, 4.0, 6.0};
    const auto prof = lamb::line_closed_form(osc, t, grid);
    for (double v : prof.values) REQUIRE(v == 0.0);
  }
  SECTION("zero everywhere at t = 0") {
    const auto grid = lamb::uniform_grid(64, -3.0, 3.0);
    for (double v : lamb::line_closed_form(osc, 0.0, grid).values)
      REQUIRE(v == 0.0);
  }
}

TEST_CASE("quadrature reproduces the classical solution after rescaling") {
  const auto osc = lamb::default_oscillator();
  const auto rel = DispersionRelation::wave(1.0);
  const auto grid = lamb::uniform_grid(401, -10.0, 10.0);
  const double t = 5.0;
  const auto closed = lamb::line_closed_form(osc, t, grid);
  const auto quad = lamb::line_profile_quadrature(
      osc, rel, WaveModel::bidirectional, t, grid, 400.0, 1 << 15, 2);
  const double scale = lamb::classical_forcing_scale(osc);
  double sup = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double to_kink = std::min(std::abs(x), std::abs(std::abs(x) - t));
    if (to_kink < 0.1) continue;
    sup = std::max(sup, std::abs(closed.values[i] -
                                 scale * quad.profile.values[i]));
  }
  REQUIRE(sup < 5e-3);
}

TEST_CASE("quadrature vanishes at t = 0") {
  const auto osc = lamb::default_oscillator();
  const auto grid = lamb::uniform_grid(65, -5.0, 5.0);
  const auto quad = lamb::line_profile_quadrature(
      osc, DispersionRelation::quadratic(), WaveModel::bidirectional, 0.0,
      grid, 100.0, 4096);
  for (double v : quad.profile.values) REQUIRE(std::abs(v) < 1e-6);
}

TEST_CASE("massive medium stays inside its light cone") {
  const auto osc = lamb::default_oscillator();
  const auto rel = DispersionRelation::klein_gordon(1.0, 1.0);
  const auto grid = lamb::uniform_grid(201, -10.0, 10.0);
  const double t = 5.0;
  const auto quad = lamb::line_profile_quadrature(
      osc, rel, WaveModel::bidirectional, t, grid, 400.0, 1 << 15, 2);
  double outside = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (std::abs(grid[i]) > t)
      outside = std::max(outside, std::abs(quad.profile.values[i]));
  REQUIRE(outside < 1e-2);
}

TEST_CASE("doubling the panel count stays within the reported estimate") {
  const auto osc = lamb::default_oscillator();
  const auto grid = lamb::uniform_grid(101, -8.0, 8.0);
  for (const char* name : {"wave", "sqrt_abs_k", "klein_gordon"}) {
    const auto rel = DispersionRelation::make(name);
    for (auto model : {WaveModel::bidirectional, WaveModel::unidirectional}) {
      const auto coarse = lamb::line_profile_quadrature(
          osc, rel, model, 5.0, grid, 400.0, 1 << 14);
      const auto fine = lamb::line_profile_quadrature(
          osc, rel, model, 5.0, grid, 400.0, 1 << 15);
      REQUIRE(lamb::sup_distance(coarse.profile, fine.profile) <=
              coarse.tail_estimate);
    }
  }
}

TEST_CASE("bidirectional line profiles are even in x") {
  const auto osc = lamb::default_oscillator();
  const auto grid = lamb::uniform_grid(81, -6.0, 6.0);  // symmetric grid
  const auto quad = lamb::line_profile_quadrature(
      osc, DispersionRelation::sqrt_abs_k(), WaveModel::bidirectional, 3.0,
      grid, 200.0, 1 << 13);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    worst = std::max(worst, std::abs(quad.profile.values[i] -
                                     quad.profile.values[grid.size() - 1 - i]));
  REQUIRE(worst < 1e-9);
}

TEST_CASE("unidirectional quadrature matches the transport picture") {
  const auto osc = lamb::default_oscillator();
  const auto rel = DispersionRelation::wave(1.0);
  const auto grid = lamb::uniform_grid(241, -3.0, 3.0);
  const double t = 2.0, c = 1.0;
  const auto quad = lamb::line_profile_quadrature(
      osc, rel, WaveModel::unidirectional, t, grid, 400.0, 1 << 15, 2);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    if (std::abs(x) < 0.15 || std::abs(x - c * t) < 0.15) continue;
    const double exact =
        (x > 0.0 && x < c * t)
            ? lamb::oscillator_displacement(osc, t - x / c) / (2.0 * c * c)
            : 0.0;
    worst = std::max(worst, std::abs(quad.profile.values[i] - exact));
  }
  REQUIRE(worst < 5e-3);
}

TEST_CASE("cutoff warning fires when the tail has not decayed") {
  const auto osc = lamb::default_oscillator();
  const auto grid = lamb::uniform_grid(65, -2.0, 2.0);
  // asymptotically constant relation: the integrand never decays
  const auto quad = lamb::line_profile_quadrature(
      osc, DispersionRelation::regularized_boussinesq(1.0, 1.0),
      WaveModel::bidirectional, 5.0, grid, 50.0, 4096);
  REQUIRE(quad.cutoff_warning);
  REQUIRE(quad.tail_estimate > 1e-2);
}

TEST_CASE("line evaluation rejects bad arguments") {
  const auto osc = lamb::default_oscillator();
  const auto rel = DispersionRelation::wave(1.0);
  const auto grid = lamb::uniform_grid(65, -2.0, 2.0);
  REQUIRE_THROWS_AS(
      lamb::line_profile_quadrature(osc, rel, WaveModel::bidirectional, -1.0,
                                    grid),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      lamb::line_profile_quadrature(osc, rel, WaveModel::bidirectional, 1.0,
                                    grid, 0.0),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      lamb::line_profile_quadrature(osc, rel, WaveModel::bidirectional, 1.0,
                                    grid, 400.0, 32),
      std::invalid_argument);
  REQUIRE_THROWS_AS(lamb::line_closed_form(osc, -1.0, grid),
                    std::invalid_argument);
}
