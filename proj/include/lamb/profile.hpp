// Sampled spatial solution profiles and the grids they live on.
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamb/oscillator.hpp"

namespace lamb {

/// Where a profile came from: enough to reproduce it.
struct Provenance {
  std::string model;            ///< bidirectional | unidirectional | ...
  std::string relation;         ///< catalog name; empty for classical forms
  std::string relation_params;  ///< "c=1,epsilon=1" style, possibly empty
  int truncation = 0;           ///< Fourier truncation N; 0 = closed form
  double amplitude = 0.0;
  double damping = 0.0;
  double natural_frequency = 0.0;
  double wave_speed = 0.0;
};

inline Provenance make_provenance(std::string model, std::string relation,
                                  std::string relation_params, int truncation,
                                  const OscillatorParams& osc) {
  return {std::move(model),       std::move(relation),
          std::move(relation_params), truncation,
          osc.amplitude(),        osc.damping(),
          osc.natural_frequency(), osc.wave_speed()};
}

/// A spatial profile u(t, x) sampled on a strictly increasing grid.
struct SolutionProfile {
  double time = 0.0;
  std::vector<double> grid;
  std::vector<double> values;
  Provenance provenance;
};

/// Uniform grid of `count` points on [lo, hi], endpoints included.
inline std::vector<double> uniform_grid(std::size_t count, double lo,
                                        double hi) {
  if (count < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("grid bounds must satisfy lo < hi");
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(count - 1);
  return g;
}

/// Uniform grid of `count` points on the periodic domain [-pi, pi), the
/// right endpoint excluded. Even counts make the grid symmetric about 0.
inline std::vector<double> uniform_periodic_grid(std::size_t count) {
  if (count < 2) throw std::invalid_argument("grid needs at least 2 points");
  constexpr double pi = std::numbers::pi;
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i)
    g[i] = -pi + 2.0 * pi * static_cast<double>(i) /
                     static_cast<double>(count);
  return g;
}

inline void check_grid(std::span<const double> grid, bool periodic_domain) {
  if (grid.size() < 2)
    throw std::invalid_argument("grid needs at least 2 points");
  constexpr double pi = std::numbers::pi;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]))
      throw std::invalid_argument("grid contains a non-finite point");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("grid must be strictly increasing");
    if (periodic_domain && (grid[i] < -pi || grid[i] >= pi))
      throw std::invalid_argument("grid point outside the periodic domain "
                                  "[-pi, pi)");
  }
}

/// Largest absolute pointwise difference between two profiles sampled on
/// the same grid.
inline double sup_distance(const SolutionProfile& a, const SolutionProfile& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("profiles have different sample counts");
  double sup = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    sup = std::max(sup, std::abs(a.values[i] - b.values[i]));
  return sup;
}

/// Discrete L2 distance, sqrt(mean squared difference * domain length).
inline double l2_distance(const SolutionProfile& a, const SolutionProfile& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("profiles have different sample counts");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    acc += d * d;
  }
  const double length = a.grid.back() - a.grid.front();
  return std::sqrt(acc / static_cast<double>(a.values.size()) * length);
}

}  // namespace lamb
