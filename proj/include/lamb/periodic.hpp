// Assembly of periodic solution profiles on [-pi, pi): partial sums of the
// closed-form Fourier coefficients, and the classical image-sum solution
// used as an independent cross-check of the wave-medium case.
#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lamb/modal.hpp"
#include "lamb/profile.hpp"

namespace lamb {

namespace detail {

/// Run fn(i) over [0, count) on `threads` workers, each owning a contiguous
/// index block. Per-index work must be independent; results are bitwise
/// identical for any thread count because every index does the same
/// arithmetic in the same order.
template <class Fn>
void parallel_index_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t lo = static_cast<std::size_t>(w) * chunk;
    if (lo >= count) break;
    const std::size_t hi = std::min(count, lo + chunk);
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline std::string format_params(const DispersionRelation& rel) {
  std::string out;
  for (const auto& [key, value] : rel.params()) {
    if (!out.empty()) out += ",";
    out += key + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace detail

/// Partial sum of the bidirectional cosine series,
/// u(x) = a0/2 + sum_{k=1}^{N} a_k(t) cos(k x),
/// summed in ascending k at every grid point (fixed order, so the result is
/// bitwise independent of the thread count).
inline SolutionProfile eval_bidirectional(const OscillatorParams& osc,
                                          const DispersionRelation& rel,
                                          int truncation, double t,
                                          std::span<const double> grid,
                                          unsigned threads = 1) {
  if (truncation < 1)
    throw std::invalid_argument("truncation must be >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  check_grid(grid, /*periodic_domain=*/true);

  std::vector<double> coeff(static_cast<std::size_t>(truncation) + 1);
  coeff[0] = 0.5 * a0_bidirectional(osc, t);
  for (int k = 1; k <= truncation; ++k)
    coeff[static_cast<std::size_t>(k)] = ak_bidirectional(osc, rel, k, t);

  SolutionProfile profile;
  profile.time = t;
  profile.grid.assign(grid.begin(), grid.end());
  profile.values.resize(grid.size());
  detail::parallel_index_for(grid.size(), threads, [&](std::size_t i) {
    const double x = grid[i];
    double u = coeff[0];
    for (int k = 1; k <= truncation; ++k)
      u += coeff[static_cast<std::size_t>(k)] *
           std::cos(static_cast<double>(k) * x);
    profile.values[i] = u;
  });
  for (double v : profile.values)
    if (!std::isfinite(v))
      throw std::runtime_error("profile contains a non-finite value");
  profile.provenance = make_provenance(
      "bidirectional", std::string(rel.name()), detail::format_params(rel),
      truncation, osc);
  return profile;
}

/// Partial sum of the unidirectional series,
/// u(x) = a0/2 + sum_{k=1}^{N} [a_k(t) cos(k x) + b_k(t) sin(k x)].
inline SolutionProfile eval_unidirectional(const OscillatorParams& osc,
                                           const DispersionRelation& rel,
                                           int truncation, double t,
                                           std::span<const double> grid,
                                           unsigned threads = 1) {
  if (truncation < 1)
    throw std::invalid_argument("truncation must be >= 1");
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  check_grid(grid, /*periodic_domain=*/true);

  std::vector<double> ca(static_cast<std::size_t>(truncation) + 1, 0.0);
  std::vector<double> cb(static_cast<std::size_t>(truncation) + 1, 0.0);
  ca[0] = 0.5 * a0_unidirectional(osc, t);
  for (int k = 1; k <= truncation; ++k) {
    const UnidirectionalCoefficients pair = modal_unidirectional(osc, rel, k, t);
    ca[static_cast<std::size_t>(k)] = pair.a;
    cb[static_cast<std::size_t>(k)] = pair.b;
  }

  SolutionProfile profile;
  profile.time = t;
  profile.grid.assign(grid.begin(), grid.end());
  profile.values.resize(grid.size());
  detail::parallel_index_for(grid.size(), threads, [&](std::size_t i) {
    const double x = grid[i];
    double u = ca[0];
    for (int k = 1; k <= truncation; ++k) {
      const double kx = static_cast<double>(k) * x;
      u += ca[static_cast<std::size_t>(k)] * std::cos(kx) +
           cb[static_cast<std::size_t>(k)] * std::sin(kx);
    }
    profile.values[i] = u;
  });
  for (double v : profile.values)
    if (!std::isfinite(v))
      throw std::runtime_error("profile contains a non-finite value");
  profile.provenance = make_provenance(
      "unidirectional", std::string(rel.name()), detail::format_params(rel),
      truncation, osc);
  return profile;
}

/// Classical image-sum solution of the wave medium on the periodic domain:
/// u(t, x) = -sum_n h~(t - |x - 2 pi n| / c), in the classical forcing
/// normalization (it matches -2c times the bidirectional cosine series for
/// the wave relation). Only the finitely many images inside the light cone
/// contribute; |n| <= (c t + pi) / (2 pi) + 1 covers them all.
inline SolutionProfile dalembert_periodic(const OscillatorParams& osc,
                                          double t,
                                          std::span<const double> grid) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  check_grid(grid, /*periodic_domain=*/true);
  constexpr double pi = std::numbers::pi;
  const double c = osc.wave_speed();
  const int n_max =
      static_cast<int>(std::floor((c * t + pi) / (2.0 * pi))) + 1;

  SolutionProfile profile;
  profile.time = t;
  profile.grid.assign(grid.begin(), grid.end());
  profile.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    double u = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
      const double image = x - 2.0 * pi * static_cast<double>(n);
      u -= oscillator_displacement(osc, t - std::abs(image) / c);
    }
    profile.values[i] = u;
  }
  profile.provenance =
      make_provenance("dalembert_image_sum", "wave",
                      "c=" + std::to_string(c), 0, osc);
  return profile;
}

}  // namespace lamb
