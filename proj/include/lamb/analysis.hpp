// Graph diagnostics: box-counting fractal dimension of sampled profiles,
// truncation-convergence reporting, and the singular-series identities that
// explain the sublinear regime.
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lamb/periodic.hpp"
#include "lamb/profile.hpp"

namespace lamb {

/// Box-counting estimate of the fractal dimension of a profile graph.
struct FractalEstimate {
  double dimension = 1.0;
  double scale_min = 0.0;   ///< smallest box size used in the fit
  double scale_max = 0.0;   ///< largest box size used in the fit
  double fit_residual = 0.0;  ///< rms residual of the log-log fit
  std::vector<double> box_sizes;        ///< all evaluated scales, descending
  std::vector<std::size_t> box_counts;  ///< occupied boxes per scale
  bool degenerate_flat = false;  ///< profile had zero vertical extent
};

namespace detail {

/// Count boxes of size eps (normalized units) occupied by the graph, with
/// consecutive samples joined by segments. The graph is continuous, so the
/// occupied boxes in one column form a contiguous run; counting it needs
/// only the min/max of the column's vertical span.
inline std::size_t count_boxes(std::span<const double> xs,
                               std::span<const double> us, double eps) {
  const std::size_t columns =
      static_cast<std::size_t>(std::ceil(1.0 / eps - 1e-12));
  std::vector<double> vmin(columns, 2.0);
  std::vector<double> vmax(columns, -1.0);
  auto column_of = [&](double x) {
    const auto c = static_cast<std::size_t>(std::max(0.0, x / eps));
    return std::min(c, columns - 1);
  };
  auto cover = [&](std::size_t c, double a, double b) {
    vmin[c] = std::min({vmin[c], a, b});
    vmax[c] = std::max({vmax[c], a, b});
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double xa = xs[i], xb = xs[i + 1];
    const double ua = us[i], ub = us[i + 1];
    const std::size_t ca = column_of(xa);
    const std::size_t cb = column_of(xb);
    if (ca == cb) {
      cover(ca, ua, ub);
      continue;
    }
    // segment crosses column boundaries; interpolate at each crossing
    double u_left = ua;
    for (std::size_t c = ca; c <= cb; ++c) {
      const double x_right =
          (c == cb) ? xb : (static_cast<double>(c) + 1.0) * eps;
      const double u_right =
          (c == cb) ? ub : ua + (ub - ua) * (x_right - xa) / (xb - xa);
      cover(c, u_left, u_right);
      u_left = u_right;
    }
  }
  std::size_t total = 0;
  const std::size_t rows = columns;  // unit square
  for (std::size_t c = 0; c < columns; ++c) {
    if (vmax[c] < vmin[c]) continue;  // empty column (cannot happen mid-grid)
    const auto row_of = [&](double v) {
      const auto r = static_cast<std::size_t>(std::max(0.0, v / eps));
      return std::min(r, rows - 1);
    };
    total += row_of(vmax[c]) - row_of(vmin[c]) + 1;
  }
  return total;
}

}  // namespace detail

/// Box-counting dimension of a profile graph, normalized to the unit
/// square. Dyadic box sizes 2^-3 .. 2^-(2 + n_scales) are evaluated; the
/// log-log slope is fit over the middle band, dropping the finest two
/// scales (contaminated by the series truncation) and the coarsest one
/// (dominated by the overall trend). Constant profiles are reported as
/// dimension 1 with the degenerate flag set rather than as an error.
inline FractalEstimate box_counting_dimension(const SolutionProfile& profile,
                                              int n_scales = 8) {
  if (n_scales < 5) throw std::invalid_argument("need at least 5 scales");
  const std::size_t n = profile.values.size();
  if (n < 1024)
    throw std::invalid_argument("need at least 1024 samples for a dimension "
                                "estimate");
  if (profile.grid.size() != n)
    throw std::invalid_argument("grid/values size mismatch");
  const double x0 = profile.grid.front();
  const double x1 = profile.grid.back();
  const double dx = (x1 - x0) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(profile.grid[i] - profile.grid[i - 1] - dx) > 1e-9 * dx)
      throw std::invalid_argument("dimension estimate requires a uniform grid");

  double umin = profile.values[0], umax = profile.values[0];
  for (double v : profile.values) {
    umin = std::min(umin, v);
    umax = std::max(umax, v);
  }

  FractalEstimate est;
  if (!(umax > umin)) {
    est.degenerate_flat = true;
    est.dimension = 1.0;
    return est;
  }

  std::vector<double> xs(n), us(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = (profile.grid[i] - x0) / (x1 - x0);
    us[i] = (profile.values[i] - umin) / (umax - umin);
  }

  for (int j = 3; j < 3 + n_scales; ++j) {
    const double eps = std::pow(2.0, -j);
    est.box_sizes.push_back(eps);
    est.box_counts.push_back(detail::count_boxes(xs, us, eps));
  }

  // fit log N against log(1/eps) over the middle band
  const std::size_t first = 1;                    // drop coarsest scale
  const std::size_t last = est.box_sizes.size() - 2;  // drop finest two
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double count = static_cast<double>(last - first);
  for (std::size_t i = first; i < last; ++i) {
    const double lx = std::log(1.0 / est.box_sizes[i]);
    const double ly = std::log(static_cast<double>(est.box_counts[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / count;
  double ss = 0.0;
  for (std::size_t i = first; i < last; ++i) {
    const double lx = std::log(1.0 / est.box_sizes[i]);
    const double ly = std::log(static_cast<double>(est.box_counts[i]));
    const double r = ly - (slope * lx + intercept);
    ss += r * r;
  }
  est.dimension = slope;
  est.fit_residual = std::sqrt(ss / count);
  est.scale_min = est.box_sizes[last - 1];
  est.scale_max = est.box_sizes[first];
  return est;
}

/// Calibration signal with known box dimension 2 - hurst: a truncated
/// lacunary cosine sum, sum_{j=0}^{levels} 2^{-j hurst} cos(2^j x).
inline std::vector<double> weierstrass_signal(std::span<const double> grid,
                                              int levels = 12,
                                              double hurst = 0.5) {
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double acc = 0.0;
    for (int j = 0; j <= levels; ++j)
      acc += std::pow(2.0, -j * hurst) *
             std::cos(std::pow(2.0, j) * grid[i]);
    out[i] = acc;
  }
  return out;
}

enum class ConvergenceVerdict { converging, inconclusive, oscillatory };

inline std::string_view to_string(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::converging: return "converging";
    case ConvergenceVerdict::inconclusive: return "inconclusive";
    case ConvergenceVerdict::oscillatory: return "oscillatory";
  }
  return "";  // unreachable
}

/// Pairwise distances between partial sums at increasing truncations.
struct ConvergenceReport {
  std::vector<int> truncations;
  std::vector<double> sup_diffs;  ///< between consecutive truncations
  std::vector<double> l2_diffs;
  ConvergenceVerdict verdict = ConvergenceVerdict::inconclusive;
};

/// Compare partial sums of the series solution at each requested truncation.
/// Verdict: converging when consecutive sup-norm differences decrease
/// monotonically; oscillatory when they reach 0.1 and fail to decrease (the
/// asymptotically constant regime, where the partial sums behave like a
/// Dirichlet kernel); inconclusive otherwise. Judging monotonicity takes at
/// least two differences, so a converging verdict needs three truncations.
inline ConvergenceReport convergence_report(
    const OscillatorParams& osc, const DispersionRelation& rel,
    WaveModel model, double t, std::span<const int> truncations,
    std::span<const double> grid, unsigned threads = 1) {
  if (truncations.size() < 2)
    throw std::invalid_argument("need at least two truncations");
  for (std::size_t i = 1; i < truncations.size(); ++i)
    if (truncations[i] <= truncations[i - 1])
      throw std::invalid_argument("truncations must be strictly ascending");

  ConvergenceReport report;
  report.truncations.assign(truncations.begin(), truncations.end());
  std::vector<SolutionProfile> profiles;
  profiles.reserve(truncations.size());
  for (int n : truncations)
    profiles.push_back(model == WaveModel::bidirectional
                           ? eval_bidirectional(osc, rel, n, t, grid, threads)
                           : eval_unidirectional(osc, rel, n, t, grid, threads));
  for (std::size_t i = 1; i < profiles.size(); ++i) {
    report.sup_diffs.push_back(sup_distance(profiles[i - 1], profiles[i]));
    report.l2_diffs.push_back(l2_distance(profiles[i - 1], profiles[i]));
  }

  bool decreasing = report.sup_diffs.size() >= 2;
  for (std::size_t i = 1; i < report.sup_diffs.size(); ++i)
    decreasing = decreasing && report.sup_diffs[i] < report.sup_diffs[i - 1];
  double sup_max = 0.0;
  for (double d : report.sup_diffs) sup_max = std::max(sup_max, d);
  if (decreasing)
    report.verdict = ConvergenceVerdict::converging;
  else if (sup_max > 0.1)
    report.verdict = ConvergenceVerdict::oscillatory;
  else
    report.verdict = ConvergenceVerdict::inconclusive;
  return report;
}

/// Partial sum and closed form of the singular series
///   sum_{0 < |k| <= N} (1/|k| - alpha/k^2) e^{i k x}
///     = -2 log|2 sin(x/2)| - alpha (x^2/2 - pi |x| + pi^2/3),
/// real by symmetry. The series carries the logarithmic singularity at
/// x = 0, so x = 0 is rejected.
struct LogSingularitySum {
  double partial_sum = 0.0;
  double closed_form = 0.0;
};

inline LogSingularitySum log_singularity_sum(double alpha, double x, long n) {
  constexpr double pi = std::numbers::pi;
  if (!(n >= 1)) throw std::invalid_argument("N must be >= 1");
  if (!(x >= -pi && x <= pi))
    throw std::invalid_argument("x must lie in [-pi, pi]");
  if (x == 0.0)
    throw std::invalid_argument("x = 0 sits on the logarithmic singularity");
  LogSingularitySum out;
  double acc = 0.0;
  for (long k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    acc += (1.0 / kd - alpha / (kd * kd)) * std::cos(kd * x);
  }
  out.partial_sum = 2.0 * acc;
  out.closed_form =
      -2.0 * std::log(std::abs(2.0 * std::sin(0.5 * x))) -
      alpha * (0.5 * x * x - pi * std::abs(x) + pi * pi / 3.0);
  return out;
}

/// The three-term split 1/(|k| + alpha) = 1/|k| - alpha/k^2 + remainder,
/// with remainder = alpha^2 / (k^2 (|k| + alpha)) of size O(1/|k|^3).
struct PartialFractionTerms {
  double leading = 0.0;     ///< 1/|k|
  double correction = 0.0;  ///< -alpha/k^2
  double remainder = 0.0;   ///< alpha^2 / (k^2 (|k| + alpha))
};

inline PartialFractionTerms partial_fraction_terms(double alpha, long k) {
  if (k == 0) throw std::invalid_argument("k must be nonzero");
  const double ak = std::abs(static_cast<double>(k));
  if (ak + alpha == 0.0)
    throw std::invalid_argument("alpha = -|k| makes the term singular");
  const double k2 = ak * ak;
  return {1.0 / ak, -alpha / k2, alpha * alpha / (k2 * (ak + alpha))};
}

}  // namespace lamb
