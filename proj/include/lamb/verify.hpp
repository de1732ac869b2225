// Cross-module verification: every closed form checked against an
// independent route (ODE integrator, image sum, classical transcription,
// explicitly summable series), plus estimator calibration and determinism.
// The CLI `verify` command and the test suites both run these checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lamb/analysis.hpp"
#include "lamb/io.hpp"
#include "lamb/line.hpp"
#include "lamb/modal.hpp"
#include "lamb/oracle.hpp"
#include "lamb/periodic.hpp"

namespace lamb {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Also demonstrate that the variant whose decaying factor oscillates at
  /// sigma (instead of varsigma) violates the zero initial slope.
  bool sigma_variant = false;
  unsigned threads = 1;
};

namespace checks {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

/// omega(k)/|k|^m must be settled near its limit already at k = 1e3.
inline CheckResult catalog_asymptotics() {
  double worst = 0.0;
  std::string worst_name;
  for (const auto& rel : DispersionRelation::catalog()) {
    const double m = rel.asymptotic_exponent();
    const double ref = rel.omega(1e5) / std::pow(1e5, m);
    for (double k : {1e3, 1e4}) {
      const double ratio = rel.omega(k) / std::pow(k, m);
      const double dev = std::abs(ratio / ref - 1.0);
      if (ref <= 0.0 || dev > worst) {
        worst = dev;
        worst_name = rel.name();
      }
    }
  }
  return {"catalog asymptotic exponents (5% at k=1e3..1e4)", worst < 0.05,
          "worst deviation " + sci(worst) + " (" + worst_name + ")"};
}

/// p D = varsigma (sigma^2 - omega^2) and friends, to 1e-12 relative.
inline CheckResult modal_identities() {
  double worst = 0.0;
  for (double sigma : {0.7, 1.0, 2.5})
    for (double beta : {0.05, 0.1, 0.4})
      for (double c : {0.5, 1.0, 2.0}) {
        if (beta >= sigma) continue;
        const OscillatorParams osc(-0.5, beta, sigma, c);
        const double vs = osc.damped_frequency();
        const double s2 = sigma * sigma;
        for (double omega : {0.0, 0.3, sigma, 3.0, 47.0, 1e4}) {
          const ModalCoefficients mc = modal_coefficients(osc, omega);
          const double w2 = omega * omega;
          auto defect = [](double lhs, double rhs) {
            if (rhs == 0.0) return lhs == 0.0 ? 0.0 : 1.0;
            return std::abs(lhs - rhs) / std::abs(rhs);
          };
          worst = std::max(worst, defect(mc.p * mc.denom, vs * (s2 - w2)));
          worst = std::max(worst,
                           defect(mc.q * mc.denom, 2.0 * omega * beta * vs));
          worst = std::max(worst, defect(mc.r * mc.denom, beta * (s2 + w2)));
          worst = std::max(worst,
                           defect(mc.s * mc.denom,
                                  omega * (2.0 * beta * beta - s2 + w2)));
          if (!(mc.denom > 0.0)) worst = 1.0;
        }
      }
  return {"modal coefficient identities (1e-12 relative)", worst < 1e-12,
          "worst relative defect " + sci(worst)};
}

/// Every mode starts from rest: value exactly zero, centered-difference
/// slope below 1e-6.
inline CheckResult initial_conditions() {
  const OscillatorParams osc = default_oscillator();
  const double step = 1e-6;
  double worst_value = 0.0, worst_slope = 0.0;
  for (const auto& rel : DispersionRelation::catalog())
    for (int k = 1; k <= 64; ++k) {
      worst_value = std::max(worst_value,
                             std::abs(ak_bidirectional(osc, rel, k, 0.0)));
      const double slope = (ak_bidirectional(osc, rel, k, step) -
                            ak_bidirectional(osc, rel, k, -step)) /
                           (2.0 * step);
      worst_slope = std::max(worst_slope, std::abs(slope));
      const auto at0 = modal_unidirectional(osc, rel, k, 0.0);
      worst_value = std::max({worst_value, std::abs(at0.a), std::abs(at0.b)});
      const auto plus = modal_unidirectional(osc, rel, k, step);
      const auto minus = modal_unidirectional(osc, rel, k, -step);
      worst_slope = std::max({worst_slope,
                              std::abs((plus.a - minus.a) / (2.0 * step)),
                              std::abs((plus.b - minus.b) / (2.0 * step))});
    }
  return {"initial conditions (value 0, slope < 1e-6, k <= 64)",
          worst_value == 0.0 && worst_slope < 1e-6,
          "worst value " + sci(worst_value) + ", worst slope " +
              sci(worst_slope)};
}

/// The sigma-frequency variant must violate the zero initial slope; its
/// failure is the evidence for using the damped frequency in the decaying
/// factor.
inline CheckResult sigma_variant_demonstration() {
  const OscillatorParams osc = default_oscillator();
  const auto rel = DispersionRelation::wave(1.0);
  const double step = 1e-6;
  double worst = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const double slope = (ak_bidirectional_sigma_variant(osc, rel, k, step) -
                          ak_bidirectional_sigma_variant(osc, rel, k, -step)) /
                         (2.0 * step);
    worst = std::max(worst, std::abs(slope));
  }
  return {"sigma-variant violates the zero initial slope (expected)",
          worst > 1e-6,
          "largest |a_k'(0)| " + sci(worst) + " (> 1e-6 demonstrates it)"};
}

/// Closed forms against the independent RK4 integrations, every catalog
/// relation, k in {1,2,5,17,40}, t in {0.5,1,5,10}.
inline CheckResult oracle_equivalence() {
  const OscillatorParams osc = default_oscillator();
  double worst = 0.0;
  for (const auto& rel : DispersionRelation::catalog())
    for (int k : {1, 2, 5, 17, 40}) {
      const double omega = rel.omega(static_cast<double>(k));
      const double dt = default_mode_dt(omega, osc.natural_frequency());
      for (double t : {0.5, 1.0, 5.0, 10.0}) {
        const ModeState st = rk4_bidirectional_mode(osc, omega, t, dt);
        worst = std::max(worst,
                         std::abs(st.value - bidirectional_mode(osc, omega, t)));
        const auto mode = rk4_unidirectional_mode(osc, omega, t, dt);
        const auto closed = unidirectional_mode(osc, omega, t);
        const double prefactor = 2.0 * osc.wave_speed();
        worst = std::max(
            {worst, std::abs(2.0 * mode.real() - prefactor * closed.a),
             std::abs(-2.0 * mode.imag() - prefactor * closed.b)});
      }
    }
  return {"closed forms vs RK4 oracle (1e-7 absolute)", worst < 1e-7,
          "worst absolute defect " + sci(worst)};
}

/// Periodic wave-medium series against the classical image sum.
inline CheckResult classical_limit_periodic(unsigned threads) {
  const OscillatorParams osc = default_oscillator();
  const auto rel = DispersionRelation::wave(osc.wave_speed());
  const auto grid = uniform_periodic_grid(2048);
  const double scale = classical_forcing_scale(osc);
  double worst = 0.0;
  for (double t : {1.0, 2.0, 5.0, 10.0}) {
    const auto series = eval_bidirectional(osc, rel, 1000, t, grid, threads);
    const auto images = dalembert_periodic(osc, t, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      worst = std::max(worst, std::abs(images.values[i] -
                                       scale * series.values[i]));
  }
  return {"periodic series vs image sum (sup < 1e-2)", worst < 1e-2,
          "worst sup-norm distance " + sci(worst)};
}

/// Line quadrature (wave medium) against the classical closed form, away
/// from the three kink points x = 0, +-ct.
inline CheckResult classical_limit_line(unsigned threads) {
  const OscillatorParams osc = default_oscillator();
  const auto rel = DispersionRelation::wave(osc.wave_speed());
  const auto grid = uniform_grid(501, -10.0, 10.0);
  const double scale = classical_forcing_scale(osc);
  double worst = 0.0;
  for (double t : {1.0, 5.0, 10.0}) {
    const auto closed = line_closed_form(osc, t, grid);
    const auto quad = line_profile_quadrature(
        osc, rel, WaveModel::bidirectional, t, grid, 400.0, 1 << 15, threads);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double x = grid[i];
      const double to_kink =
          std::min(std::abs(x), std::abs(std::abs(x) - osc.wave_speed() * t));
      if (to_kink < 0.1) continue;
      worst = std::max(worst, std::abs(closed.values[i] -
                                       scale * quad.profile.values[i]));
    }
  }
  return {"line quadrature vs closed form (sup < 5e-3 off kinks)",
          worst < 5e-3, "worst sup-norm distance " + sci(worst)};
}

/// The classical-medium cosine coefficients, transcribed directly in the
/// wave-speed form, must equal -2c times the dispersive ones at omega = ck.
inline CheckResult classical_coefficient_rescale() {
  const OscillatorParams osc(-0.5, 0.1, 1.0, 2.0);  // c != 1 to expose scale
  const auto rel = DispersionRelation::wave(osc.wave_speed());
  const double c = osc.wave_speed();
  const double beta = osc.damping();
  const double vs = osc.damped_frequency();
  const double s2 = osc.natural_frequency() * osc.natural_frequency();
  constexpr double pi = std::numbers::pi;
  double worst = 0.0;
  for (int k = 1; k <= 40; ++k)
    for (double t : {0.5, 2.0, 7.0}) {
      const double ck = c * static_cast<double>(k);
      const double denom = (s2 - ck * ck) * (s2 - ck * ck) +
                           4.0 * ck * ck * beta * beta;
      const double pk = vs * (s2 - ck * ck) / denom;
      const double qk = 2.0 * ck * beta * vs / denom;
      const double rk = beta * (s2 + ck * ck) / denom;
      const double classical =
          -2.0 * c * osc.amplitude() / pi *
          (pk * std::cos(ck * t) + qk * std::sin(ck * t) -
           std::exp(-beta * t) *
               (pk * std::cos(vs * t) + rk * std::sin(vs * t)));
      const double rescaled =
          classical_forcing_scale(osc) * ak_bidirectional(osc, rel, k, t);
      worst = std::max(worst, std::abs(classical - rescaled) /
                                  std::max(std::abs(classical), 1e-300));
    }
  return {"classical coefficient = -2c * dispersive (1e-12 relative)",
          worst < 1e-12, "worst relative defect " + sci(worst)};
}

/// The box-counting estimator must reproduce the known dimensions of a
/// straight line (1) and a lacunary cosine sum with Hurst 1/2 (3/2) before
/// its output is trusted anywhere.
inline CheckResult estimator_calibration() {
  SolutionProfile line;
  line.grid = uniform_grid(4096, -1.0, 1.0);
  line.values = line.grid;
  const double dim_line = box_counting_dimension(line).dimension;

  SolutionProfile rough;
  rough.grid = uniform_grid(8192, 0.0, 2.0 * std::numbers::pi);
  rough.values = weierstrass_signal(rough.grid);
  const double dim_rough = box_counting_dimension(rough).dimension;

  const bool ok = std::abs(dim_line - 1.0) < 0.05 &&
                  std::abs(dim_rough - 1.5) < 0.1;
  return {"box-counting calibration (line 1.0 +- 0.05, lacunary 1.5 +- 0.1)",
          ok, "line " + sci(dim_line) + ", lacunary " + sci(dim_rough)};
}

/// Three-term partial-fraction split: exact to 1e-15 relative, remainder
/// within its cubic bound.
inline CheckResult partial_fraction_identity() {
  double worst = 0.0;
  bool bound_ok = true;
  for (double alpha : {0.5, 1.0, 2.0})
    for (long k = 1; k <= 10000; ++k) {
      const auto terms = partial_fraction_terms(alpha, k);
      const double sum = terms.leading + terms.correction + terms.remainder;
      const double exact = 1.0 / (static_cast<double>(k) + alpha);
      worst = std::max(worst, std::abs(sum - exact) / exact);
      const double kd = static_cast<double>(k);
      bound_ok = bound_ok && terms.remainder <= alpha * alpha / (kd * kd * kd);
    }
  return {"partial-fraction identity (1e-15 relative, cubic remainder)",
          worst < 1e-15 && bound_ok, "worst relative defect " + sci(worst)};
}

/// Singular-series partial sums against the explicit closed form.
inline CheckResult log_singularity_identity() {
  double worst = 0.0;
  for (double alpha : {0.0, 1.0})
    for (double x : {0.1, 0.5, 1.0, 2.0, 3.0}) {
      const auto sum = log_singularity_sum(alpha, x, 100000);
      worst = std::max(worst, std::abs(sum.partial_sum - sum.closed_form));
    }
  return {"log-singularity series vs closed form (1e-3 at N=1e5)",
          worst < 1e-3, "worst absolute defect " + sci(worst)};
}

/// Bidirectional |a_k| omega^2 and unidirectional |a_k| omega, |b_k| omega
/// stay within 10x their k=100 values across k in [100, 1000].
inline CheckResult decay_laws() {
  const OscillatorParams osc = default_oscillator();
  double worst_ratio = 0.0;
  std::string worst_name;
  for (const auto& rel : DispersionRelation::catalog()) {
    double base_bi = 0.0, max_bi = 0.0;
    double base_ua = 0.0, max_ua = 0.0;
    double base_ub = 0.0, max_ub = 0.0;
    for (int k = 100; k <= 1000; ++k) {
      const double w = rel.omega(static_cast<double>(k));
      const double bi = std::abs(ak_bidirectional(osc, rel, k, 5.0)) * w * w;
      const auto uni = modal_unidirectional(osc, rel, k, 5.0);
      const double ua = std::abs(uni.a) * w;
      const double ub = std::abs(uni.b) * w;
      if (k == 100) {
        base_bi = bi;
        base_ua = ua;
        base_ub = ub;
      }
      max_bi = std::max(max_bi, bi);
      max_ua = std::max(max_ua, ua);
      max_ub = std::max(max_ub, ub);
    }
    const double ratio =
        std::max({max_bi / base_bi, max_ua / base_ua, max_ub / base_ub});
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_name = rel.name();
    }
  }
  return {"decay laws (sup over k<=1000 within 10x of k=100)",
          worst_ratio <= 10.0,
          "worst ratio " + sci(worst_ratio) + " (" + worst_name + ")"};
}

/// Mean mode against the trapezoid quadrature of the displacement history.
inline CheckResult mean_mode_quadrature() {
  const OscillatorParams osc = default_oscillator();
  constexpr double pi = std::numbers::pi;
  double worst = 0.0;
  for (double t : {3.0, 5.0}) {
    worst = std::max(worst, std::abs(integral_of_h(osc, t) -
                                     trapezoid_integral_of_h(osc, t)));
    worst = std::max(worst, std::abs(a0_bidirectional(osc, t) -
                                     trapezoid_integral_of_h(osc, t) / pi));
  }
  return {"mean mode vs trapezoid quadrature (1e-9)", worst < 1e-9,
          "worst absolute defect " + sci(worst)};
}

/// Profiles and their CSV renderings must be byte-identical for any thread
/// count.
inline CheckResult determinism() {
  const OscillatorParams osc = default_oscillator();
  const auto rel = DispersionRelation::sqrt_abs_k();
  const auto grid = uniform_periodic_grid(1024);
  const auto reference = eval_bidirectional(osc, rel, 500, 7.0, grid, 1);
  const std::string ref_csv = profile_csv(reference);
  bool ok = true;
  for (unsigned threads : {4u, 16u}) {
    const auto probe = eval_bidirectional(osc, rel, 500, 7.0, grid, threads);
    ok = ok && profile_csv(probe) == ref_csv;
  }
  const auto again = eval_bidirectional(osc, rel, 500, 7.0, grid, 1);
  ok = ok && profile_csv(again) == ref_csv;
  return {"bitwise determinism across 1/4/16 threads", ok,
          ok ? "identical CSV bytes" : "CSV bytes differ"};
}

}  // namespace checks

/// Run the full verification suite; every check must pass for a healthy
/// build. With sigma_variant set, also demonstrate the initial-slope
/// violation of the sigma-frequency variant.
inline std::vector<CheckResult> run_verification(
    const VerifyOptions& options = {}) {
  std::vector<CheckResult> results;
  results.push_back(checks::catalog_asymptotics());
  results.push_back(checks::modal_identities());
  results.push_back(checks::initial_conditions());
  if (options.sigma_variant)
    results.push_back(checks::sigma_variant_demonstration());
  results.push_back(checks::oracle_equivalence());
  results.push_back(checks::classical_limit_periodic(options.threads));
  results.push_back(checks::classical_limit_line(options.threads));
  results.push_back(checks::classical_coefficient_rescale());
  results.push_back(checks::estimator_calibration());
  results.push_back(checks::partial_fraction_identity());
  results.push_back(checks::log_singularity_identity());
  results.push_back(checks::decay_laws());
  results.push_back(checks::mean_mode_quadrature());
  results.push_back(checks::determinism());
  return results;
}

}  // namespace lamb
