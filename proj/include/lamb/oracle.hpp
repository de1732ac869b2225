// Independent numerical integrators used to validate every closed form in
// modal.hpp. Deliberately self-contained: this header consumes only the
// oscillator forcing and knows nothing about the modal coefficient algebra
// it is checking, so a transcription slip there cannot validate itself.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "lamb/oscillator.hpp"

namespace lamb {

namespace detail {

/// Classical fixed-step RK4 on a two-component first-order system.
template <class Deriv>
std::array<double, 2> rk4_integrate(std::array<double, 2> y, double t_end,
                                    long steps, Deriv&& deriv) {
  const double dt = t_end / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const auto k1 = deriv(t, y);
    const auto k2 = deriv(t + 0.5 * dt,
                          {y[0] + 0.5 * dt * k1[0], y[1] + 0.5 * dt * k1[1]});
    const auto k3 = deriv(t + 0.5 * dt,
                          {y[0] + 0.5 * dt * k2[0], y[1] + 0.5 * dt * k2[1]});
    const auto k4 =
        deriv(t + dt, {y[0] + dt * k3[0], y[1] + dt * k3[1]});
    y[0] += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y[1] += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
  }
  return y;
}

inline long resolve_steps(double t_end, double dt) {
  return std::max<long>(1, static_cast<long>(std::ceil(t_end / dt - 1e-9)));
}

}  // namespace detail

/// Step size keeping the per-step phase increment of the fastest oscillation
/// at or below 0.02 rad, capped at 1e-4. Uniform phase error across modes of
/// any frequency, at a cost proportional to omega.
inline double default_mode_dt(double omega, double sigma) {
  const double w = std::max({omega, sigma, 1.0});
  return std::min(1e-4, 2e-2 / w);
}

/// Mode value and time derivative produced by an integration.
struct ModeState {
  double value = 0.0;
  double derivative = 0.0;
};

/// Integrate the forced second-order mode equation
///   a'' + omega^2 a = h'(t) / pi,  a(0) = a'(0) = 0
/// with classical RK4 (global error O(dt^4)). Rejects step sizes that do
/// not resolve the fastest oscillation present.
inline ModeState rk4_bidirectional_mode(const OscillatorParams& osc,
                                        double omega, double t_end,
                                        double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be >= 0");
  if (!(omega >= 0.0)) throw std::invalid_argument("omega must be >= 0");
  if (dt * std::max(omega, osc.natural_frequency()) > 0.1)
    throw std::invalid_argument(
        "dt too coarse for this mode: require dt * max(omega, sigma) <= 0.1");
  if (t_end == 0.0) return {};
  constexpr double pi = std::numbers::pi;
  const double w2 = omega * omega;
  const auto deriv = [&](double t, std::array<double, 2> y) {
    return std::array<double, 2>{
        y[1], -w2 * y[0] + oscillator_forcing_rate(osc, t) / pi};
  };
  const auto y = detail::rk4_integrate({0.0, 0.0}, t_end,
                                       detail::resolve_steps(t_end, dt), deriv);
  return {y[0], y[1]};
}

/// Homogeneous variant a'' + omega^2 a = 0 from manufactured initial data,
/// for energy-conservation checks of the stepper itself.
inline ModeState rk4_homogeneous_mode(double omega, double value0,
                                      double derivative0, double t_end,
                                      double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be >= 0");
  if (dt * omega > 0.1)
    throw std::invalid_argument(
        "dt too coarse for this mode: require dt * omega <= 0.1");
  if (t_end == 0.0) return {value0, derivative0};
  const double w2 = omega * omega;
  const auto deriv = [&](double, std::array<double, 2> y) {
    return std::array<double, 2>{y[1], -w2 * y[0]};
  };
  const auto y = detail::rk4_integrate({value0, derivative0}, t_end,
                                       detail::resolve_steps(t_end, dt), deriv);
  return {y[0], y[1]};
}

/// Integrate the complex first-order mode equation
///   c' + i omega c = h(t) / (2 pi),  c(0) = 0.
/// The real solution pair follows as a_k = 2 Re c, b_k = -2 Im c; callers
/// comparing against the unidirectional closed forms apply their 1/(2c)
/// prefactor at comparison time.
inline std::complex<double> rk4_unidirectional_mode(const OscillatorParams& osc,
                                                    double omega, double t_end,
                                                    double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be >= 0");
  if (!(omega >= 0.0)) throw std::invalid_argument("omega must be >= 0");
  if (dt * std::max(omega, osc.natural_frequency()) > 0.1)
    throw std::invalid_argument(
        "dt too coarse for this mode: require dt * max(omega, sigma) <= 0.1");
  if (t_end == 0.0) return {};
  constexpr double pi = std::numbers::pi;
  // y = (Re c, Im c): Re' = omega Im + h/(2 pi), Im' = -omega Re.
  const auto deriv = [&](double t, std::array<double, 2> y) {
    return std::array<double, 2>{
        omega * y[1] + oscillator_displacement(osc, t) / (2.0 * pi),
        -omega * y[0]};
  };
  const auto y = detail::rk4_integrate({0.0, 0.0}, t_end,
                                       detail::resolve_steps(t_end, dt), deriv);
  return {y[0], y[1]};
}

/// Running integral of the displacement history in closed form:
/// int_0^t h = C [varsigma - e^{-beta t}(varsigma cos(varsigma t)
///                + beta sin(varsigma t))] / sigma^2.
inline double integral_of_h(const OscillatorParams& osc, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  const double beta = osc.damping();
  const double vs = osc.damped_frequency();
  const double sigma2 = osc.natural_frequency() * osc.natural_frequency();
  return osc.amplitude() *
         (vs - std::exp(-beta * t) *
                   (vs * std::cos(vs * t) + beta * std::sin(vs * t))) /
         sigma2;
}

/// Trapezoid-rule cross-check of integral_of_h.
inline double trapezoid_integral_of_h(const OscillatorParams& osc, double t,
                                      double dt = 1e-4) {
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (t == 0.0) return 0.0;
  const long n = detail::resolve_steps(t, dt);
  const double h = t / static_cast<double>(n);
  double acc = 0.5 * (oscillator_displacement(osc, 0.0) +
                      oscillator_displacement(osc, t));
  for (long i = 1; i < n; ++i)
    acc += oscillator_displacement(osc, static_cast<double>(i) * h);
  return acc * h;
}

}  // namespace lamb
