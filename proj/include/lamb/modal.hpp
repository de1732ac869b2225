// Closed-form Fourier coefficients of the driven periodic solutions, for
// both the second-order (bidirectional) and first-order (unidirectional)
// models. Everything here is a pure function of the oscillator parameters,
// one frequency, and time.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lamb/dispersion.hpp"
#include "lamb/oscillator.hpp"

namespace lamb {

/// The amplitude quadruple (p, q, r, s) of the forced mode at frequency
/// omega, together with the shared denominator
/// D = (sigma^2 - omega^2)^2 + 4 omega^2 beta^2. D stays strictly positive
/// for every underdamped oscillator, including the resonant case
/// omega = sigma where D = 4 sigma^2 beta^2.
struct ModalCoefficients {
  double p;
  double q;
  double r;
  double s;
  double denom;
};

inline ModalCoefficients modal_coefficients(const OscillatorParams& osc,
                                            double omega) {
  if (!std::isfinite(omega) || omega < 0.0)
    throw std::invalid_argument("modal frequency must be finite and >= 0");
  const double beta = osc.damping();
  const double vs = osc.damped_frequency();
  const double sigma2 = osc.natural_frequency() * osc.natural_frequency();
  const double w2 = omega * omega;
  const double gap = sigma2 - w2;
  const double denom = gap * gap + 4.0 * w2 * beta * beta;
  return {vs * gap / denom, 2.0 * omega * beta * vs / denom,
          beta * (sigma2 + w2) / denom,
          omega * (2.0 * beta * beta - sigma2 + w2) / denom, denom};
}

/// Conversion between the unit-forcing normalization used by the dispersive
/// solvers here and the classical convention where the medium is pushed by
/// the full oscillator reaction: classical solution = -2c * dispersive one.
inline double classical_forcing_scale(const OscillatorParams& osc) {
  return -2.0 * osc.wave_speed();
}

/// Mean-mode coefficient of the bidirectional periodic solution,
/// a0(t) = C [varsigma - e^{-beta t}(varsigma cos(varsigma t)
///             + beta sin(varsigma t))] / (pi sigma^2),
/// i.e. (1/pi) times the running integral of the oscillator displacement.
inline double a0_bidirectional(const OscillatorParams& osc, double t) {
  const double beta = osc.damping();
  const double vs = osc.damped_frequency();
  const double sigma2 = osc.natural_frequency() * osc.natural_frequency();
  constexpr double pi = std::numbers::pi;
  return osc.amplitude() *
         (vs - std::exp(-beta * t) *
                   (vs * std::cos(vs * t) + beta * std::sin(vs * t))) /
         (pi * sigma2);
}

/// Bidirectional mode amplitude at continuous frequency omega:
/// (C/pi) [p cos(omega t) + q sin(omega t)
///         - e^{-beta t}(p cos(varsigma t) + r sin(varsigma t))].
/// The decaying factor oscillates at the damped frequency varsigma; that
/// choice (and not the undamped sigma) is what makes both the value and the
/// slope vanish at t = 0. Negative t is accepted: the closed form is entire
/// in t, and centered differencing at zero evaluates it there.
inline double bidirectional_mode(const OscillatorParams& osc, double omega,
                                 double t) {
  const ModalCoefficients mc = modal_coefficients(osc, omega);
  const double beta = osc.damping();
  const double vs = osc.damped_frequency();
  constexpr double pi = std::numbers::pi;
  return osc.amplitude() / pi *
         (mc.p * std::cos(omega * t) + mc.q * std::sin(omega * t) -
          std::exp(-beta * t) *
              (mc.p * std::cos(vs * t) + mc.r * std::sin(vs * t)));
}

/// Variant of bidirectional_mode whose decaying factor oscillates at the
/// undamped frequency sigma instead of varsigma. It violates the zero
/// initial slope of the mode equation and exists only so the discrepancy
/// can be demonstrated (see the verify command); it is not used by any
/// solver.
inline double bidirectional_mode_sigma_variant(const OscillatorParams& osc,
                                               double omega, double t) {
  const ModalCoefficients mc = modal_coefficients(osc, omega);
  const double beta = osc.damping();
  const double sigma = osc.natural_frequency();
  constexpr double pi = std::numbers::pi;
  return osc.amplitude() / pi *
         (mc.p * std::cos(omega * t) + mc.q * std::sin(omega * t) -
          std::exp(-beta * t) *
              (mc.p * std::cos(sigma * t) + mc.r * std::sin(sigma * t)));
}

/// Cosine coefficient a_k(t) of the bidirectional periodic solution, k >= 1.
inline double ak_bidirectional(const OscillatorParams& osc,
                               const DispersionRelation& rel, int k,
                               double t) {
  if (k < 1) throw std::invalid_argument("mode index k must be >= 1");
  return bidirectional_mode(osc, rel.omega(static_cast<double>(k)), t);
}

inline double ak_bidirectional_sigma_variant(const OscillatorParams& osc,
                                             const DispersionRelation& rel,
                                             int k, double t) {
  if (k < 1) throw std::invalid_argument("mode index k must be >= 1");
  return bidirectional_mode_sigma_variant(osc,
                                          rel.omega(static_cast<double>(k)), t);
}

/// Cosine/sine coefficient pair of the unidirectional periodic solution.
struct UnidirectionalCoefficients {
  double a;
  double b;
};

/// Unidirectional mode amplitudes at continuous frequency omega:
///   a = (C / 2 c pi) [p cos(omega t) + q sin(omega t)
///                     - e^{-beta t}(p cos(varsigma t) + r sin(varsigma t))]
///   b = (C / 2 c pi) [-q cos(omega t) + p sin(omega t)
///                     + e^{-beta t}(q cos(varsigma t) + s sin(varsigma t))]
inline UnidirectionalCoefficients unidirectional_mode(
    const OscillatorParams& osc, double omega, double t) {
  const ModalCoefficients mc = modal_coefficients(osc, omega);
  const double beta = osc.damping();
  const double vs = osc.damped_frequency();
  constexpr double pi = std::numbers::pi;
  const double scale = osc.amplitude() / (2.0 * osc.wave_speed() * pi);
  const double cw = std::cos(omega * t);
  const double sw = std::sin(omega * t);
  const double decay = std::exp(-beta * t);
  const double cv = std::cos(vs * t);
  const double sv = std::sin(vs * t);
  return {scale * (mc.p * cw + mc.q * sw - decay * (mc.p * cv + mc.r * sv)),
          scale * (-mc.q * cw + mc.p * sw + decay * (mc.q * cv + mc.s * sv))};
}

inline UnidirectionalCoefficients modal_unidirectional(
    const OscillatorParams& osc, const DispersionRelation& rel, int k,
    double t) {
  if (k < 1) throw std::invalid_argument("mode index k must be >= 1");
  return unidirectional_mode(osc, rel.omega(static_cast<double>(k)), t);
}

/// Mean-mode coefficient of the unidirectional solution; same bracket as
/// a0_bidirectional with the prefactor divided by 2c.
inline double a0_unidirectional(const OscillatorParams& osc, double t) {
  return a0_bidirectional(osc, t) / (2.0 * osc.wave_speed());
}

}  // namespace lamb
