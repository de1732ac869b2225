// Damped point oscillator coupled to a one-dimensional medium: parameter
// bundle with validation, plus the displacement history it radiates and
// its time derivative (the forcing seen by every solver in this library).
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lamb {

/// Parameters of the underdamped point oscillator driving the medium.
///
/// Stored quantities: amplitude C, damping rate beta, natural frequency
/// sigma, medium wave speed c. The damped frequency
/// varsigma = sqrt(sigma^2 - beta^2) is derived at construction, as are the
/// classical length scale b = c / (2 beta) and wave number
/// kappa = varsigma / c.
///
/// Immutable once constructed; safe to share across threads.
class OscillatorParams {
public:
  OscillatorParams(double amplitude, double damping, double natural_frequency,
                   double wave_speed)
      : amplitude_(amplitude),
        damping_(damping),
        natural_frequency_(natural_frequency),
        wave_speed_(wave_speed) {
    if (!std::isfinite(amplitude) || amplitude == 0.0)
      throw std::invalid_argument(
          "oscillator amplitude must be finite and nonzero");
    if (!std::isfinite(wave_speed) || wave_speed <= 0.0)
      throw std::invalid_argument("wave speed must be positive and finite");
    if (!std::isfinite(damping) || !std::isfinite(natural_frequency) ||
        damping <= 0.0 || natural_frequency <= damping)
      throw std::invalid_argument(
          "oscillator must be underdamped: requires sigma > beta > 0, got "
          "beta=" +
          std::to_string(damping) +
          ", sigma=" + std::to_string(natural_frequency));
    damped_frequency_ = std::sqrt((natural_frequency - damping) *
                                  (natural_frequency + damping));
  }

  /// Build from raw physical constants of the coupled system: point mass M,
  /// medium tension T and density rho. The wave speed is c = sqrt(T/rho) and
  /// the damping induced by radiation into the medium is
  /// beta = sqrt(rho T) / M.
  static OscillatorParams from_physical(double mass, double tension,
                                        double density,
                                        double natural_frequency,
                                        double amplitude) {
    if (!std::isfinite(mass) || mass <= 0.0 || !std::isfinite(tension) ||
        tension <= 0.0 || !std::isfinite(density) || density <= 0.0)
      throw std::invalid_argument(
          "mass, tension and density must all be positive");
    const double wave_speed = std::sqrt(tension / density);
    const double damping = std::sqrt(density * tension) / mass;
    if (!(natural_frequency > damping))
      throw std::invalid_argument(
          "physical constants give beta=" + std::to_string(damping) +
          " >= sigma=" + std::to_string(natural_frequency) +
          "; the coupled oscillator must be underdamped (sigma > beta)");
    return OscillatorParams(amplitude, damping, natural_frequency, wave_speed);
  }

  double amplitude() const { return amplitude_; }          ///< C
  double damping() const { return damping_; }              ///< beta
  double natural_frequency() const { return natural_frequency_; } ///< sigma
  double wave_speed() const { return wave_speed_; }        ///< c
  double damped_frequency() const { return damped_frequency_; } ///< varsigma

  /// Classical length scale b = c / (2 beta).
  double lamb_b() const { return wave_speed_ / (2.0 * damping_); }
  /// Classical wave number kappa = varsigma / c.
  double lamb_kappa() const { return damped_frequency_ / wave_speed_; }

private:
  double amplitude_;
  double damping_;
  double natural_frequency_;
  double wave_speed_;
  double damped_frequency_;
};

/// The default parameter set used throughout the CLI and the examples:
/// C = -1/2, beta = 0.1, sigma = 1, c = 1 (hence b = 5, kappa = sqrt(0.99)).
inline OscillatorParams default_oscillator() {
  return OscillatorParams(-0.5, 0.1, 1.0, 1.0);
}

/// Oscillator displacement history h(t) = C e^{-beta t} sin(varsigma t),
/// extended by zero for t <= 0 (the system is at rest before the impulse).
inline double oscillator_displacement(const OscillatorParams& osc, double t) {
  if (t <= 0.0) return 0.0;
  return osc.amplitude() * std::exp(-osc.damping() * t) *
         std::sin(osc.damped_frequency() * t);
}

/// Time derivative h'(t) = C e^{-beta t} (varsigma cos(varsigma t)
/// - beta sin(varsigma t)), zero for t < 0. Right-continuous at t = 0 so
/// integrators launched from the impulse time see the post-impulse forcing
/// h'(0+) = C varsigma.
inline double oscillator_forcing_rate(const OscillatorParams& osc, double t) {
  if (t < 0.0) return 0.0;
  const double vs = osc.damped_frequency();
  return osc.amplitude() * std::exp(-osc.damping() * t) *
         (vs * std::cos(vs * t) - osc.damping() * std::sin(vs * t));
}

}  // namespace lamb
