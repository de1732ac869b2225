// Catalog of dispersion relations omega(k) for the media the oscillator can
// drive, each with its declared large-wave-number power law, plus the
// regularity classifier that the power law controls.
#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lamb {

enum class DispersionFamily {
  wave,
  elastic_string,
  regularized_boussinesq,
  klein_gordon,
  sqrt_abs_k,
  water_wave,
  quadratic,
  rational_quadratic,
  power_law,
};

enum class WaveModel { bidirectional, unidirectional };

inline std::string_view to_string(WaveModel m) {
  return m == WaveModel::bidirectional ? "bidirectional" : "unidirectional";
}

/// A named, parameterized dispersion relation omega(k).
///
/// Every catalog entry is real-valued and even in k (the formulas depend on
/// k only through k^2 or |k|), and satisfies omega(k) ~ const * |k|^m at
/// large |k| for the declared asymptotic exponent m. Construction validates
/// the parameter domain that keeps omega real.
class DispersionRelation {
public:
  static DispersionRelation wave(double c) {
    require_positive(c, "wave speed c");
    return {DispersionFamily::wave, c, 0.0, 1.0};
  }
  /// omega = sqrt(c^2 k^2 + epsilon k^4), asymptotically quadratic.
  static DispersionRelation elastic_string(double c, double epsilon) {
    require_positive(c, "wave speed c");
    require_positive(epsilon, "stiffness epsilon");
    return {DispersionFamily::elastic_string, c, epsilon, 2.0};
  }
  /// omega = c|k| / sqrt(1 + epsilon k^2), asymptotically constant.
  static DispersionRelation regularized_boussinesq(double c, double epsilon) {
    require_positive(c, "wave speed c");
    require_positive(epsilon, "regularization epsilon");
    return {DispersionFamily::regularized_boussinesq, c, epsilon, 0.0};
  }
  /// omega = sqrt(c^2 k^2 + kg_mass^2), asymptotically linear. The mass
  /// parameter is named kg_mass to keep it apart from the asymptotic
  /// exponent m.
  static DispersionRelation klein_gordon(double c, double kg_mass) {
    require_positive(c, "wave speed c");
    require_positive(kg_mass, "kg_mass");
    return {DispersionFamily::klein_gordon, c, kg_mass, 1.0};
  }
  static DispersionRelation sqrt_abs_k() {
    return {DispersionFamily::sqrt_abs_k, 0.0, 0.0, 0.5};
  }
  /// omega = sqrt(k tanh k), the free-surface water wave relation
  /// (physical constants dropped); asymptotically sqrt(|k|).
  static DispersionRelation water_wave() {
    return {DispersionFamily::water_wave, 0.0, 0.0, 0.5};
  }
  static DispersionRelation quadratic() {
    return {DispersionFamily::quadratic, 0.0, 0.0, 2.0};
  }
  /// omega = k^2 / (1 + denom_scale k^2), asymptotically constant.
  static DispersionRelation rational_quadratic(double denom_scale) {
    require_positive(denom_scale, "denom_scale");
    return {DispersionFamily::rational_quadratic, denom_scale, 0.0, 0.0};
  }
  /// omega = |k|^exponent with 0 < exponent <= 4, the literal power law used
  /// for exponent sweeps.
  static DispersionRelation power_law(double exponent) {
    if (!std::isfinite(exponent) || exponent <= 0.0 || exponent > 4.0)
      throw std::invalid_argument(
          "power_law exponent must lie in (0, 4], got " +
          std::to_string(exponent));
    return {DispersionFamily::power_law, exponent, 0.0, exponent};
  }

  double omega(double k) const {
    const double a = std::abs(k);
    switch (family_) {
      case DispersionFamily::wave:
        return p1_ * a;
      case DispersionFamily::elastic_string:
        return std::sqrt(p1_ * p1_ * k * k + p2_ * k * k * k * k);
      case DispersionFamily::regularized_boussinesq:
        return p1_ * a / std::sqrt(1.0 + p2_ * k * k);
      case DispersionFamily::klein_gordon:
        return std::sqrt(p1_ * p1_ * k * k + p2_ * p2_);
      case DispersionFamily::sqrt_abs_k:
        return std::sqrt(a);
      case DispersionFamily::water_wave:
        return std::sqrt(a * std::tanh(a));
      case DispersionFamily::quadratic:
        return k * k;
      case DispersionFamily::rational_quadratic:
        return k * k / (1.0 + p1_ * k * k);
      case DispersionFamily::power_law:
        return std::pow(a, p1_);
    }
    return 0.0;  // unreachable
  }

  /// Declared exponent m of omega(k) ~ |k|^m as |k| -> infinity.
  double asymptotic_exponent() const { return exponent_; }

  DispersionFamily family() const { return family_; }

  std::string_view name() const {
    switch (family_) {
      case DispersionFamily::wave: return "wave";
      case DispersionFamily::elastic_string: return "elastic_string";
      case DispersionFamily::regularized_boussinesq:
        return "regularized_boussinesq";
      case DispersionFamily::klein_gordon: return "klein_gordon";
      case DispersionFamily::sqrt_abs_k: return "sqrt_abs_k";
      case DispersionFamily::water_wave: return "water_wave";
      case DispersionFamily::quadratic: return "quadratic";
      case DispersionFamily::rational_quadratic: return "rational_quadratic";
      case DispersionFamily::power_law: return "power_law";
    }
    return "";  // unreachable
  }

  std::string formula() const {
    switch (family_) {
      case DispersionFamily::wave: return "c |k|";
      case DispersionFamily::elastic_string:
        return "sqrt(c^2 k^2 + epsilon k^4)";
      case DispersionFamily::regularized_boussinesq:
        return "c |k| / sqrt(1 + epsilon k^2)";
      case DispersionFamily::klein_gordon:
        return "sqrt(c^2 k^2 + kg_mass^2)";
      case DispersionFamily::sqrt_abs_k: return "sqrt(|k|)";
      case DispersionFamily::water_wave: return "sqrt(k tanh k)";
      case DispersionFamily::quadratic: return "k^2";
      case DispersionFamily::rational_quadratic:
        return "k^2 / (1 + denom_scale k^2)";
      case DispersionFamily::power_law: return "|k|^exponent";
    }
    return "";  // unreachable
  }

  /// Parameter names and values in a stable order (empty for the
  /// parameter-free entries).
  std::vector<std::pair<std::string, double>> params() const {
    switch (family_) {
      case DispersionFamily::wave: return {{"c", p1_}};
      case DispersionFamily::elastic_string:
        return {{"c", p1_}, {"epsilon", p2_}};
      case DispersionFamily::regularized_boussinesq:
        return {{"c", p1_}, {"epsilon", p2_}};
      case DispersionFamily::klein_gordon:
        return {{"c", p1_}, {"kg_mass", p2_}};
      case DispersionFamily::rational_quadratic:
        return {{"denom_scale", p1_}};
      case DispersionFamily::power_law: return {{"exponent", p1_}};
      default: return {};
    }
  }

  /// Construct a catalog entry by name with optional parameter overrides;
  /// unspecified parameters take the catalog defaults below. Unknown names
  /// or parameters throw.
  static DispersionRelation make(
      std::string_view name,
      const std::vector<std::pair<std::string, double>>& overrides = {}) {
    auto get = [&overrides](std::string_view key, double fallback) {
      double value = fallback;
      for (const auto& [k, v] : overrides) {
        if (k == key)
          value = v;
        else if (!known_key(k))
          throw std::invalid_argument("unknown dispersion parameter: " + k);
      }
      return value;
    };
    for (const auto& [k, v] : overrides) {
      (void)v;
      if (!key_valid_for(name, k))
        throw std::invalid_argument("parameter '" + k +
                                    "' does not apply to dispersion '" +
                                    std::string(name) + "'");
    }
    if (name == "wave") return wave(get("c", 1.0));
    if (name == "elastic_string")
      return elastic_string(get("c", 1.0), get("epsilon", 1.0));
    if (name == "regularized_boussinesq")
      return regularized_boussinesq(get("c", 1.0), get("epsilon", 1.0));
    if (name == "klein_gordon")
      return klein_gordon(get("c", 1.0), get("kg_mass", 1.0));
    if (name == "sqrt_abs_k") return sqrt_abs_k();
    if (name == "water_wave") return water_wave();
    if (name == "quadratic") return quadratic();
    if (name == "rational_quadratic")
      return rational_quadratic(get("denom_scale", 1.0 / 3.0));
    if (name == "power_law") return power_law(get("exponent", 2.5));
    throw std::invalid_argument("unknown dispersion relation: " +
                                std::string(name));
  }

  /// All nine catalog entries at their default parameters.
  static std::vector<DispersionRelation> catalog() {
    return {
        wave(1.0),
        elastic_string(1.0, 1.0),
        regularized_boussinesq(1.0, 1.0),
        klein_gordon(1.0, 1.0),
        sqrt_abs_k(),
        water_wave(),
        quadratic(),
        rational_quadratic(1.0 / 3.0),
        power_law(2.5),
    };
  }

private:
  DispersionRelation(DispersionFamily family, double p1, double p2,
                     double exponent)
      : family_(family), p1_(p1), p2_(p2), exponent_(exponent) {}

  static void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0)
      throw std::invalid_argument(std::string(what) +
                                  " must be positive and finite");
  }
  static bool known_key(std::string_view k) {
    return k == "c" || k == "epsilon" || k == "kg_mass" ||
           k == "denom_scale" || k == "exponent";
  }
  static bool key_valid_for(std::string_view name, std::string_view k) {
    if (name == "wave") return k == "c";
    if (name == "elastic_string" || name == "regularized_boussinesq")
      return k == "c" || k == "epsilon";
    if (name == "klein_gordon") return k == "c" || k == "kg_mass";
    if (name == "rational_quadratic") return k == "denom_scale";
    if (name == "power_law") return k == "exponent";
    return false;  // parameter-free entries accept nothing
  }

  DispersionFamily family_;
  double p1_;
  double p2_;
  double exponent_;
};

enum class RegularityVerdict {
  smooth,            ///< a C^n guarantee with n >= 1 holds
  piecewise_smooth,  ///< coefficients decay but only continuity is guaranteed
  fractal_candidate, ///< sublinear bidirectional regime: fractal profiles
  inconclusive,      ///< sublinear unidirectional regime: no guarantee either way
  non_decaying,      ///< asymptotically constant: coefficients do not decay
};

inline std::string_view to_string(RegularityVerdict v) {
  switch (v) {
    case RegularityVerdict::smooth: return "smooth";
    case RegularityVerdict::piecewise_smooth: return "piecewise-smooth";
    case RegularityVerdict::fractal_candidate: return "fractal-candidate";
    case RegularityVerdict::inconclusive: return "inconclusive";
    case RegularityVerdict::non_decaying: return "non-decaying";
  }
  return "";  // unreachable
}

/// What the declared exponent m implies for the driven solution profile.
struct RegularityReport {
  /// Fourier coefficients decay like |k|^-coefficient_decay_exponent
  /// (2m for the bidirectional model, m for the unidirectional one).
  double coefficient_decay_exponent = 0.0;
  /// Largest integer n with u(t,.) in C^n guaranteed by the decay, if any.
  std::optional<int> smoothness_order;
  RegularityVerdict verdict = RegularityVerdict::inconclusive;
};

/// Classify the solution regularity implied by the large-wave-number power
/// law. Bidirectional coefficients decay like |k|^-2m and give C^n for every
/// integer n < 2m - 1; unidirectional ones decay like |k|^-m and give
/// n < m - 1. Sublinear bidirectional media (m < 1) are fractal candidates;
/// m = 0 means the coefficients do not decay at all.
inline RegularityReport classify_regularity(const DispersionRelation& rel,
                                            WaveModel model) {
  const double m = rel.asymptotic_exponent();
  RegularityReport report;
  report.coefficient_decay_exponent =
      (model == WaveModel::bidirectional) ? 2.0 * m : m;
  const double threshold = report.coefficient_decay_exponent - 1.0;
  if (threshold > 0.0) {
    const int n = static_cast<int>(std::ceil(threshold)) - 1;
    if (n >= 0) report.smoothness_order = n;
  }
  if (m == 0.0)
    report.verdict = RegularityVerdict::non_decaying;
  else if (m < 1.0)
    report.verdict = (model == WaveModel::bidirectional)
                         ? RegularityVerdict::fractal_candidate
                         : RegularityVerdict::inconclusive;
  else if (m == 1.0)
    report.verdict = RegularityVerdict::piecewise_smooth;
  else
    report.verdict = RegularityVerdict::smooth;
  return report;
}

}  // namespace lamb
