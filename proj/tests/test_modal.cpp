#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "lamb/modal.hpp"
#include "lamb/oracle.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using lamb::DispersionRelation;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("modal coefficients at the resonant frequency") {
  const auto osc = lamb::default_oscillator();  // sigma = 1
  const auto mc = lamb::modal_coefficients(osc, 1.0);
  // gap vanishes, D = 4 sigma^2 beta^2 = 0.04
  REQUIRE(mc.p == 0.0);
  REQUIRE_THAT(mc.denom, WithinRel(0.04, 1e-12));
  REQUIRE_THAT(mc.q, WithinRel(2.0 * 0.1 * std::sqrt(0.99) / 0.04, 1e-12));
  REQUIRE_THAT(mc.q, WithinAbs(4.97494, 1e-5));
  REQUIRE_THAT(mc.r, WithinRel(5.0, 1e-12));
}

TEST_CASE("modal coefficients at zero frequency") {
  const auto osc = lamb::default_oscillator();
  const auto mc = lamb::modal_coefficients(osc, 0.0);
  REQUIRE(mc.q == 0.0);
  REQUIRE(mc.s == 0.0);
  REQUIRE_THAT(mc.p, WithinRel(osc.damped_frequency(), 1e-12));  // vs/sigma^2
  REQUIRE_THAT(mc.r, WithinRel(osc.damping(), 1e-12));
}

TEST_CASE("modal coefficients high-frequency limits") {
  const auto osc = lamb::default_oscillator();
  const double w = 1e6;
  const auto mc = lamb::modal_coefficients(osc, w);
  REQUIRE_THAT(mc.p * w * w, WithinRel(-osc.damped_frequency(), 1e-4));
  REQUIRE_THAT(mc.r * w * w, WithinRel(osc.damping(), 1e-4));
  REQUIRE_THAT(mc.q * w * w * w,
               WithinRel(2.0 * osc.damping() * osc.damped_frequency(), 1e-4));
}

TEST_CASE("coefficient identities against the shared denominator") {
  for (double sigma : {0.7, 1.0, 2.5})
    for (double beta : {0.05, 0.4}) {
      if (beta >= sigma) continue;
      const lamb::OscillatorParams osc(-0.5, beta, sigma, 1.0);
      const double vs = osc.damped_frequency();
      const double s2 = sigma * sigma;
      for (double w : {0.0, 0.3, sigma, 3.0, 150.0}) {
        const auto mc = lamb::modal_coefficients(osc, w);
        REQUIRE(mc.denom > 0.0);
        const double w2 = w * w;
        auto matches = [](double lhs, double rhs) {
          if (rhs == 0.0) return lhs == 0.0;
          return std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs);
        };
        REQUIRE(matches(mc.p * mc.denom, vs * (s2 - w2)));
        REQUIRE(matches(mc.q * mc.denom, 2.0 * w * beta * vs));
        REQUIRE(matches(mc.r * mc.denom, beta * (s2 + w2)));
        REQUIRE(matches(mc.s * mc.denom, w * (2.0 * beta * beta - s2 + w2)));
      }
    }
}

TEST_CASE("mean mode closed form") {
  const auto osc = lamb::default_oscillator();
  SECTION("starts at zero") {
    REQUIRE(lamb::a0_bidirectional(osc, 0.0) == 0.0);
  }
  SECTION("long-time limit C varsigma / (pi sigma^2)") {
    const double limit = -0.5 * std::sqrt(0.99) / kPi;
    REQUIRE_THAT(lamb::a0_bidirectional(osc, 200.0), WithinRel(limit, 1e-8));
    REQUIRE_THAT(limit, WithinAbs(-0.1583572, 1e-6));
  }
  SECTION("matches the quadrature of the displacement history") {
    REQUIRE_THAT(lamb::a0_bidirectional(osc, 5.0),
                 WithinAbs(lamb::trapezoid_integral_of_h(osc, 5.0) / kPi,
                           1e-9));
  }
}

TEST_CASE("cosine coefficients start from rest") {
  const auto osc = lamb::default_oscillator();
  const double step = 1e-6;
  for (const auto& rel : DispersionRelation::catalog())
    for (int k = 1; k <= 64; ++k) {
      REQUIRE(lamb::ak_bidirectional(osc, rel, k, 0.0) == 0.0);
      const double slope = (lamb::ak_bidirectional(osc, rel, k, step) -
                            lamb::ak_bidirectional(osc, rel, k, -step)) /
                           (2.0 * step);
      REQUIRE(std::abs(slope) < 1e-6);
    }
}

TEST_CASE("sigma-frequency variant violates the zero initial slope") {
  const auto osc = lamb::default_oscillator();
  const auto rel = DispersionRelation::wave(1.0);
  const double step = 1e-6;
  double worst = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const double slope =
        (lamb::ak_bidirectional_sigma_variant(osc, rel, k, step) -
         lamb::ak_bidirectional_sigma_variant(osc, rel, k, -step)) /
        (2.0 * step);
    worst = std::max(worst, std::abs(slope));
  }
  REQUIRE(worst > 1e-6);  // the variant fails the initial-condition check
}

TEST_CASE("cosine coefficient matches the RK4 oracle") {
  const auto osc = lamb::default_oscillator();
  const auto rel = DispersionRelation::wave(1.0);
  const auto st = lamb::rk4_bidirectional_mode(osc, rel.omega(2.0), 1.0, 1e-4);
  REQUIRE_THAT(lamb::ak_bidirectional(osc, rel, 2, 1.0),
               WithinAbs(st.value, 1e-8));
}

TEST_CASE("unidirectional pair matches the first-order mode oracle") {
  const auto osc = lamb::default_oscillator();
  const auto rel = DispersionRelation::wave(1.0);
  const double w = rel.omega(3.0);
  const auto mode = lamb::rk4_unidirectional_mode(osc, w, 2.0, 1e-4);
  const auto uni = lamb::modal_unidirectional(osc, rel, 3, 2.0);
  const double prefactor = 2.0 * osc.wave_speed();
  REQUIRE_THAT(prefactor * uni.a, WithinAbs(2.0 * mode.real(), 1e-8));
  REQUIRE_THAT(prefactor * uni.b, WithinAbs(-2.0 * mode.imag(), 1e-8));
}

TEST_CASE("unidirectional prefactor tracks the wave speed") {
  const lamb::OscillatorParams osc(-0.5, 0.1, 1.0, 2.0);  // c = 2
  const double w = 3.0;
  const auto mode = lamb::rk4_unidirectional_mode(osc, w, 2.0, 1e-4);
  const auto uni = lamb::unidirectional_mode(osc, w, 2.0);
  REQUIRE_THAT(4.0 * uni.a, WithinAbs(2.0 * mode.real(), 1e-8));
  REQUIRE_THAT(4.0 * uni.b, WithinAbs(-2.0 * mode.imag(), 1e-8));
}

TEST_CASE("oracle equivalence across relations, modes and times") {
  const auto osc = lamb::default_oscillator();
  for (const char* name : {"wave", "sqrt_abs_k", "quadratic"}) {
    const auto rel = DispersionRelation::make(name);
    for (int k : {1, 5, 17})
      for (double t : {1.0, 5.0}) {
        const double w = rel.omega(static_cast<double>(k));
        const double dt = lamb::default_mode_dt(w, osc.natural_frequency());
        const auto st = lamb::rk4_bidirectional_mode(osc, w, t, dt);
        REQUIRE_THAT(lamb::ak_bidirectional(osc, rel, k, t),
                     WithinAbs(st.value, 1e-7));
        const auto mode = lamb::rk4_unidirectional_mode(osc, w, t, dt);
        const auto uni = lamb::modal_unidirectional(osc, rel, k, t);
        const double prefactor = 2.0 * osc.wave_speed();
        REQUIRE_THAT(prefactor * uni.a, WithinAbs(2.0 * mode.real(), 1e-7));
        REQUIRE_THAT(prefactor * uni.b, WithinAbs(-2.0 * mode.imag(), 1e-7));
      }
  }
}

TEST_CASE("unidirectional coefficients start from rest") {
  const auto osc = lamb::default_oscillator();
  const double step = 1e-6;
  for (const auto& rel : DispersionRelation::catalog())
    for (int k : {1, 2, 7, 33, 64}) {
      const auto at0 = lamb::modal_unidirectional(osc, rel, k, 0.0);
      REQUIRE(at0.a == 0.0);
      REQUIRE(at0.b == 0.0);
      const auto plus = lamb::modal_unidirectional(osc, rel, k, step);
      const auto minus = lamb::modal_unidirectional(osc, rel, k, -step);
      REQUIRE(std::abs((plus.a - minus.a) / (2.0 * step)) < 1e-6);
      REQUIRE(std::abs((plus.b - minus.b) / (2.0 * step)) < 1e-6);
    }
}

TEST_CASE("unidirectional mean mode") {
  const auto osc = lamb::default_oscillator();
  SECTION("half the bidirectional one at unit wave speed") {
    for (double t : {0.0, 1.0, 4.0, 20.0})
      REQUIRE_THAT(lamb::a0_unidirectional(osc, t),
                   WithinAbs(lamb::a0_bidirectional(osc, t) / 2.0, 1e-15));
  }
  SECTION("scales with 1/(2c) for other wave speeds") {
    const lamb::OscillatorParams fast(-0.5, 0.1, 1.0, 2.0);
    for (double t : {0.5, 3.0})
      REQUIRE_THAT(lamb::a0_unidirectional(fast, t) * 4.0,
                   WithinRel(lamb::a0_bidirectional(fast, t), 1e-14));
  }
  SECTION("long-time limit") {
    REQUIRE_THAT(lamb::a0_unidirectional(osc, 200.0),
                 WithinAbs(-0.0791786, 1e-7));
  }
}

TEST_CASE("classical-medium coefficients are -2c times the dispersive ones") {
  // transcription of the wave-speed cosine coefficient formula, with the
  // denominator written through c^2 k^2 rather than omega
  const lamb::OscillatorParams osc(-0.5, 0.1, 1.0, 2.0);
  const auto rel = DispersionRelation::wave(osc.wave_speed());
  const double c = osc.wave_speed();
  const double beta = osc.damping();
  const double vs = osc.damped_frequency();
  const double s2 = 1.0;
  for (int k : {1, 2, 3, 10, 25})
    for (double t : {0.5, 2.0, 7.0}) {
      const double ck = c * k;
      const double denom =
          (s2 - ck * ck) * (s2 - ck * ck) + 4.0 * ck * ck * beta * beta;
      const double pk = vs * (s2 - ck * ck) / denom;
      const double qk = 2.0 * ck * beta * vs / denom;
      const double rk = beta * (s2 + ck * ck) / denom;
      const double classical =
          -2.0 * c * osc.amplitude() / kPi *
          (pk * std::cos(ck * t) + qk * std::sin(ck * t) -
           std::exp(-beta * t) *
               (pk * std::cos(vs * t) + rk * std::sin(vs * t)));
      REQUIRE_THAT(lamb::classical_forcing_scale(osc) *
                       lamb::ak_bidirectional(osc, rel, k, t),
                   WithinRel(classical, 1e-12));
    }
}

TEST_CASE("decay laws at large wave number") {
  const auto osc = lamb::default_oscillator();
  for (const char* name : {"wave", "sqrt_abs_k", "quadratic"}) {
    const auto rel = DispersionRelation::make(name);
    double base_bi = 0.0, max_bi = 0.0, base_u = 0.0, max_u = 0.0;
    for (int k = 100; k <= 1000; k += 3) {
      const double w = rel.omega(static_cast<double>(k));
      const double bi = std::abs(lamb::ak_bidirectional(osc, rel, k, 5.0)) *
                        w * w;
      const auto uni = lamb::modal_unidirectional(osc, rel, k, 5.0);
      const double u = std::max(std::abs(uni.a), std::abs(uni.b)) * w;
      if (k == 100) {
        base_bi = bi;
        base_u = u;
      }
      max_bi = std::max(max_bi, bi);
      max_u = std::max(max_u, u);
    }
    REQUIRE(max_bi <= 10.0 * base_bi);
    REQUIRE(max_u <= 10.0 * base_u);
  }
}

TEST_CASE("modal argument validation") {
  const auto osc = lamb::default_oscillator();
  const auto rel = DispersionRelation::wave(1.0);
  REQUIRE_THROWS_AS(lamb::ak_bidirectional(osc, rel, 0, 1.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lamb::modal_unidirectional(osc, rel, -1, 1.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(lamb::modal_coefficients(osc, -1.0),
                    std::invalid_argument);
}
