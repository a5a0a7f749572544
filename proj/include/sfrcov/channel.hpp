#pragma once

#include "sfrcov/quadrature.hpp"
#include "sfrcov/rng.hpp"

namespace sfrcov::channel {

/// Composite Rayleigh-Lognormal fading: unit-mean exponential fast fading
/// multiplied by 10^(Z/10) shadowing with Z ~ Normal(mu_z, sigma_z^2), both in dB.
struct FadingParams {
    double mu_z_db = 0.0;
    double sigma_z_db = 0.0;
};

/// Per-Hermite-node channel scale gamma(a) = 10^((sqrt(2)*sigma_z*a + mu_z)/10).
double gamma_at(double node, const FadingParams& params);

/// CDF of the composite gain approximated by the Hermite rule:
/// sum_n (w_n/sqrt(pi)) * (1 - exp(-g/gamma(a_n))). Requires g >= 0.
double cdf_approx(double g, const FadingParams& params, const quadrature::QuadratureRule& hermite);

/// Exact first moment: 10^(mu_z/10) * exp((sigma_z*ln10/10)^2 / 2).
double mean_gain(const FadingParams& params);

/// Parameters with mu_z = -sigma_z^2*ln(10)/20 so that mean_gain == 1.
FadingParams normalize(double sigma_z_db);

/// One composite gain draw: Exponential(1) * 10^(Normal(mu_z, sigma_z^2)/10).
double sample_gain(const FadingParams& params, SubStream& rng);

} // namespace sfrcov::channel
