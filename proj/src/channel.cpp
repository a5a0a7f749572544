#include "sfrcov/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sfrcov::channel {

namespace {
constexpr double kLn10 = std::numbers::ln10;
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);
} // namespace

double gamma_at(double node, const FadingParams& params) {
    return std::pow(10.0, (std::numbers::sqrt2 * params.sigma_z_db * node + params.mu_z_db) / 10.0);
}

double cdf_approx(double g, const FadingParams& params, const quadrature::QuadratureRule& hermite) {
    if (g < 0.0) throw std::invalid_argument("cdf_approx: gain must be non-negative");
    double sum = 0.0;
    for (int n = 0; n < hermite.order; ++n) {
        sum += hermite.weights[n] * kInvSqrtPi *
               (1.0 - std::exp(-g / gamma_at(hermite.nodes[n], params)));
    }
    return sum;
}

double mean_gain(const FadingParams& params) {
    const double s = params.sigma_z_db * kLn10 / 10.0;
    return std::pow(10.0, params.mu_z_db / 10.0) * std::exp(0.5 * s * s);
}

FadingParams normalize(double sigma_z_db) {
    if (sigma_z_db < 0.0) throw std::invalid_argument("normalize: sigma_z must be non-negative");
    return {-sigma_z_db * sigma_z_db * kLn10 / 20.0, sigma_z_db};
}

double sample_gain(const FadingParams& params, SubStream& rng) {
    const double shadow_db = params.mu_z_db + params.sigma_z_db * rng.normal();
    return rng.exponential() * std::pow(10.0, shadow_db / 10.0);
}

} // namespace sfrcov::channel
