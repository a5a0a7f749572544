#include "sfrcov/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sfrcov/errors.hpp"

namespace sfrcov::model {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::CEU: return "CEU";
        case Mode::CCU: return "CCU";
        case Mode::RandomUser: return "RandomUser";
    }
    return "?";
}

double NetworkConfig::noise_power() const {
    if (!snr_ref_db) return 0.0;
    if (tiers.empty()) throw ConfigError("noise_power: no tiers configured");
    return tiers[0].power / std::pow(10.0, *snr_ref_db / 10.0);
}

double NetworkConfig::total_density() const {
    double sum = 0.0;
    for (const auto& t : tiers) sum += t.lambda;
    return sum;
}

bool NetworkConfig::equal_alphas() const {
    for (const auto& t : tiers) {
        if (t.alpha != tiers[0].alpha) return false;
    }
    return true;
}

SubbandDensities subband_densities(const TierConfig& tier) {
    const double d = static_cast<double>(tier.delta);
    return {(d - 1.0) / d * tier.lambda, tier.lambda / d};
}

double association_probability(std::size_t i, const NetworkConfig& config) {
    if (i >= config.k()) throw std::invalid_argument("association_probability: tier index out of range");
    if (!config.equal_alphas())
        throw UnsupportedError(
            "association_probability: unequal path-loss exponents have no closed association law");
    return config.tiers[i].lambda / config.total_density();
}

double nearest_distance_pdf(double r, std::size_t i, const NetworkConfig& config) {
    if (r < 0.0) throw std::invalid_argument("nearest_distance_pdf: distance must be non-negative");
    const double p_a = association_probability(i, config);
    const double lambda_total = config.total_density();
    return 2.0 * std::numbers::pi * config.tiers[i].lambda / p_a * r *
           std::exp(-std::numbers::pi * lambda_total * r * r);
}

std::vector<std::string> validate(const NetworkConfig& config, bool analytic_path) {
    std::vector<std::string> v;
    if (config.tiers.empty()) {
        v.push_back("config: at least one tier is required");
        return v;
    }
    for (std::size_t i = 0; i < config.k(); ++i) {
        const auto& t = config.tiers[i];
        const std::string tag = "tier " + std::to_string(i + 1) + ": ";
        if (!(t.lambda > 0.0)) v.push_back(tag + "lambda must be positive");
        if (!(t.power > 0.0)) v.push_back(tag + "power must be positive");
        if (!(t.alpha > 2.0))
            v.push_back(tag + "alpha must exceed 2 for interference convergence");
        if (t.delta < 1) v.push_back(tag + "delta must be a positive integer");
        if (!(t.phi >= 1.0)) v.push_back(tag + "phi must be at least 1");
        if (!(t.epsilon > 0.0 && t.epsilon <= 1.0))
            v.push_back(tag + "epsilon violates the (0, 1] occupancy bound");
        if (!(t.t_classify > 0.0)) v.push_back(tag + "t_classify must be positive");
        if (!(t.t_cover > 0.0)) v.push_back(tag + "t_cover must be positive");
    }
    if (!(config.fading.sigma_z_db >= 0.0))
        v.push_back("fading: sigma_z must be non-negative");
    if (analytic_path && !config.equal_alphas())
        v.push_back("config: the analytic path requires equal path-loss exponents across tiers");
    return v;
}

double epsilon_from_counts(double m_center, double n_center, double m_edge, double n_edge) {
    if (!(n_center > 0.0) || !(n_edge > 0.0))
        throw std::invalid_argument("epsilon_from_counts: RB counts must be positive");
    if (m_center < 0.0 || m_edge < 0.0)
        throw std::invalid_argument("epsilon_from_counts: user counts must be non-negative");
    const double ratio_center = m_center / n_center;
    const double ratio_edge = m_edge / n_edge;
    if (std::fabs(ratio_center - ratio_edge) > 1e-9)
        throw std::invalid_argument(
            "epsilon_from_counts: center and edge user/RB ratios must agree");
    return ratio_center;
}

} // namespace sfrcov::model
