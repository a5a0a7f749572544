#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfrcov/channel.hpp"

namespace sfrcov::model {

/// User service class on the tagged resource block.
enum class Mode { CEU, CCU, RandomUser };

std::string to_string(Mode mode);

/// One base-station tier. Thresholds are linear (dB conversion happens at
/// configuration load).
struct TierConfig {
    double lambda = 1.0;     // BS density per unit area
    double power = 1.0;      // linear transmit power on a cell-center RB
    double alpha = 4.0;      // path-loss exponent, must exceed 2
    int delta = 1;           // frequency reuse factor (>= 1)
    double phi = 1.0;        // cell-edge / cell-center power ratio (>= 1)
    double epsilon = 1.0;    // mean RB occupancy in (0, 1]
    double t_classify = 1.0; // linear SINR threshold separating CCU from CEU
    double t_cover = 1.0;    // linear coverage threshold
};

/// Densities of cells using the tagged RB as a center / edge RB.
struct SubbandDensities {
    double center = 0.0;
    double edge = 0.0;
};

struct NetworkConfig {
    std::vector<TierConfig> tiers;
    // SNR_1 = P_1/sigma^2 in dB; absent means interference-limited (sigma^2 = 0).
    std::optional<double> snr_ref_db;
    channel::FadingParams fading;

    std::size_t k() const { return tiers.size(); }
    double noise_power() const;
    double total_density() const;
    bool equal_alphas() const;
};

/// center = (delta-1)/delta * lambda, edge = lambda/delta.
SubbandDensities subband_densities(const TierConfig& tier);

/// P_Ai = lambda_i / sum_j lambda_j under nearest-BS association.
/// Requires equal path-loss exponents across tiers.
double association_probability(std::size_t i, const NetworkConfig& config);

/// PDF of the serving distance given association with tier i:
/// (2*pi*lambda_i/P_Ai) * r * exp(-pi * sum_j lambda_j * r^2).
double nearest_distance_pdf(double r, std::size_t i, const NetworkConfig& config);

/// Reports every violated invariant (empty means valid). With analytic_path
/// set, additionally requires equal path-loss exponents.
std::vector<std::string> validate(const NetworkConfig& config, bool analytic_path = false);

/// Reduces per-cell user/RB counts (M_c, N_c, M_e, N_e) to the common
/// occupancy ratio, requiring M_c/N_c == M_e/N_e within 1e-9.
double epsilon_from_counts(double m_center, double n_center, double m_edge, double n_edge);

} // namespace sfrcov::model
