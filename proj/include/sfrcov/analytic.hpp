#pragma once

#include <cstddef>
#include <optional>

#include "sfrcov/model.hpp"
#include "sfrcov/quadrature.hpp"

namespace sfrcov::analytic {

// Orders chosen so that doubling both changes coverage values by well under
// 1e-4 on the reference configurations; recorded in every run manifest.
inline constexpr int kDefaultHermiteOrder = 20;
inline constexpr int kDefaultLegendreOrder = 40;

struct Rules {
    quadrature::QuadratureRule hermite;
    quadrature::QuadratureRule legendre;
};

Rules make_rules(int hermite_order = kDefaultHermiteOrder,
                 int legendre_order = kDefaultLegendreOrder);

struct CoverageQuery {
    model::Mode mode = model::Mode::CEU;
    /// Empty marginalizes over all tiers; an index reports that tier's
    /// coverage conditioned on association with it.
    std::optional<std::size_t> tier{};
    /// Linear threshold applied to every tier (for sweeps).
    std::optional<double> t_cover_override{};
};

/// Everything needed to form the interference coefficient
/// C = t_hat * (gamma(a_n1)/gamma_serving) * (phi_interferer*P_j)/(phi_serving*P_i)
///     * r^(alpha_i - alpha_j).
struct InterferenceKernelArgs {
    double t_hat = 1.0;
    double phi_serving = 1.0;
    double phi_interferer = 1.0;
    std::size_t i = 0;
    std::size_t j = 0;
    double r = 1.0;
};

/// Quadrature can leave probabilities a hair outside [0,1]; results are
/// clamped at the API boundary and the raw values are kept here.
struct Diagnostics {
    double worst_raw = 0.0;
    std::size_t clamp_events = 0;
    void record_raw(double raw);
};

/// Per-pair interference functional: the Hermite mixture over interferer
/// fading of int_1^inf C/(C + u^(alpha_j/2)) du, evaluated as a closed-form
/// tail minus a Gauss-Legendre piece. gamma_serving is the serving-channel
/// scale of the enclosing Hermite node.
double interference_kernel(const InterferenceKernelArgs& args,
                           const model::NetworkConfig& config, const Rules& rules,
                           double gamma_serving);

/// The single-coefficient bracket inside interference_kernel.
double interference_kernel_single(double c_coeff, double alpha,
                                  const quadrature::QuadratureRule& legendre);

/// Adaptive-integration ground truth for the same integral (1e-9 target),
/// free of Gauss-Legendre and of the closed-form tail.
double interference_integral_adaptive(double c_coeff, double alpha);

/// Coverage probability of a cell-edge user at distance r from its serving
/// BS in tier i (served at power phi_i * P_i on the tagged RB).
double conditional_ceu_coverage(double r, std::size_t i, const model::NetworkConfig& config,
                                const Rules& rules, Diagnostics* diag = nullptr);

/// Same with the serving power ratio replaced by 1 (cell-center user).
double conditional_ccu_coverage(double r, std::size_t i, const model::NetworkConfig& config,
                                const Rules& rules, Diagnostics* diag = nullptr);

/// Random user: classified CCU with probability Pc(T_i|r) and then served on
/// a fresh center RB, otherwise served as a CEU on a fresh edge RB.
double conditional_user_coverage(double r, std::size_t i, const model::NetworkConfig& config,
                                 const Rules& rules, Diagnostics* diag = nullptr);

/// Radial average of the selected conditional coverage over the serving
/// distance distribution, mapped to a Gauss-Legendre sum. Requires equal
/// path-loss exponents.
double average_coverage(const CoverageQuery& query, const model::NetworkConfig& config,
                        const Rules& rules, Diagnostics* diag = nullptr);

/// Closed form of the radial average for interference-limited networks
/// (sigma^2 = 0). RandomUser mode requires reuse factor 1 with a common
/// power ratio, where the classification stage drops out.
double average_coverage_nonoise(const CoverageQuery& query, const model::NetworkConfig& config,
                                const Rules& rules, Diagnostics* diag = nullptr);

/// Ground-truth conditional coverage: the outer Hermite mixture is kept but
/// every interference bracket is computed by adaptive integration instead of
/// the Gauss-Legendre/closed-form route.
double oracle_conditional_coverage(double r, std::size_t i, const model::NetworkConfig& config,
                                   model::Mode mode);

} // namespace sfrcov::analytic
