#include "sfrcov/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "sfrcov/channel.hpp"
#include "sfrcov/errors.hpp"

namespace sfrcov::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

double finalize_probability(double raw, Diagnostics* diag) {
    if (!std::isfinite(raw)) throw NumericalError("analytic: non-finite coverage value");
    if (diag) diag->record_raw(raw);
    return std::clamp(raw, 0.0, 1.0);
}

void require_valid(const model::NetworkConfig& config, bool analytic_path) {
    const auto violations = model::validate(config, analytic_path);
    if (!violations.empty()) throw ConfigError("invalid configuration: " + violations.front());
}

// Interference exponent coefficient for serving tier i at one outer Hermite
// node: F = sum_j eps_j * (lambda_c_j * K(phi_int=1) + lambda_e_j * K(phi_int=phi_j)).
double interference_coefficient(double t_hat, double phi_serving, std::size_t i, double r,
                                double gamma_serving, const model::NetworkConfig& config,
                                const Rules& rules) {
    double f = 0.0;
    for (std::size_t j = 0; j < config.k(); ++j) {
        const auto bands = model::subband_densities(config.tiers[j]);
        InterferenceKernelArgs args{t_hat, phi_serving, 1.0, i, j, r};
        double tier_sum = bands.center > 0.0
                              ? bands.center * interference_kernel(args, config, rules, gamma_serving)
                              : 0.0;
        args.phi_interferer = config.tiers[j].phi;
        tier_sum += bands.edge * interference_kernel(args, config, rules, gamma_serving);
        f += config.tiers[j].epsilon * tier_sum;
    }
    return f;
}

// Conditional coverage with an explicit threshold and serving power ratio.
// When `table` is non-null it holds the per-outer-node interference
// coefficients (r-independent under equal path-loss exponents).
double conditional_coverage_impl(double t_hat, double phi_serving, double r, std::size_t i,
                                 const model::NetworkConfig& config, const Rules& rules,
                                 const std::vector<double>* table, Diagnostics* diag) {
    if (!(r > 0.0)) throw std::invalid_argument("conditional coverage: r must be positive");
    if (i >= config.k()) throw std::invalid_argument("conditional coverage: tier index out of range");

    const auto& tier = config.tiers[i];
    const double sigma2 = config.noise_power();
    const double r_alpha = std::pow(r, tier.alpha);

    double sum = 0.0;
    for (int n = 0; n < rules.hermite.order; ++n) {
        const double gamma_n = channel::gamma_at(rules.hermite.nodes[n], config.fading);
        const double noise_factor =
            sigma2 > 0.0
                ? std::exp(-t_hat * r_alpha * sigma2 / (gamma_n * phi_serving * tier.power))
                : 1.0;
        const double f = table ? (*table)[n]
                               : interference_coefficient(t_hat, phi_serving, i, r, gamma_n,
                                                          config, rules);
        sum += rules.hermite.weights[n] * kInvSqrtPi * noise_factor * std::exp(-kPi * r * r * f);
    }
    return finalize_probability(sum, diag);
}

std::vector<double> interference_table(double t_hat, double phi_serving, std::size_t i,
                                       const model::NetworkConfig& config, const Rules& rules) {
    std::vector<double> table(rules.hermite.order);
    for (int n = 0; n < rules.hermite.order; ++n) {
        const double gamma_n = channel::gamma_at(rules.hermite.nodes[n], config.fading);
        table[n] = interference_coefficient(t_hat, phi_serving, i, /*r=*/1.0, gamma_n, config, rules);
    }
    return table;
}

double mixture(double pc_cover, double pc_classify, double pe_cover) {
    return pc_cover * pc_classify + pe_cover * (1.0 - pc_classify);
}

} // namespace

void Diagnostics::record_raw(double raw) {
    const double excess = raw < 0.0 ? -raw : (raw > 1.0 ? raw - 1.0 : 0.0);
    if (excess <= 0.0) return;
    ++clamp_events;
    const double prev = worst_raw < 0.0 ? -worst_raw : (worst_raw > 1.0 ? worst_raw - 1.0 : 0.0);
    if (excess > prev) worst_raw = raw;
}

Rules make_rules(int hermite_order, int legendre_order) {
    return {quadrature::gauss_hermite(hermite_order), quadrature::gauss_legendre(legendre_order)};
}

double interference_kernel_single(double c_coeff, double alpha,
                                  const quadrature::QuadratureRule& legendre) {
    if (!(alpha > 2.0))
        throw NumericalError("interference kernel diverges for alpha <= 2");
    if (c_coeff == 0.0) return 0.0;
    const double total =
        2.0 * kPi * std::pow(c_coeff, 2.0 / alpha) / (alpha * std::sin(kPi * (alpha - 2.0) / alpha));
    double head = 0.0;
    for (int m = 0; m < legendre.order; ++m) {
        const double u = 0.5 * (legendre.nodes[m] + 1.0);
        head += 0.5 * legendre.weights[m] * c_coeff / (c_coeff + std::pow(u, 0.5 * alpha));
    }
    return total - head;
}

double interference_kernel(const InterferenceKernelArgs& args, const model::NetworkConfig& config,
                           const Rules& rules, double gamma_serving) {
    const auto& ti = config.tiers.at(args.i);
    const auto& tj = config.tiers.at(args.j);
    const double power_ratio = (args.phi_interferer * tj.power) / (args.phi_serving * ti.power);
    const double r_factor = std::pow(args.r, ti.alpha - tj.alpha);

    double sum = 0.0;
    for (int n1 = 0; n1 < rules.hermite.order; ++n1) {
        const double gamma_n1 = channel::gamma_at(rules.hermite.nodes[n1], config.fading);
        const double c_coeff = args.t_hat * (gamma_n1 / gamma_serving) * power_ratio * r_factor;
        sum += rules.hermite.weights[n1] * kInvSqrtPi *
               interference_kernel_single(c_coeff, tj.alpha, rules.legendre);
    }
    return sum;
}

double interference_integral_adaptive(double c_coeff, double alpha) {
    if (!(alpha > 2.0))
        throw NumericalError("interference integral diverges for alpha <= 2");
    if (c_coeff == 0.0) return 0.0;
    // u = t^-2 maps the tail onto (0, 1]; the t^(alpha-3) endpoint
    // singularity for alpha < 3 is integrable and well suited to tanh-sinh.
    boost::math::quadrature::tanh_sinh<double> integrator;
    const auto f = [&](double t) {
        return 2.0 * c_coeff * std::pow(t, alpha - 3.0) / (c_coeff * std::pow(t, alpha) + 1.0);
    };
    return integrator.integrate(f, 0.0, 1.0, 1e-11);
}

double conditional_ceu_coverage(double r, std::size_t i, const model::NetworkConfig& config,
                                const Rules& rules, Diagnostics* diag) {
    require_valid(config, false);
    const double t_hat = config.tiers.at(i).t_cover;
    return conditional_coverage_impl(t_hat, config.tiers[i].phi, r, i, config, rules, nullptr, diag);
}

double conditional_ccu_coverage(double r, std::size_t i, const model::NetworkConfig& config,
                                const Rules& rules, Diagnostics* diag) {
    require_valid(config, false);
    const double t_hat = config.tiers.at(i).t_cover;
    return conditional_coverage_impl(t_hat, 1.0, r, i, config, rules, nullptr, diag);
}

double conditional_user_coverage(double r, std::size_t i, const model::NetworkConfig& config,
                                 const Rules& rules, Diagnostics* diag) {
    require_valid(config, false);
    const auto& tier = config.tiers.at(i);
    const double pc_cover =
        conditional_coverage_impl(tier.t_cover, 1.0, r, i, config, rules, nullptr, nullptr);
    const double pc_classify =
        conditional_coverage_impl(tier.t_classify, 1.0, r, i, config, rules, nullptr, nullptr);
    const double pe_cover =
        conditional_coverage_impl(tier.t_cover, tier.phi, r, i, config, rules, nullptr, nullptr);
    return finalize_probability(mixture(pc_cover, pc_classify, pe_cover), diag);
}

double average_coverage(const CoverageQuery& query, const model::NetworkConfig& config,
                        const Rules& rules, Diagnostics* diag) {
    require_valid(config, true);
    if (query.tier && *query.tier >= config.k())
        throw std::invalid_argument("average_coverage: tier index out of range");

    const double lambda_total = config.total_density();
    const std::size_t first = query.tier ? *query.tier : 0;
    const std::size_t last = query.tier ? *query.tier + 1 : config.k();

    double acc = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        const auto& tier = config.tiers[i];
        const double t_hat = query.t_cover_override.value_or(tier.t_cover);

        // r-independent interference tables, one entry per outer Hermite node
        std::vector<double> table_cover;
        std::vector<double> table_classify;
        double phi_serving = 1.0;
        switch (query.mode) {
            case model::Mode::CEU:
                phi_serving = tier.phi;
                table_cover = interference_table(t_hat, tier.phi, i, config, rules);
                break;
            case model::Mode::CCU:
                table_cover = interference_table(t_hat, 1.0, i, config, rules);
                break;
            case model::Mode::RandomUser:
                table_cover = interference_table(t_hat, 1.0, i, config, rules);
                table_classify = interference_table(tier.t_classify, 1.0, i, config, rules);
                break;
        }
        std::vector<double> table_edge;
        if (query.mode == model::Mode::RandomUser)
            table_edge = interference_table(t_hat, tier.phi, i, config, rules);

        for (int m = 0; m < rules.legendre.order; ++m) {
            const double x = rules.legendre.nodes[m];
            const double r = (x + 1.0) / (1.0 - x);
            const double jac = 4.0 * kPi * tier.lambda * rules.legendre.weights[m] * (x + 1.0) /
                               ((1.0 - x) * (1.0 - x) * (1.0 - x));
            const double weight = jac * std::exp(-kPi * lambda_total * r * r);
            if (weight < 1e-300) continue;

            double p;
            if (query.mode == model::Mode::RandomUser) {
                const double pc_cover = conditional_coverage_impl(t_hat, 1.0, r, i, config, rules,
                                                                  &table_cover, nullptr);
                const double pc_classify = conditional_coverage_impl(
                    tier.t_classify, 1.0, r, i, config, rules, &table_classify, nullptr);
                const double pe_cover = conditional_coverage_impl(t_hat, tier.phi, r, i, config,
                                                                  rules, &table_edge, nullptr);
                p = mixture(pc_cover, pc_classify, pe_cover);
            } else {
                p = conditional_coverage_impl(t_hat, phi_serving, r, i, config, rules, &table_cover,
                                              nullptr);
            }
            acc += weight * p;
        }
    }

    if (query.tier) acc /= model::association_probability(*query.tier, config);
    return finalize_probability(acc, diag);
}

double average_coverage_nonoise(const CoverageQuery& query, const model::NetworkConfig& config,
                                const Rules& rules, Diagnostics* diag) {
    require_valid(config, true);
    if (config.noise_power() > 0.0)
        throw UnsupportedError("average_coverage_nonoise: requires an interference-limited "
                               "configuration (no noise)");
    if (query.tier && *query.tier >= config.k())
        throw std::invalid_argument("average_coverage_nonoise: tier index out of range");

    if (query.mode == model::Mode::RandomUser) {
        for (const auto& t : config.tiers) {
            if (t.delta != 1 || t.phi != config.tiers[0].phi)
                throw UnsupportedError(
                    "average_coverage_nonoise: the random-user closed form requires reuse "
                    "factor 1 with a common power ratio");
        }
    }

    const double lambda_total = config.total_density();
    const std::size_t first = query.tier ? *query.tier : 0;
    const std::size_t last = query.tier ? *query.tier + 1 : config.k();

    double acc = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        const auto& tier = config.tiers[i];
        const double t_hat = query.t_cover_override.value_or(tier.t_cover);

        for (int n = 0; n < rules.hermite.order; ++n) {
            const double gamma_n = channel::gamma_at(rules.hermite.nodes[n], config.fading);
            double f = 0.0;
            if (query.mode == model::Mode::RandomUser) {
                // reuse factor 1 with common phi: the power ratios cancel
                InterferenceKernelArgs args{t_hat, 1.0, 1.0, i, 0, 1.0};
                for (std::size_t j = 0; j < config.k(); ++j) {
                    args.j = j;
                    f += config.tiers[j].lambda * config.tiers[j].epsilon *
                         interference_kernel(args, config, rules, gamma_n);
                }
            } else {
                const double phi_serving = query.mode == model::Mode::CEU ? tier.phi : 1.0;
                f = interference_coefficient(t_hat, phi_serving, i, /*r=*/1.0, gamma_n, config,
                                             rules);
            }
            acc += rules.hermite.weights[n] * kInvSqrtPi * tier.lambda / (lambda_total + f);
        }
    }

    if (query.tier) acc /= model::association_probability(*query.tier, config);
    return finalize_probability(acc, diag);
}

double oracle_conditional_coverage(double r, std::size_t i, const model::NetworkConfig& config,
                                   model::Mode mode) {
    require_valid(config, false);
    if (!(r > 0.0)) throw std::invalid_argument("oracle coverage: r must be positive");
    if (i >= config.k()) throw std::invalid_argument("oracle coverage: tier index out of range");

    const auto& tier = config.tiers[i];
    const double sigma2 = config.noise_power();
    // Hermite mixture over the serving channel is kept; only the inner
    // interference expectation is integrated adaptively.
    const auto hermite = quadrature::gauss_hermite(kDefaultHermiteOrder);

    const auto eval = [&](double t_hat, double phi_serving) {
        const double r_alpha = std::pow(r, tier.alpha);
        double sum = 0.0;
        for (int n = 0; n < hermite.order; ++n) {
            const double gamma_n = channel::gamma_at(hermite.nodes[n], config.fading);
            const double noise_factor =
                sigma2 > 0.0
                    ? std::exp(-t_hat * r_alpha * sigma2 / (gamma_n * phi_serving * tier.power))
                    : 1.0;
            double f = 0.0;
            for (std::size_t j = 0; j < config.k(); ++j) {
                const auto& tj = config.tiers[j];
                const auto bands = model::subband_densities(tj);
                const double base =
                    t_hat / gamma_n / (phi_serving * tier.power) * std::pow(r, tier.alpha - tj.alpha);
                double tier_sum = 0.0;
                for (int n1 = 0; n1 < hermite.order; ++n1) {
                    const double gamma_n1 = channel::gamma_at(hermite.nodes[n1], config.fading);
                    const double w1 = hermite.weights[n1] * kInvSqrtPi;
                    if (bands.center > 0.0) {
                        tier_sum += bands.center * w1 *
                                    interference_integral_adaptive(base * gamma_n1 * tj.power,
                                                                   tj.alpha);
                    }
                    tier_sum += bands.edge * w1 *
                                interference_integral_adaptive(base * gamma_n1 * tj.phi * tj.power,
                                                               tj.alpha);
                }
                f += tj.epsilon * tier_sum;
            }
            sum += hermite.weights[n] * kInvSqrtPi * noise_factor * std::exp(-kPi * r * r * f);
        }
        return sum;
    };

    double raw;
    switch (mode) {
        case model::Mode::CEU: raw = eval(tier.t_cover, tier.phi); break;
        case model::Mode::CCU: raw = eval(tier.t_cover, 1.0); break;
        case model::Mode::RandomUser: {
            const double pc_cover = eval(tier.t_cover, 1.0);
            const double pc_classify = eval(tier.t_classify, 1.0);
            const double pe_cover = eval(tier.t_cover, tier.phi);
            raw = mixture(pc_cover, pc_classify, pe_cover);
            break;
        }
        default: throw std::invalid_argument("oracle coverage: unknown mode");
    }
    if (!std::isfinite(raw)) throw NumericalError("oracle coverage: non-finite value");
    return std::clamp(raw, 0.0, 1.0);
}

} // namespace sfrcov::analytic
