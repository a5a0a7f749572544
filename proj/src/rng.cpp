#include "sfrcov/rng.hpp"

#include <cmath>
#include <numbers>

namespace sfrcov {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

SubStream::SubStream(std::uint64_t master_seed, std::uint64_t index, std::uint64_t tag) {
    std::uint64_t s = mix64(master_seed + kGolden);
    s = mix64(s ^ (kGolden * (index + 1)));
    s = mix64(s ^ (0xD1B54A32D192ED03ULL * (tag + 1)));
    state_ = s;
}

std::uint64_t SubStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double SubStream::uniform() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SubStream::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double SubStream::exponential() {
    return -std::log(uniform());
}

std::uint64_t SubStream::poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 10.0) {
        // inversion by multiplication
        const double limit = std::exp(-mean);
        double prod = uniform();
        std::uint64_t k = 0;
        while (prod > limit) {
            prod *= uniform();
            ++k;
        }
        return k;
    }
    // Hormann's PTRS transformed rejection
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    while (true) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::fabs(u);
        const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            k * loglam - mean - std::lgamma(k + 1.0)) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

} // namespace sfrcov
