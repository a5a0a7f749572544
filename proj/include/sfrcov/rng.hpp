#pragma once

#include <cstdint>

namespace sfrcov {

/// Counter-derived random substream. Every (master seed, index, tag) triple
/// names an independent stream, so trial-level randomness is a pure function
/// of those values and never depends on scheduling or worker count.
class SubStream {
public:
    SubStream(std::uint64_t master_seed, std::uint64_t index, std::uint64_t tag);

    std::uint64_t next_u64();

    /// Uniform double in (0, 1]; never returns 0, safe under log().
    double uniform();

    /// Standard normal (Box-Muller, one value per call).
    double normal();

    /// Exponential with mean 1.
    double exponential();

    /// Poisson with the given mean (inversion below mean 10, PTRS rejection above).
    std::uint64_t poisson(double mean);

private:
    std::uint64_t state_;
};

} // namespace sfrcov
