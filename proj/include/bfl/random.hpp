#pragma once

#include <cstdint>
#include <random>

namespace bfl {

// Inverse standard normal CDF (Wichura's AS241 rational approximation,
// accurate to ~1e-16 across (0,1)). Library code rather than
// std::normal_distribution so that streams are reproducible across
// standard library implementations.
double normal_quantile(double p);

// splitmix64 output function over seed + (index+1)*golden-gamma. Gives each
// worker column its own well-separated engine seed from one user seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic standard-normal stream: one mt19937_64 draw per variate,
// mapped through normal_quantile. Same seed, same platform-independent
// sequence.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    // uniform on the open interval (0, 1), 53-bit resolution
    double next_uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
    }

    double next() { return normal_quantile(next_uniform()); }

private:
    std::mt19937_64 engine_;
};

}  // namespace bfl
