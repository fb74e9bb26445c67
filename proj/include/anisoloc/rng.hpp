#pragma once

#include <cstdint>

namespace anisoloc {

// Counter-based stream: value i of stream `seed` is splitmix64(seed + (i + 1) * golden).
// Any element can be regenerated independently of the others.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const;
    // Uniform in (0, 1), 53-bit resolution, never 0 or 1.
    double uniform(std::uint64_t counter) const;
    // Standard normal pair from uniforms 2i, 2i+1 (Box-Muller); `which` selects cos/sin branch.
    double normal(std::uint64_t pair_index, int which) const;

private:
    std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t z);

}  // namespace anisoloc
