#include "anisoloc/rng.hpp"

#include <cmath>
#include <numbers>

namespace anisoloc {

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
    return splitmix64(seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::uniform(std::uint64_t counter) const {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t pair_index, int which) const {
    const double u1 = uniform(2 * pair_index);
    const double u2 = uniform(2 * pair_index + 1);
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    return which == 0 ? rad * std::cos(ang) : rad * std::sin(ang);
}

}  // namespace anisoloc
