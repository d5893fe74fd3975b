#ifndef PAULIGEO_RNG_HPP
#define PAULIGEO_RNG_HPP

#include <cstdint>

namespace pauligeo {

// Counter-based generator: the value depends only on (seed, position), so
// any partitioning or reordering of the sample range reproduces the same
// stream bit-for-bit.  Mixing function from splitmix64.
inline double counter_uniform(std::uint64_t seed, std::uint64_t position) {
    std::uint64_t z = seed + (position + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    // 53 uniform bits in [0, 1)
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace pauligeo

#endif
