#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace thermocone {

// Monte-Carlo work is split into fixed chunks, each with its own engine seeded
// from (seed, chunk). Results do not depend on how chunks map to threads.
inline constexpr std::size_t kChunkSize = 1024;

inline std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    return std::mt19937_64(seq);
}

// Uniform double in [0,1) built from the top 53 bits.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform point on the probability simplex (Dirichlet(1,...,1)).
inline void sample_simplex(std::mt19937_64& eng, std::vector<double>& out) {
    double total = 0.0;
    for (double& x : out) {
        x = -std::log1p(-uniform01(eng));
        total += x;
    }
    for (double& x : out) x /= total;
}

}  // namespace thermocone
