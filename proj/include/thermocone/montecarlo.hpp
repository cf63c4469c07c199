#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "thermocone/parallel.hpp"
#include "thermocone/rng.hpp"

namespace thermocone {

// Draws `samples` uniform points of the (d-1)-simplex and counts, per counter,
// how many points `classify` flags. `classify(q)` returns std::array<bool, K>.
// Chunk c always uses chunk_engine(seed, c), so the counts are identical for
// serial and parallel execution and for any thread count.
template <std::size_t K, class Classify>
std::array<std::uint64_t, K> count_hits(std::size_t d, std::uint64_t samples, std::uint64_t seed,
                                        Execution exec, Classify&& classify) {
    const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
    std::vector<std::array<std::uint64_t, K>> per_chunk(chunks);

    auto run_chunk = [&](std::uint64_t c) {
        std::mt19937_64 eng = chunk_engine(seed, c);
        const std::uint64_t begin = c * kChunkSize;
        const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kChunkSize);
        std::array<std::uint64_t, K> acc{};
        std::vector<double> q(d);
        for (std::uint64_t s = begin; s < end; ++s) {
            sample_simplex(eng, q);
            const std::array<bool, K> flags = classify(q);
            for (std::size_t k = 0; k < K; ++k) acc[k] += flags[k] ? 1 : 0;
        }
        per_chunk[c] = acc;
    };

    if (exec == Execution::Parallel) {
        const long long n = static_cast<long long>(chunks);
        ExceptionCapture trap;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
        for (long long c = 0; c < n; ++c) trap.run([&] { run_chunk(static_cast<std::uint64_t>(c)); });
        trap.rethrow();
    } else {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    }

    std::array<std::uint64_t, K> total{};
    for (const auto& a : per_chunk) {
        for (std::size_t k = 0; k < K; ++k) total[k] += a[k];
    }
    return total;
}

}  // namespace thermocone
