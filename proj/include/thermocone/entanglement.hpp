#pragma once

#include <cstdint>

#include "thermocone/core.hpp"
#include "thermocone/parallel.hpp"
#include "thermocone/volume.hpp"

namespace thermocone {

// Two non-interacting qubits with unit gap: E = (0, 1, 1, 2).
EnergySpectrum two_qubit_spectrum(double beta);

// A diagonal two-qubit state can be entangled by a unitary iff
// 4 p_1 p_4 - (p_2 - p_3)^2 < 0.
double entanglement_witness(const Dist& p);
bool unitary_entanglable(const Dist& p);

// Swaps p_2 and p_3 so that p_2 >= p_3.
Dist canonical_two_qubit(const Dist& p);

// Thermal operations cannot entangle p: its future vertex with β-order
// (2,1,3,4) is not entanglable.
bool in_TN(const Dist& p, double beta);

inline constexpr std::uint64_t kDefaultInteriorSamples = 20000;

// One-sided numerical test: false as soon as a vertex of T_+(p) ∪ C_+(p), or a
// random convex combination of them, can reach an entanglable state.
bool in_CN(const Dist& p, double beta, std::uint64_t interior_samples = kDefaultInteriorSamples,
           std::uint64_t seed = kDefaultSeed);

Dist p_star(double beta);
Dist p_star_star(double beta);

struct EntanglementVolumes {
    VolumeEstimate tn;
    VolumeEstimate cn;
    double ratio = 0.0;
    double ratio_std_error = 0.0;
    // Fraction of sampled states inside T_+(p*) that were classified CN.
    double p_star_agreement = 0.0;
    std::uint64_t p_star_samples = 0;
};

EntanglementVolumes volume_ratio_CN_TN(double beta, std::uint64_t samples,
                                       std::uint64_t seed = kDefaultSeed,
                                       std::uint64_t interior_samples = 0,
                                       Execution exec = Execution::Parallel);

}  // namespace thermocone
