#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thermocone/types.hpp"

namespace thermocone {

// Gibbs weights approximated as D_i / D with a common denominator.
struct RationalGibbs {
    std::vector<std::int64_t> numerators;
    std::int64_t denominator = 0;
    double delta = 0.0;  // max_i |γ_i - D_i/D|
};

RationalGibbs rationalize(const Dist& gibbs, std::int64_t max_denominator);

// D-dimensional vector holding D_i copies of p_i / D_i.
Dist embed(const Dist& p, const RationalGibbs& rg);

// Classical majorisation a ≻ b via sorted prefix sums.
bool majorizes_classical(std::span<const double> a, std::span<const double> b,
                         double eps = kEpsCmp);

struct OracleReport {
    bool embedded = false;     // verdict on the embedded vectors
    bool direct = false;       // thermo_majorizes on the original vectors
    double delta = 0.0;        // rationalisation error
    double min_gap = 0.0;      // min over elbows of f_p - f_q
    bool inconclusive = false; // curves too close for the rationalisation error
    RationalGibbs gibbs;

    bool agree() const { return embedded == direct; }
};

OracleReport oracle_check(const Dist& p, const Dist& q, const EnergySpectrum& spec,
                          std::int64_t max_denominator);

}  // namespace thermocone
