#pragma once

#include <cstddef>
#include <optional>

#include "thermocone/core.hpp"
#include "thermocone/parallel.hpp"

namespace thermocone {

// Σ_i E_i (q_i - p_i); negative when heat leaves the system.
double heat_exchange(const Dist& p, const Dist& q, const EnergySpectrum& spec);

struct CoolingOptimum {
    double heat = 0.0;
    Dist target;
    Order order;
    // True when the minimiser comes from the catalysable vertex set rather than
    // the thermal cone. Such targets are a bound: membership of C_+ does not
    // guarantee that a catalyst exists.
    bool from_catalytic_set = false;
};

// Minimum heat over the future-cone vertices, plus the C_+ vertices when
// `catalytic` is set. Ties keep the first candidate in lexicographic π order,
// future vertices before catalytic ones.
CoolingOptimum optimal_cooling(const Dist& p, const EnergySpectrum& spec, bool catalytic,
                               Execution exec = Execution::Parallel);

struct CoolingReport {
    CoolingOptimum thermal;
    CoolingOptimum catalytic_bound;

    double q_c() const { return thermal.heat; }
    double q_c_catalytic() const { return catalytic_bound.heat; }
};

CoolingReport cooling_report(const Dist& p, const EnergySpectrum& spec,
                             Execution exec = Execution::Parallel);

// E_n = n for n = 0..d-1.
EnergySpectrum equidistant_spectrum(std::size_t d, double beta);

// Largest m in {0..d-1} with Σ_{i=1}^m γ_{d-i+1} <= Σ_{i=1}^j γ_i, for the cold
// equidistant spectrum. `beta_hot` must not exceed the cold β. j is 1-based.
std::size_t m_index(std::size_t j, const EnergySpectrum& cold, double beta_hot);

enum class CriticalBoundary { Down, Up };

// Root in (0, β) of the given critical-temperature boundary (bisection to 1e-8),
// or nullopt when the inequality never changes sign there.
std::optional<double> critical_hot_beta(std::size_t d, double beta, CriticalBoundary which,
                                        std::size_t j = 1);

// Linear-order approximations of the two boundaries.
double critical_hot_beta_linearised(std::size_t d, double beta, CriticalBoundary which,
                                    std::size_t j = 1);

struct CriticalBetas {
    double beta_down;
    double beta_up;
};

// Both boundaries; throws NoRoot if either inequality never binds on (0, β).
CriticalBetas critical_hot_betas(std::size_t d, double beta, bool linearised, std::size_t j = 1);

}  // namespace thermocone
