#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "thermocone/cones.hpp"
#include "thermocone/core.hpp"
#include "thermocone/parallel.hpp"

namespace thermocone {

struct TangentVector {
    QuasiDist entries;
    std::size_t n = 1;  // 1-based segment index the curve touches
    Order order;
    bool projected = false;
};

// Tangent vector t^{(n,π)} of p: slope s_n(p) on every segment, touching f_p on
// its n-th segment. `n` is 1-based.
TangentVector tangent_vector(const Dist& p, const EnergySpectrum& spec, std::size_t n,
                             const Order& order);

// Clamps the curve heights of t into [0,1] (non-decreasing) and rebuilds a Dist.
Dist project_simplex(const TangentVector& t, const EnergySpectrum& spec);

// Strict slope condition s_1(p) > s_1(q) and s_d(p) < s_d(q), biased to false.
bool catalytic_condition(const Dist& p, const Dist& q, const EnergySpectrum& spec);

enum class TangentEnd { First, Last };

// Membership of q in the union over π of the futures of t^{(1,π)} (First) or
// t^{(d,π)} (Last). Enumerates S_d, so d <= 6.
bool in_region_Ti(const Dist& q, const Dist& p, const EnergySpectrum& spec, TangentEnd end);

// Closed form of the same regions: q ∈ T_1(p) iff max_i q_i/γ_i <= s_1(p) and
// q ∈ T_d(p) iff min_i q_i/γ_i >= s_d(p).
struct SlopeBounds {
    double s_first;
    double s_last;
};

SlopeBounds slope_bounds(const Dist& p, const EnergySpectrum& spec);
bool within_first_bound(const Dist& q, const SlopeBounds& b, const EnergySpectrum& spec);
bool within_last_bound(const Dist& q, const SlopeBounds& b, const EnergySpectrum& spec);

bool catalysable_future_member(const Dist& q, const Dist& p, const EnergySpectrum& spec);
bool catalysable_past_member(const Dist& q, const Dist& p, const EnergySpectrum& spec);

// Extreme point of T_+(p) ∪ C_+(p) for the β-order π: elbow heights are the
// pointwise minimum of the t^{(1,π)} and t^{(d,π)} curves, then projected.
Dist c_plus_vertex(const Dist& p, const EnergySpectrum& spec, const Order& order);
ConeVertices c_plus_vertices(const Dist& p, const EnergySpectrum& spec,
                             Execution exec = Execution::Parallel);

struct DimBound {
    double a = 1.0;
    double b = 1.0;
    double k_star = std::numeric_limits<double>::infinity();
    double m = 0.0;  // L = (m, n), abscissae
    double n = 0.0;
    std::vector<std::size_t> l_prime;  // 1-based elbow indices of f_p inside L

    bool catalysis_possible() const { return k_star < std::numeric_limits<double>::infinity(); }
};

DimBound dim_bound(const Dist& p, const Dist& q, const EnergySpectrum& spec);

// k* = log b / log a + 1 for a > 1, +inf otherwise.
double k_star_from(double a, double b);

struct QubitWindow {
    double lo = 1.0;
    double hi = 0.0;
    double gibbs_r = 0.5;

    bool empty() const { return lo > hi; }
    bool contains(double t, double eps = 1e-12) const {
        return !empty() && t >= lo - eps && t <= hi + eps;
    }
};

// Necessary windows for the excited population t of a qubit catalyst: one with
// t <= γ_r and its mirror image with t >= γ_r.
struct QubitWindows {
    QubitWindow below;
    QubitWindow above;

    bool contains(double t, double eps = 1e-12) const {
        return below.contains(t, eps) || above.contains(t, eps);
    }
};

QubitWindows qubit_window(double a, double b, double gibbs_r);
QubitWindows qubit_window(const Dist& p, const Dist& q, const EnergySpectrum& spec,
                          double gibbs_r);

bool verify_catalyst(const Dist& p, const Dist& q, const EnergySpectrum& spec, const Dist& r,
                     const EnergySpectrum& spec_r);

// Qubit catalyst spectrum at the system's β with excited-state Gibbs weight gibbs_r.
EnergySpectrum qubit_catalyst_spectrum(double gibbs_r, double beta);

// Grid points t = k/grid_n, 0 < k < grid_n, for which (1-t, t) is a catalyst.
std::vector<double> search_qubit_catalyst(const Dist& p, const Dist& q, const EnergySpectrum& spec,
                                          double gibbs_r, std::size_t grid_n,
                                          Execution exec = Execution::Parallel);

// Classical Rényi divergence D_α(p||γ); α may be 0 or +inf.
double renyi_divergence(const Dist& p, const std::vector<double>& gibbs, double alpha);

bool alpha_free_energy_check(const Dist& p, const Dist& q, const EnergySpectrum& spec,
                             const std::vector<double>& alphas);

}  // namespace thermocone
