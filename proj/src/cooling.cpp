#include "thermocone/cooling.hpp"

#include <cmath>

#include "thermocone/catalysis.hpp"
#include "thermocone/cones.hpp"

namespace thermocone {

double heat_exchange(const Dist& p, const Dist& q, const EnergySpectrum& spec) {
    require_same_size(p.size(), q.size(), "heat_exchange");
    require_same_size(p.size(), spec.size(), "heat_exchange");
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) h += spec.energies()[i] * (q[i] - p[i]);
    return h;
}

CoolingOptimum optimal_cooling(const Dist& p, const EnergySpectrum& spec, bool catalytic,
                               Execution exec) {
    require_enum_cap(p.size(), kMaxEnumDim, "optimal_cooling");
    CoolingOptimum best;
    bool have = false;
    auto scan = [&](const ConeVertices& cv, bool from_cat) {
        for (const ConeVertex& v : cv) {
            const double h = heat_exchange(p, v.vertex, spec);
            if (!have || h < best.heat) {
                best = {h, v.vertex, v.order, from_cat};
                have = true;
            }
        }
    };
    scan(future_cone_vertices(p, spec, exec), false);
    if (catalytic) scan(c_plus_vertices(p, spec, exec), true);
    return best;
}

CoolingReport cooling_report(const Dist& p, const EnergySpectrum& spec, Execution exec) {
    return {optimal_cooling(p, spec, false, exec), optimal_cooling(p, spec, true, exec)};
}

EnergySpectrum equidistant_spectrum(std::size_t d, double beta) {
    std::vector<double> e(d);
    for (std::size_t n = 0; n < d; ++n) e[n] = static_cast<double>(n);
    return EnergySpectrum(std::move(e), beta);
}

namespace {

void require_equidistant(const EnergySpectrum& spec) {
    for (std::size_t n = 0; n < spec.size(); ++n) {
        if (spec.energies()[n] != static_cast<double>(n))
            throw Error(ErrorCode::InvalidArgument, "m_index: spectrum must be E_n = n");
    }
}

// (1 - e^{-kx}) / (1 - e^{-x}), with the x -> 0 limit k.
double geometric(double k, double x) {
    if (x == 0.0) return k;
    return std::expm1(-k * x) / std::expm1(-x);
}

}  // namespace

std::size_t m_index(std::size_t j, const EnergySpectrum& cold, double beta_hot) {
    require_equidistant(cold);
    const std::size_t d = cold.size();
    if (j < 1 || j > d) throw Error(ErrorCode::InvalidArgument, "m_index: j out of range");
    if (!(beta_hot >= 0.0) || beta_hot > cold.beta())
        throw Error(ErrorCode::InvalidArgument, "m_index: need 0 <= beta_hot <= beta");
    const auto& g = cold.gibbs();
    double gamma_j = 0.0;
    for (std::size_t i = 0; i < j; ++i) gamma_j += g[i];
    std::size_t m = 0;
    double tail = 0.0;
    for (std::size_t k = 1; k < d; ++k) {
        tail += g[d - k];
        if (tail <= gamma_j + kEpsSum) m = k;
        else break;
    }
    return m;
}

namespace {

double boundary_fn(std::size_t d, double beta, CriticalBoundary which, std::size_t m, double bh) {
    const double dd = static_cast<double>(d);
    const double a = geometric(dd, beta);
    const double lhs = std::exp((beta - bh) * (dd - 1.0));
    if (which == CriticalBoundary::Down)
        return lhs - a * geometric(static_cast<double>(m + 1), bh);
    return a * geometric(static_cast<double>(m), bh) - lhs;
}

void require_cooling_args(std::size_t d, double beta) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "critical_hot_betas: need d >= 2");
    if (!(beta > 0.0) || std::isinf(beta))
        throw Error(ErrorCode::InvalidArgument, "critical_hot_betas: need finite beta > 0");
}

}  // namespace

std::optional<double> critical_hot_beta(std::size_t d, double beta, CriticalBoundary which,
                                        std::size_t j) {
    require_cooling_args(d, beta);
    const std::size_t m = m_index(j, equidistant_spectrum(d, beta), 0.0);
    double lo = 0.0;
    double hi = beta;
    double flo = boundary_fn(d, beta, which, m, lo);
    const double fhi = boundary_fn(d, beta, which, m, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) return std::nullopt;
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        const double fm = boundary_fn(d, beta, which, m, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double critical_hot_beta_linearised(std::size_t d, double beta, CriticalBoundary which,
                                    std::size_t j) {
    require_cooling_args(d, beta);
    const double m = static_cast<double>(m_index(j, equidistant_spectrum(d, beta), 0.0));
    const double dd = static_cast<double>(d);
    const double c = dd * (3.0 * beta * (dd - 1.0) - 2.0);
    if (which == CriticalBoundary::Down) return (c * (m + 1.0) + 2.0) / (2.0 * dd - m - 2.0);
    return (c * m + 2.0) / (2.0 * dd - m - 1.0);
}

CriticalBetas critical_hot_betas(std::size_t d, double beta, bool linearised, std::size_t j) {
    if (linearised)
        return {critical_hot_beta_linearised(d, beta, CriticalBoundary::Down, j),
                critical_hot_beta_linearised(d, beta, CriticalBoundary::Up, j)};
    const auto down = critical_hot_beta(d, beta, CriticalBoundary::Down, j);
    const auto up = critical_hot_beta(d, beta, CriticalBoundary::Up, j);
    if (!down || !up)
        throw Error(ErrorCode::NoRoot, "critical_hot_betas: an inequality never binds on (0, beta)");
    return {*down, *up};
}

}  // namespace thermocone
