#pragma once

// Random generators and independent reference computations shared by the unit
// tests and the acceptance driver. Nothing here calls into the code under test
// except for constructing the value types.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "thermocone/types.hpp"

namespace testsupport {

using thermocone::Dist;
using thermocone::EnergySpectrum;

inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t d) {
    std::exponential_distribution<double> ex(1.0);
    std::vector<double> v(d);
    double s = 0.0;
    for (double& x : v) {
        x = ex(rng);
        s += x;
    }
    for (double& x : v) x /= s;
    return v;
}

inline Dist random_dist(std::mt19937_64& rng, std::size_t d) { return Dist(random_simplex(rng, d)); }

// Distinct energies drawn from [0, 3], first level at 0.
inline EnergySpectrum random_spectrum(std::mt19937_64& rng, std::size_t d, double beta) {
    std::uniform_real_distribution<double> u(0.0, 3.0);
    std::vector<double> e(d, 0.0);
    for (std::size_t i = 1; i < d; ++i) e[i] = u(rng);
    return EnergySpectrum(e, beta);
}

inline std::vector<double> gibbs_weights(const std::vector<double>& e, double beta) {
    std::vector<double> g(e.size());
    double z = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        g[i] = std::exp(-beta * e[i]);
        z += g[i];
    }
    for (double& x : g) x /= z;
    return g;
}

// Thermalises a random subset of levels: the probability of the subset is kept
// and redistributed in proportion to the Gibbs weights. Such maps are thermal
// operations, so the output is always thermomajorised by the input.
inline std::vector<double> partial_thermalise(std::mt19937_64& rng, std::vector<double> p,
                                              const std::vector<double>& g) {
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> lam(0.0, 1.0);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (coin(rng)) subset.push_back(i);
    }
    if (subset.size() < 2) return p;
    double mass = 0.0;
    double gmass = 0.0;
    for (std::size_t i : subset) {
        mass += p[i];
        gmass += g[i];
    }
    const double l = lam(rng);
    for (std::size_t i : subset) p[i] = (1.0 - l) * p[i] + l * mass * g[i] / gmass;
    return p;
}

inline std::vector<double> thermal_descendant(std::mt19937_64& rng, std::vector<double> p,
                                              const std::vector<double>& g, int steps = 3) {
    for (int s = 0; s < steps; ++s) p = partial_thermalise(rng, std::move(p), g);
    double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& x : p) x /= total;
    return p;
}

// Lorenz-type curve evaluation written independently of the library: elbows
// from the ratio-sorted order, evaluated by scanning segments.
inline double curve_at(const std::vector<double>& p, const std::vector<double>& g, double x) {
    std::vector<std::size_t> idx(p.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return p[a] * g[b] > p[b] * g[a]; });
    double cx = 0.0;
    double cy = 0.0;
    for (std::size_t i : idx) {
        if (x <= cx + g[i]) return cy + p[i] * (x - cx) / g[i];
        cx += g[i];
        cy += p[i];
    }
    return 1.0;
}

// Classical majorisation by sorted prefix sums.
inline double prefix_gap(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    double pa = 0.0;
    double pb = 0.0;
    double gap = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        pa += a[k];
        pb += b[k];
        gap = std::min(gap, pa - pb);
    }
    return gap;
}

inline bool classical_majorizes(const std::vector<double>& a, const std::vector<double>& b,
                                double eps = 1e-10) {
    return prefix_gap(a, b) >= -eps;
}

// Thermomajorisation by dense comparison of the independent curves at every
// breakpoint of both.
inline bool thermo_majorizes_ref(const std::vector<double>& p, const std::vector<double>& q,
                                 const std::vector<double>& g, double eps = 1e-10) {
    std::vector<double> xs{0.0, 1.0};
    for (const auto* v : {&p, &q}) {
        std::vector<std::size_t> idx(v->size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return (*v)[a] * g[b] > (*v)[b] * g[a];
        });
        double cx = 0.0;
        for (std::size_t i : idx) {
            cx += g[i];
            xs.push_back(std::min(cx, 1.0));
        }
    }
    for (double x : xs) {
        if (curve_at(p, g, x) < curve_at(q, g, x) - eps) return false;
    }
    return true;
}

inline double linf(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Bound on the number of extreme points of the full catalysable future.
inline std::size_t vertex_count_bound(std::size_t d) {
    const std::size_t h = (d + 1) / 2;
    return h * binomial(d, h);
}

// Dimension-bound ingredients for β = 0 from sorted prefix sums:
// L = {l : Σ_{i<=l} (p↓_i - q↓_i) < 0}, a = min(p↓_1/p↓_m, p↓_{n+1}/p↓_d),
// b = max_{l∈L} p↓_l/p↓_{l+1}, with m = min L and n = max L.
struct PrefixBound {
    double a;
    double b;
    bool empty;
};

inline PrefixBound prefix_dim_bound(std::vector<double> p, std::vector<double> q,
                                    double eps = 1e-10) {
    std::sort(p.begin(), p.end(), std::greater<>());
    std::sort(q.begin(), q.end(), std::greater<>());
    const std::size_t d = p.size();
    std::vector<std::size_t> L;
    double acc = 0.0;
    for (std::size_t l = 1; l < d; ++l) {
        acc += p[l - 1] - q[l - 1];
        if (acc < -eps) L.push_back(l);
    }
    if (L.empty()) return {1.0, 1.0, true};
    const std::size_t m = L.front();
    const std::size_t n = L.back();
    auto ratio = [](double x, double y) {
        if (y == 0.0) return x == 0.0 ? 1.0 : INFINITY;
        return x / y;
    };
    const double a = std::min(ratio(p[0], p[m - 1]), ratio(p[n], p[d - 1]));
    double b = 1.0;
    for (std::size_t l : L) b = std::max(b, ratio(p[l - 1], p[l]));
    return {a, b, false};
}

}  // namespace testsupport
