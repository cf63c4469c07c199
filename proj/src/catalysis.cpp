#include "thermocone/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thermocone/permutations.hpp"

namespace thermocone {

namespace {

constexpr std::size_t kMaxRegionDim = 6;

void require_state(const Dist& p, const EnergySpectrum& spec, const char* what) {
    require_same_size(p.size(), spec.size(), what);
    if (spec.sharp())
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + ": slopes are undefined at beta = inf");
}

}  // namespace

TangentVector tangent_vector(const Dist& p, const EnergySpectrum& spec, std::size_t n,
                             const Order& order) {
    require_state(p, spec, "tangent_vector");
    require_same_size(p.size(), order.size(), "tangent_vector");
    const std::size_t d = p.size();
    if (n < 1 || n > d) throw Error(ErrorCode::InvalidArgument, "tangent_vector: n out of range");
    require_enum_cap(d, kMaxEnumDim, "tangent_vector");

    const SlopeVector sv = beta_order(p, spec);
    const auto& g = spec.gibbs();
    double xn = 0.0;
    double yn = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        xn += g[sv.order[k]];
        yn += p[sv.order[k]];
    }
    const double s = sv.slopes[n - 1];

    std::vector<double> t(d, 0.0);
    if (d == 1) {
        t[0] = 1.0;
    } else {
        t[order[0]] = yn - s * (xn - g[order[0]]);
        double middle = 0.0;
        for (std::size_t i = 1; i + 1 < d; ++i) {
            t[order[i]] = s * g[order[i]];
            middle += g[order[i]];
        }
        t[order[d - 1]] = 1.0 - t[order[0]] - s * middle;
    }
    return {QuasiDist(std::move(t)), n, order, false};
}

Dist project_simplex(const TangentVector& t, const EnergySpectrum& spec) {
    require_same_size(t.entries.size(), spec.size(), "project_simplex");
    const std::size_t d = t.order.size();
    std::vector<double> h(d + 1, 0.0);
    for (std::size_t i = 0; i < d; ++i) h[i + 1] = h[i] + t.entries[t.order[i]];
    return vertex_from_heights(std::move(h), t.order);
}

bool catalytic_condition(const Dist& p, const Dist& q, const EnergySpectrum& spec) {
    require_state(p, spec, "catalytic_condition");
    require_same_size(p.size(), q.size(), "catalytic_condition");
    const SlopeVector sp = beta_order(p, spec);
    const SlopeVector sq = beta_order(q, spec);
    return sp.first() > sq.first() + kEpsCmp && sp.last() < sq.last() - kEpsCmp;
}

bool in_region_Ti(const Dist& q, const Dist& p, const EnergySpectrum& spec, TangentEnd end) {
    require_state(p, spec, "in_region_Ti");
    require_same_size(p.size(), q.size(), "in_region_Ti");
    const std::size_t d = p.size();
    require_enum_cap(d, kMaxRegionDim, "in_region_Ti");
    const std::size_t n = end == TangentEnd::First ? 1 : d;
    const TMCurve fq = tm_curve(q, spec);
    Order pi = identity_order(d);
    do {
        const TangentVector t = tangent_vector(p, spec, n, pi);
        if (curve_dominates(tm_curve(t.entries, spec, pi), fq)) return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
}

SlopeBounds slope_bounds(const Dist& p, const EnergySpectrum& spec) {
    require_state(p, spec, "slope_bounds");
    const SlopeVector sv = beta_order(p, spec);
    return {sv.first(), sv.last()};
}

bool within_first_bound(const Dist& q, const SlopeBounds& b, const EnergySpectrum& spec) {
    const auto& g = spec.gibbs();
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] > b.s_first * g[i] + kEpsCmp) return false;
    }
    return true;
}

bool within_last_bound(const Dist& q, const SlopeBounds& b, const EnergySpectrum& spec) {
    const auto& g = spec.gibbs();
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] < b.s_last * g[i] - kEpsCmp) return false;
    }
    return true;
}

bool catalysable_future_member(const Dist& q, const Dist& p, const EnergySpectrum& spec) {
    require_state(p, spec, "catalysable_future_member");
    if (compare(p, q, spec) != Relation::Incomparable) return false;
    const SlopeBounds b = slope_bounds(p, spec);
    return within_first_bound(q, b, spec) && within_last_bound(q, b, spec);
}

bool catalysable_past_member(const Dist& q, const Dist& p, const EnergySpectrum& spec) {
    require_state(p, spec, "catalysable_past_member");
    if (compare(p, q, spec) != Relation::Incomparable) return false;
    const SlopeBounds b = slope_bounds(p, spec);
    return !within_first_bound(q, b, spec) && !within_last_bound(q, b, spec);
}

Dist c_plus_vertex(const Dist& p, const EnergySpectrum& spec, const Order& order) {
    // Cumulative heights of the first and last tangent vectors along `order`
    // are the lines s_1 x and 1 - s_d (1 - x). Evaluating them directly avoids
    // the cancellation in the tangent entries when slopes are huge.
    require_same_size(p.size(), order.size(), "c_plus_vertex");
    const std::size_t d = p.size();
    const SlopeVector sv = beta_order(p, spec);
    const auto& g = spec.gibbs();
    std::vector<double> h(d + 1, 0.0);
    double x = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        x += g[order[i]];
        const double gx = std::min(x, 1.0);
        h[i + 1] = std::min(sv.first() * gx, 1.0 - sv.last() * (1.0 - gx));
    }
    return vertex_from_heights(std::move(h), order);
}

ConeVertices c_plus_vertices(const Dist& p, const EnergySpectrum& spec, Execution exec) {
    require_state(p, spec, "c_plus_vertices");
    return enumerate_vertices(
        p.size(), [&](const Order& pi) { return c_plus_vertex(p, spec, pi); }, exec);
}

double k_star_from(double a, double b) {
    if (!(a > 1.0 + 1e-12)) return std::numeric_limits<double>::infinity();
    return std::log(b) / std::log(a) + 1.0;
}

namespace {

// Ratio x/y of non-negative slopes with 0/0 read as 1.
double slope_ratio(double x, double y) {
    if (y == 0.0) return x == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return x / y;
}

}  // namespace

DimBound dim_bound(const Dist& p, const Dist& q, const EnergySpectrum& spec) {
    require_state(p, spec, "dim_bound");
    require_same_size(p.size(), q.size(), "dim_bound");
    if (compare(p, q, spec) != Relation::Incomparable)
        throw Error(ErrorCode::NotIncomparable, "dim_bound: p and q are comparable");

    const std::size_t d = p.size();
    const SlopeVector sv = beta_order(p, spec);
    const TMCurve fp = tm_curve(p, spec);
    const TMCurve fq = tm_curve(q, spec);

    std::vector<double> xs;
    for (const Point& e : fp.elbows()) xs.push_back(e.x);
    for (const Point& e : fq.elbows()) xs.push_back(e.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> diff(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) diff[k] = fp.eval(xs[k]) - fq.eval(xs[k]);

    std::size_t first = xs.size();
    std::size_t last = xs.size();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (diff[k] < -kEpsCmp) {
            if (first == xs.size()) first = k;
            last = k;
        }
    }
    if (first == xs.size())
        throw Error(ErrorCode::EmptyL, "dim_bound: f_p >= f_q everywhere");

    DimBound out;
    // Zero crossings of the piecewise-linear difference bracket the set.
    if (first == 0 || diff[first - 1] <= 0.0) {
        out.m = xs[first == 0 ? 0 : first - 1];
    } else {
        const double d0 = diff[first - 1];
        const double d1 = diff[first];
        out.m = xs[first - 1] + d0 * (xs[first] - xs[first - 1]) / (d0 - d1);
    }
    if (last + 1 == xs.size() || diff[last + 1] <= 0.0) {
        out.n = xs[last + 1 == xs.size() ? last : last + 1];
    } else {
        const double d0 = diff[last];
        const double d1 = diff[last + 1];
        out.n = xs[last] + d0 * (xs[last + 1] - xs[last]) / (d0 - d1);
    }

    // Elbow abscissae of f_p: X[k] ends segment k (1-based segments).
    const auto& el = fp.elbows();
    constexpr double snap = 1e-10;
    auto left_slope = [&](double x) {
        if (x <= snap) return sv.first();
        for (std::size_t k = 1; k <= d; ++k) {
            if (x <= el[k].x + snap) return sv.slopes[k - 1];
        }
        return sv.last();
    };
    auto right_slope = [&](double x) {
        if (x >= 1.0 - snap) return sv.last();
        for (std::size_t k = 1; k <= d; ++k) {
            if (x < el[k].x - snap) return sv.slopes[k - 1];
        }
        return sv.last();
    };
    out.a = std::min(slope_ratio(sv.first(), left_slope(out.m)),
                     slope_ratio(right_slope(out.n), sv.last()));

    out.b = 1.0;
    for (std::size_t l = 1; l < d; ++l) {
        const double x = el[l].x;
        if (fp.eval(x) - fq.eval(x) < -kEpsCmp) {
            out.l_prime.push_back(l);
            out.b = std::max(out.b, slope_ratio(sv.slopes[l - 1], sv.slopes[l]));
        }
    }
    out.k_star = k_star_from(out.a, out.b);
    return out;
}

QubitWindows qubit_window(double a, double b, double g) {
    if (!(g > 0.0 && g < 1.0))
        throw Error(ErrorCode::InvalidArgument, "qubit_window: gibbs_r must lie in (0,1)");
    QubitWindows w;
    w.below.gibbs_r = g;
    w.above.gibbs_r = g;
    w.below.lo = g / (a * (1.0 - g) + g);
    w.below.hi = g / (b * (1.0 - g) + g);
    w.above.lo = 1.0 - (1.0 - g) / (b * g + 1.0 - g);
    w.above.hi = 1.0 - (1.0 - g) / (a * g + 1.0 - g);
    return w;
}

QubitWindows qubit_window(const Dist& p, const Dist& q, const EnergySpectrum& spec,
                          double gibbs_r) {
    const DimBound db = dim_bound(p, q, spec);
    return qubit_window(db.a, db.b, gibbs_r);
}

bool verify_catalyst(const Dist& p, const Dist& q, const EnergySpectrum& spec, const Dist& r,
                     const EnergySpectrum& spec_r) {
    require_same_size(p.size(), q.size(), "verify_catalyst");
    const Composite pr = tensor(p, spec, r, spec_r);
    const Composite qr = tensor(q, spec, r, spec_r);
    return thermo_majorizes(pr.state, qr.state, pr.spectrum);
}

EnergySpectrum qubit_catalyst_spectrum(double gibbs_r, double beta) {
    if (!(gibbs_r > 0.0 && gibbs_r < 1.0))
        throw Error(ErrorCode::InvalidArgument, "catalyst gibbs weight must lie in (0,1)");
    return EnergySpectrum::from_gibbs({1.0 - gibbs_r, gibbs_r}, beta);
}

std::vector<double> search_qubit_catalyst(const Dist& p, const Dist& q, const EnergySpectrum& spec,
                                          double gibbs_r, std::size_t grid_n, Execution exec) {
    if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "search_qubit_catalyst: grid_n < 2");
    const EnergySpectrum spec_r = qubit_catalyst_spectrum(gibbs_r, spec.beta());
    const double step = 1.0 / static_cast<double>(grid_n);
    auto ok = [&](std::size_t k) {
        const double t = static_cast<double>(k) * step;
        return verify_catalyst(p, q, spec, Dist({1.0 - t, t}), spec_r);
    };
    std::vector<char> hit(grid_n, 0);
    if (exec == Execution::Parallel) {
        const long long count = static_cast<long long>(grid_n);
        ExceptionCapture trap;
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (long long k = 1; k < count; ++k)
            trap.run([&] { hit[static_cast<std::size_t>(k)] = ok(static_cast<std::size_t>(k)); });
        trap.rethrow();
    } else {
        for (std::size_t k = 1; k < grid_n; ++k) hit[k] = ok(k);
    }
    std::vector<double> out;
    for (std::size_t k = 1; k < grid_n; ++k) {
        if (hit[k]) out.push_back(static_cast<double>(k) * step);
    }
    return out;
}

double renyi_divergence(const Dist& p, const std::vector<double>& g, double alpha) {
    require_same_size(p.size(), g.size(), "renyi_divergence");
    if (std::isnan(alpha) || alpha < 0.0)
        throw Error(ErrorCode::InvalidArgument, "renyi_divergence: alpha must be >= 0");
    const std::size_t d = p.size();
    if (alpha == 0.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            if (p[i] > 0.0) s += g[i];
        }
        return -std::log(s);
    }
    if (alpha == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            if (p[i] > 0.0) s += p[i] * std::log(p[i] / g[i]);
        }
        return s;
    }
    if (std::isinf(alpha)) {
        double m = 0.0;
        for (std::size_t i = 0; i < d; ++i) m = std::max(m, p[i] / g[i]);
        return std::log(m);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        if (p[i] > 0.0) s += std::pow(p[i], alpha) * std::pow(g[i], 1.0 - alpha);
    }
    return std::log(s) / (alpha - 1.0);
}

bool alpha_free_energy_check(const Dist& p, const Dist& q, const EnergySpectrum& spec,
                             const std::vector<double>& alphas) {
    require_same_size(p.size(), q.size(), "alpha_free_energy_check");
    require_same_size(p.size(), spec.size(), "alpha_free_energy_check");
    // F_α = (D_α - log Z)/β, so comparing divergences is equivalent for β > 0
    // and remains meaningful at β = 0.
    for (double a : alphas) {
        if (renyi_divergence(p, spec.gibbs(), a) < renyi_divergence(q, spec.gibbs(), a) - kEpsCmp)
            return false;
    }
    return true;
}

}  // namespace thermocone
