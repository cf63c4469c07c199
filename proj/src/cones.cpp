#include "thermocone/cones.hpp"

#include <algorithm>
#include <cmath>

#include "thermocone/permutations.hpp"

namespace thermocone {

Dist vertex_from_heights(std::vector<double> heights, const Order& order) {
    require_same_size(heights.size(), order.size() + 1, "vertex_from_heights");
    double running = 0.0;
    for (double& h : heights) {
        h = std::clamp(h, 0.0, 1.0);
        running = std::max(running, h);
        h = running;
    }
    heights.front() = 0.0;
    heights.back() = 1.0;
    std::vector<double> q(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) q[order[i]] = heights[i + 1] - heights[i];
    return Dist(std::move(q));
}

Dist future_cone_vertex(const Dist& p, const EnergySpectrum& spec, const Order& order) {
    require_same_size(p.size(), spec.size(), "future_cone_vertex");
    require_same_size(p.size(), order.size(), "future_cone_vertex");
    const TMCurve fp = tm_curve(p, spec);
    std::vector<double> h(order.size() + 1, 0.0);
    double x = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        x += spec.gibbs()[order[i]];
        h[i + 1] = fp.eval(std::min(x, 1.0));
    }
    return vertex_from_heights(std::move(h), order);
}

namespace {

bool same_vertex(const Dist& a, const Dist& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > kDedupTol) return false;
    }
    return true;
}

}  // namespace

ConeVertices dedup_vertices(const ConeVertices& all) {
    ConeVertices out;
    for (const ConeVertex& v : all) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const ConeVertex& u) {
            return same_vertex(u.vertex, v.vertex);
        });
        if (!seen) out.push_back(v);
    }
    return out;
}

ConeVertices enumerate_vertices(std::size_t d, const std::function<Dist(const Order&)>& make,
                                Execution exec) {
    require_enum_cap(d, kMaxEnumDim, "vertex enumeration");
    const std::size_t n = factorial(d);
    ConeVertices all(n);
    if (exec == Execution::Parallel) {
        const long long count = static_cast<long long>(n);
        ExceptionCapture trap;
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (long long k = 0; k < count; ++k) {
            trap.run([&] {
                Order pi = nth_permutation(d, static_cast<std::size_t>(k));
                Dist v = make(pi);
                all[static_cast<std::size_t>(k)] = {std::move(pi), std::move(v)};
            });
        }
        trap.rethrow();
    } else {
        Order pi = identity_order(d);
        std::size_t k = 0;
        do {
            all[k++] = {pi, make(pi)};
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    return dedup_vertices(all);
}

ConeVertices future_cone_vertices(const Dist& p, const EnergySpectrum& spec, Execution exec) {
    require_same_size(p.size(), spec.size(), "future_cone_vertices");
    const TMCurve fp = tm_curve(p, spec);
    const auto& g = spec.gibbs();
    return enumerate_vertices(
        p.size(),
        [&](const Order& pi) {
            std::vector<double> h(pi.size() + 1, 0.0);
            double x = 0.0;
            for (std::size_t i = 0; i < pi.size(); ++i) {
                x += g[pi[i]];
                h[i + 1] = fp.eval(std::min(x, 1.0));
            }
            return vertex_from_heights(std::move(h), pi);
        },
        exec);
}

Relation classify(const Dist& p, const Dist& q, const EnergySpectrum& spec) {
    return compare(p, q, spec);
}

}  // namespace thermocone
