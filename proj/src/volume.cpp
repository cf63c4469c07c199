#include "thermocone/volume.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "thermocone/format.hpp"
#include "thermocone/montecarlo.hpp"

namespace thermocone {

Region parse_region(const std::string& name) {
    if (name == "C+") return Region::CatalysableFuture;
    if (name == "C-") return Region::CatalysablePast;
    if (name == "T+") return Region::Future;
    if (name == "T-") return Region::Past;
    if (name == "T0") return Region::Incomparable;
    throw Error(ErrorCode::InvalidArgument, "unknown region '" + name + "' (use C+, C-, T+, T-, T0)");
}

std::string to_string(Region r) {
    switch (r) {
    case Region::CatalysableFuture: return "C+";
    case Region::CatalysablePast: return "C-";
    case Region::Future: return "T+";
    case Region::Past: return "T-";
    case Region::Incomparable: return "T0";
    }
    return "?";
}

VolumeEstimate make_estimate(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed) {
    VolumeEstimate v;
    v.hits = hits;
    v.samples = samples;
    v.seed = seed;
    v.value = samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0;
    v.std_error = samples ? std::sqrt(v.value * (1.0 - v.value) / static_cast<double>(samples)) : 0.0;
    return v;
}

bool is_zero_volume(const VolumeEstimate& v) {
    return v.hits == 0 || v.value < 3.0 * v.std_error;
}

RegionTester::RegionTester(const Dist& p, const EnergySpectrum& spec)
    : p_(p), spec_(spec), fp_(tm_curve(p, spec)), bounds_{0.0, 0.0} {
    require_same_size(p.size(), spec.size(), "RegionTester");
    if (!spec.sharp()) bounds_ = slope_bounds(p, spec);
}

bool RegionTester::contains(Region region, const Dist& q) const {
    const TMCurve fq = tm_curve(q, spec_);
    const bool pq = curve_dominates(fp_, fq);
    const bool qp = curve_dominates(fq, fp_);
    switch (region) {
    case Region::Future: return pq;
    case Region::Past: return qp && !pq;
    case Region::Incomparable: return !pq && !qp;
    case Region::CatalysableFuture:
        return !pq && !qp && within_first_bound(q, bounds_, spec_) &&
               within_last_bound(q, bounds_, spec_);
    case Region::CatalysablePast:
        return !pq && !qp && !within_first_bound(q, bounds_, spec_) &&
               !within_last_bound(q, bounds_, spec_);
    }
    return false;
}

VolumeEstimate mc_volume(const Dist& p, const EnergySpectrum& spec, Region region,
                         std::uint64_t samples, std::uint64_t seed, Execution exec) {
    if (samples < 1000) throw Error(ErrorCode::InvalidArgument, "mc_volume: need >= 1000 samples");
    if (spec.sharp() &&
        (region == Region::CatalysableFuture || region == Region::CatalysablePast))
        throw Error(ErrorCode::InvalidArgument, "mc_volume: catalysable regions need finite beta");
    const RegionTester tester(p, spec);
    const auto hits = count_hits<1>(p.size(), samples, seed, exec, [&](std::vector<double>& q) {
        return std::array<bool, 1>{tester.contains(region, Dist(q))};
    });
    return make_estimate(hits[0], samples, seed);
}

double exact_area_d3(const std::vector<Dist>& vertices) {
    struct P2 {
        double x, y;
    };
    std::vector<P2> pts;
    for (const Dist& v : vertices) {
        if (v.size() != 3) throw Error(ErrorCode::InvalidArgument, "exact_area_d3: need d = 3");
        const P2 pt{v[1] + 0.5 * v[2], v[2] * std::sqrt(3.0) / 2.0};
        const bool dup = std::any_of(pts.begin(), pts.end(), [&](const P2& u) {
            return std::abs(u.x - pt.x) <= kDedupTol && std::abs(u.y - pt.y) <= kDedupTol;
        });
        if (!dup) pts.push_back(pt);
    }
    if (pts.size() < 3) return 0.0;
    double cx = 0.0;
    double cy = 0.0;
    for (const P2& p : pts) {
        cx += p.x;
        cy += p.y;
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const P2& a, const P2& b) {
        return std::atan2(a.y - cy, a.x - cx) < std::atan2(b.y - cy, b.x - cx);
    });
    double twice = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const P2& a = pts[i];
        const P2& b = pts[(i + 1) % pts.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return std::abs(twice) / 2.0 / (std::sqrt(3.0) / 4.0);
}

namespace {

std::vector<Dist> vertex_list(const ConeVertices& cv) {
    std::vector<Dist> out;
    out.reserve(cv.size());
    for (const ConeVertex& v : cv) out.push_back(v.vertex);
    return out;
}

}  // namespace

double exact_volume_d3(const Dist& p, const EnergySpectrum& spec, Region region) {
    if (p.size() != 3) throw Error(ErrorCode::InvalidArgument, "exact_volume_d3: need d = 3");
    const double future = exact_area_d3(vertex_list(future_cone_vertices(p, spec)));
    if (region == Region::Future) return future;
    if (region == Region::CatalysableFuture) {
        const double box = exact_area_d3(vertex_list(c_plus_vertices(p, spec)));
        return std::max(0.0, box - future);
    }
    throw Error(ErrorCode::InvalidArgument, "exact_volume_d3: only T+ and C+ are supported");
}

std::vector<IsoPoint> isovolume_grid(const EnergySpectrum& spec, std::size_t resolution,
                                     std::uint64_t samples, std::uint64_t seed, IsoMethod method,
                                     Execution exec) {
    if (spec.size() != 3) throw Error(ErrorCode::InvalidArgument, "isovolume_grid: need d = 3");
    if (resolution < 1) throw Error(ErrorCode::InvalidArgument, "isovolume_grid: resolution < 1");
    const double r = static_cast<double>(resolution);
    std::vector<IsoPoint> grid;
    for (std::size_t i = 0; i <= resolution; ++i) {
        for (std::size_t j = 0; i + j <= resolution; ++j) {
            const double x = static_cast<double>(i) / r;
            const double y = static_cast<double>(j) / r;
            const double z = static_cast<double>(resolution - i - j) / r;
            const Dist p({x, y, z});
            double v = 0.0;
            if (method == IsoMethod::Exact)
                v = exact_volume_d3(p, spec, Region::CatalysableFuture);
            else
                v = mc_volume(p, spec, Region::CatalysableFuture, samples, seed, exec).value;
            grid.push_back({x, y, v, 0.0});
        }
    }
    double vmax = 0.0;
    for (const IsoPoint& g : grid) vmax = std::max(vmax, g.volume);
    for (IsoPoint& g : grid) g.relative = vmax > 0.0 ? g.volume / vmax : 0.0;
    return grid;
}

void write_isovolume_csv(std::ostream& out, const std::vector<IsoPoint>& grid) {
    out << "x,y,volume,relative_volume\n";
    for (const IsoPoint& g : grid) {
        out << format_number(g.x, kCsvDigits) << ',' << format_number(g.y, kCsvDigits) << ','
            << format_number(g.volume, kCsvDigits) << ',' << format_number(g.relative, kCsvDigits)
            << '\n';
    }
}

}  // namespace thermocone
