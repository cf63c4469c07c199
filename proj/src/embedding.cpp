#include "thermocone/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "thermocone/core.hpp"

namespace thermocone {

namespace {

// Rounds γ·D to integers >= 1 summing to D. Returns false when impossible.
bool round_to(const std::vector<double>& g, std::int64_t D, std::vector<std::int64_t>& out) {
    const std::size_t d = g.size();
    std::vector<double> target(d);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < d; ++i) {
        target[i] = g[i] * static_cast<double>(D);
        out[i] = std::max<std::int64_t>(1, std::llround(target[i]));
        total += out[i];
    }
    while (total != D) {
        std::size_t pick = d;
        double best = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double r = target[i] - static_cast<double>(out[i]);
            if (total < D) {
                if (pick == d || r > best) { pick = i; best = r; }
            } else if (out[i] > 1) {
                if (pick == d || r < best) { pick = i; best = r; }
            }
        }
        if (pick == d) return false;
        if (total < D) { ++out[pick]; ++total; }
        else { --out[pick]; --total; }
    }
    return true;
}

}  // namespace

RationalGibbs rationalize(const Dist& gibbs, std::int64_t max_denominator) {
    const std::size_t d = gibbs.size();
    if (max_denominator < static_cast<std::int64_t>(d))
        throw Error(ErrorCode::InvalidArgument, "rationalize: max_denominator must be >= d");
    RationalGibbs best;
    std::vector<std::int64_t> cand(d);
    for (std::int64_t D = static_cast<std::int64_t>(d); D <= max_denominator; ++D) {
        if (!round_to(gibbs.values(), D, cand)) continue;
        double delta = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            delta = std::max(delta, std::abs(gibbs[i] - static_cast<double>(cand[i]) /
                                                             static_cast<double>(D)));
        if (best.denominator == 0 || delta < best.delta) {
            best.numerators = cand;
            best.denominator = D;
            best.delta = delta;
            if (delta == 0.0) break;
        }
    }
    return best;
}

Dist embed(const Dist& p, const RationalGibbs& rg) {
    require_same_size(p.size(), rg.numerators.size(), "embed");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(rg.denominator));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double block = p[i] / static_cast<double>(rg.numerators[i]);
        out.insert(out.end(), static_cast<std::size_t>(rg.numerators[i]), block);
    }
    return Dist(std::move(out));
}

namespace {

double classical_min_gap(std::span<const double> a, std::span<const double> b) {
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    double pa = 0.0;
    double pb = 0.0;
    double gap = 0.0;
    for (std::size_t k = 0; k < sa.size(); ++k) {
        pa += sa[k];
        pb += sb[k];
        gap = std::min(gap, pa - pb);
    }
    return gap;
}

}  // namespace

bool majorizes_classical(std::span<const double> a, std::span<const double> b, double eps) {
    require_same_size(a.size(), b.size(), "majorizes_classical");
    return classical_min_gap(a, b) >= -eps;
}

OracleReport oracle_check(const Dist& p, const Dist& q, const EnergySpectrum& spec,
                          std::int64_t max_denominator) {
    require_same_size(p.size(), q.size(), "oracle_check");
    require_same_size(p.size(), spec.size(), "oracle_check");
    OracleReport r;
    r.gibbs = rationalize(gibbs_vector(spec), max_denominator);
    r.delta = r.gibbs.delta;
    const Dist ep = embed(p, r.gibbs);
    const Dist eq = embed(q, r.gibbs);
    r.embedded = majorizes_classical(ep.span(), eq.span());
    r.direct = thermo_majorizes(p, q, spec);

    const TMCurve fp = tm_curve(p, spec);
    const TMCurve fq = tm_curve(q, spec);
    double gap = 0.0;
    for (const Point& e : fq.elbows()) gap = std::min(gap, fp.eval(e.x) - e.y);
    for (const Point& e : fp.elbows()) gap = std::min(gap, e.y - fq.eval(e.x));
    r.min_gap = gap;
    const double margin = static_cast<double>(p.size()) * r.delta;
    r.inconclusive = r.delta > 0.0 && std::abs(gap) <= margin;
    return r;
}

}  // namespace thermocone
