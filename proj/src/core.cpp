#include "thermocone/core.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace thermocone {

Dist gibbs_vector(const EnergySpectrum& spec) { return Dist(spec.gibbs()); }

SlopeVector beta_order(std::span<const double> p, std::span<const double> gibbs) {
    require_same_size(p.size(), gibbs.size(), "beta_order");
    const std::size_t d = p.size();
    std::vector<double> ratio(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!(gibbs[i] > 0.0))
            throw Error(ErrorCode::InvalidArgument,
                        "beta_order: Gibbs vector must be strictly positive");
        ratio[i] = p[i] / gibbs[i];
    }
    SlopeVector sv;
    sv.order.resize(d);
    std::iota(sv.order.begin(), sv.order.end(), std::size_t{0});
    std::stable_sort(sv.order.begin(), sv.order.end(),
                     [&](std::size_t a, std::size_t b) { return ratio[a] > ratio[b]; });
    sv.slopes.resize(d);
    for (std::size_t k = 0; k < d; ++k) sv.slopes[k] = ratio[sv.order[k]];
    return sv;
}

SlopeVector beta_order(const Dist& p, const EnergySpectrum& spec) {
    return beta_order(p.span(), spec.gibbs());
}

TMCurve::TMCurve(std::vector<Point> elbows) : elbows_(std::move(elbows)) {
    if (elbows_.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "TMCurve: need at least two elbows");
}

double TMCurve::eval(double x) const {
    if (elbows_.empty()) throw Error(ErrorCode::InvalidArgument, "curve_eval: empty curve");
    const double x0 = elbows_.front().x;
    const double x1 = elbows_.back().x;
    if (x < x0 - kEpsSum || x > x1 + kEpsSum || std::isnan(x))
        throw Error(ErrorCode::InvalidArgument, "curve_eval: x outside [0,1]");
    x = std::clamp(x, x0, x1);
    // First elbow with abscissa strictly beyond x.
    auto it = std::upper_bound(elbows_.begin(), elbows_.end(), x,
                               [](double v, const Point& e) { return v < e.x; });
    if (it == elbows_.end()) return elbows_.back().y;
    if (it == elbows_.begin()) return it->y;
    const Point& b = *it;
    const Point& a = *(it - 1);
    const double w = b.x - a.x;
    if (w <= 0.0) return b.y;
    return a.y + (b.y - a.y) * (x - a.x) / w;
}

std::vector<double> TMCurve::slopes() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < elbows_.size(); ++i) {
        const double w = elbows_[i].x - elbows_[i - 1].x;
        if (w > 0.0) out.push_back((elbows_[i].y - elbows_[i - 1].y) / w);
    }
    return out;
}

bool TMCurve::concave(double eps) const {
    const auto s = slopes();
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] > s[i - 1] + eps) return false;
    }
    return true;
}

TMCurve TMCurve::simplified(double eps) const {
    std::vector<Point> out;
    out.push_back(elbows_.front());
    for (std::size_t i = 1; i < elbows_.size(); ++i) {
        const Point& e = elbows_[i];
        if (e.x - out.back().x <= eps) {
            out.back().y = std::max(out.back().y, e.y);
            continue;
        }
        if (out.size() >= 2) {
            const Point& a = out[out.size() - 2];
            const Point& b = out.back();
            const double s1 = (b.y - a.y) / (b.x - a.x);
            const double s2 = (e.y - b.y) / (e.x - b.x);
            if (std::abs(s1 - s2) <= eps) out.pop_back();
        }
        out.push_back(e);
    }
    return TMCurve(std::move(out));
}

TMCurve curve_from_order(std::span<const double> values, std::span<const double> gibbs,
                         const Order& order) {
    require_same_size(values.size(), gibbs.size(), "curve_from_order");
    require_same_size(values.size(), order.size(), "curve_from_order");
    std::vector<Point> e;
    e.reserve(order.size() + 1);
    e.push_back({0.0, 0.0});
    double x = 0.0;
    double y = 0.0;
    for (std::size_t lvl : order) {
        x += gibbs[lvl];
        y += values[lvl];
        e.push_back({x, y});
    }
    // Pin the end point; the accumulated sums only miss it by rounding.
    e.back() = {1.0, 1.0};
    return TMCurve(std::move(e));
}

TMCurve tm_curve(const Dist& p, const EnergySpectrum& spec) {
    const SlopeVector sv = beta_order(p, spec);
    TMCurve c = curve_from_order(p.span(), spec.gibbs(), sv.order);
    assert(c.concave(1e-6));
    return c;
}

TMCurve tm_curve(const QuasiDist& t, const EnergySpectrum& spec, const Order& order) {
    return curve_from_order(t.span(), spec.gibbs(), order);
}

double curve_eval(const TMCurve& c, double x) { return c.eval(x); }

bool curve_dominates(const TMCurve& upper, const TMCurve& lower, double eps) {
    for (const Point& e : lower.elbows()) {
        if (upper.eval(e.x) < e.y - eps) return false;
    }
    for (const Point& e : upper.elbows()) {
        if (e.y < lower.eval(e.x) - eps) return false;
    }
    return true;
}

bool thermo_majorizes(const Dist& p, const Dist& q, const EnergySpectrum& spec) {
    require_same_size(p.size(), q.size(), "thermo_majorizes");
    require_same_size(p.size(), spec.size(), "thermo_majorizes");
    return curve_dominates(tm_curve(p, spec), tm_curve(q, spec));
}

std::string to_string(Relation r) {
    switch (r) {
    case Relation::Majorizes: return "Majorizes";
    case Relation::MajorizedBy: return "MajorizedBy";
    case Relation::Equivalent: return "Equivalent";
    case Relation::Incomparable: return "Incomparable";
    }
    return "Unknown";
}

Relation compare(const Dist& p, const Dist& q, const EnergySpectrum& spec) {
    require_same_size(p.size(), q.size(), "compare");
    require_same_size(p.size(), spec.size(), "compare");
    const TMCurve fp = tm_curve(p, spec);
    const TMCurve fq = tm_curve(q, spec);
    const bool pq = curve_dominates(fp, fq);
    const bool qp = curve_dominates(fq, fp);
    if (pq && qp) return Relation::Equivalent;
    if (pq) return Relation::Majorizes;
    if (qp) return Relation::MajorizedBy;
    return Relation::Incomparable;
}

Composite tensor(const Dist& pA, const EnergySpectrum& specA, const Dist& pB,
                 const EnergySpectrum& specB) {
    require_same_size(pA.size(), specA.size(), "tensor");
    require_same_size(pB.size(), specB.size(), "tensor");
    if (specA.beta() != specB.beta())
        throw Error(ErrorCode::InvalidArgument, "tensor: inverse temperatures differ");
    const std::size_t dA = pA.size();
    const std::size_t dB = pB.size();
    std::vector<double> prob(dA * dB);
    std::vector<double> energy(dA * dB);
    std::vector<double> weight(dA * dB);
    for (std::size_t i = 0; i < dA; ++i) {
        for (std::size_t j = 0; j < dB; ++j) {
            prob[i * dB + j] = pA[i] * pB[j];
            energy[i * dB + j] = specA.energies()[i] + specB.energies()[j];
            weight[i * dB + j] = specA.gibbs()[i] * specB.gibbs()[j];
        }
    }
    // Product of the factor Gibbs vectors is the composite Gibbs vector; reuse it
    // so that factors built from exact weights stay exact.
    if (specA.sharp())
        return {Dist(std::move(prob)), EnergySpectrum(std::move(energy), specA.beta())};
    return {Dist(std::move(prob)),
            EnergySpectrum::with_gibbs(std::move(energy), specA.beta(), weight)};
}

}  // namespace thermocone
