#pragma once

#include <span>
#include <string>
#include <vector>

#include "thermocone/types.hpp"

namespace thermocone {

Dist gibbs_vector(const EnergySpectrum& spec);

// Slopes p_i/γ_i sorted non-increasing, with the levels that carry them.
struct SlopeVector {
    std::vector<double> slopes;
    Order order;

    double first() const { return slopes.front(); }
    double last() const { return slopes.back(); }
};

SlopeVector beta_order(std::span<const double> p, std::span<const double> gibbs);
SlopeVector beta_order(const Dist& p, const EnergySpectrum& spec);

struct Point {
    double x;
    double y;
};

// Piecewise-linear curve through its elbows, x non-decreasing from 0 to 1.
class TMCurve {
public:
    TMCurve() = default;
    explicit TMCurve(std::vector<Point> elbows);

    const std::vector<Point>& elbows() const noexcept { return elbows_; }
    double eval(double x) const;

    // Segment slopes between consecutive elbows of non-zero width.
    std::vector<double> slopes() const;
    bool concave(double eps = kEpsSlope) const;

    // Drops zero-width segments and elbows lying on a straight run.
    TMCurve simplified(double eps = kEpsSlope) const;

private:
    std::vector<Point> elbows_;
};

// Elbows (Σ_{k<=i} γ_{order[k]}, Σ_{k<=i} v_{order[k]}) for an explicit order.
TMCurve curve_from_order(std::span<const double> values, std::span<const double> gibbs,
                         const Order& order);

TMCurve tm_curve(const Dist& p, const EnergySpectrum& spec);
TMCurve tm_curve(const QuasiDist& t, const EnergySpectrum& spec, const Order& order);

double curve_eval(const TMCurve& c, double x);

// True when `upper` lies above `lower` (up to eps) at every elbow of either curve.
bool curve_dominates(const TMCurve& upper, const TMCurve& lower, double eps = kEpsCmp);

bool thermo_majorizes(const Dist& p, const Dist& q, const EnergySpectrum& spec);

enum class Relation { Majorizes, MajorizedBy, Equivalent, Incomparable };

std::string to_string(Relation r);

Relation compare(const Dist& p, const Dist& q, const EnergySpectrum& spec);

struct Composite {
    Dist state;
    EnergySpectrum spectrum;
};

Composite tensor(const Dist& pA, const EnergySpectrum& specA, const Dist& pB,
                 const EnergySpectrum& specB);

}  // namespace thermocone
