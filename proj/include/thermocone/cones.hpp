#pragma once

#include <functional>
#include <vector>

#include "thermocone/core.hpp"
#include "thermocone/parallel.hpp"

namespace thermocone {

struct ConeVertex {
    Order order;
    Dist vertex;
};

// Vertices keyed by the permutation that first produced them, in lexicographic
// permutation order.
using ConeVertices = std::vector<ConeVertex>;

// Builds a distribution from curve heights h_0 = 0, ..., h_d = 1 taken at the
// cumulative Gibbs weights along `order`. Heights are clamped into [0,1] and
// made non-decreasing first.
Dist vertex_from_heights(std::vector<double> heights, const Order& order);

// Extreme point q^π of the future thermal cone: elbows at f_p(Γ^π_i).
Dist future_cone_vertex(const Dist& p, const EnergySpectrum& spec, const Order& order);

ConeVertices future_cone_vertices(const Dist& p, const EnergySpectrum& spec,
                                  Execution exec = Execution::Parallel);

// Evaluates make(π) for every π in S_d and keeps the first copy of each
// distinct vertex (L∞ <= kDedupTol).
ConeVertices enumerate_vertices(std::size_t d, const std::function<Dist(const Order&)>& make,
                                Execution exec = Execution::Parallel);

ConeVertices dedup_vertices(const ConeVertices& all);

Relation classify(const Dist& p, const Dist& q, const EnergySpectrum& spec);

}  // namespace thermocone
