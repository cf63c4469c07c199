#include "thermocone/entanglement.hpp"

#include <cmath>
#include <random>

#include "thermocone/catalysis.hpp"
#include "thermocone/cones.hpp"
#include "thermocone/montecarlo.hpp"
#include "thermocone/rng.hpp"

namespace thermocone {

namespace {

const Order kTnOrder{1, 0, 2, 3};

void require_two_qubit(const Dist& p) {
    if (p.size() != 4) throw Error(ErrorCode::InvalidArgument, "two-qubit state must have d = 4");
}

bool tn_from_spec(const Dist& p, const EnergySpectrum& spec) {
    return !unitary_entanglable(future_cone_vertex(canonical_two_qubit(p), spec, kTnOrder));
}

bool cn_from_spec(const Dist& p, const EnergySpectrum& spec, std::uint64_t interior_samples,
                  std::uint64_t seed) {
    if (!tn_from_spec(p, spec)) return false;
    const ConeVertices verts = c_plus_vertices(p, spec, Execution::Serial);
    for (const ConeVertex& v : verts) {
        if (unitary_entanglable(v.vertex) || !tn_from_spec(v.vertex, spec)) return false;
    }
    if (interior_samples == 0 || verts.size() < 2) return true;
    std::mt19937_64 eng = chunk_engine(seed, 0);
    std::vector<double> w(verts.size());
    for (std::uint64_t s = 0; s < interior_samples; ++s) {
        sample_simplex(eng, w);
        std::vector<double> q(4, 0.0);
        for (std::size_t k = 0; k < verts.size(); ++k) {
            for (std::size_t i = 0; i < 4; ++i) q[i] += w[k] * verts[k].vertex[i];
        }
        const Dist qd(std::move(q));
        if (unitary_entanglable(qd) || !tn_from_spec(qd, spec)) return false;
    }
    return true;
}

}  // namespace

EnergySpectrum two_qubit_spectrum(double beta) { return EnergySpectrum({0.0, 1.0, 1.0, 2.0}, beta); }

double entanglement_witness(const Dist& p) {
    require_two_qubit(p);
    const double d23 = p[1] - p[2];
    return 4.0 * p[0] * p[3] - d23 * d23;
}

bool unitary_entanglable(const Dist& p) { return entanglement_witness(p) < -kEpsCmp; }

Dist canonical_two_qubit(const Dist& p) {
    require_two_qubit(p);
    if (p[1] >= p[2]) return p;
    return Dist({p[0], p[2], p[1], p[3]});
}

bool in_TN(const Dist& p, double beta) {
    require_two_qubit(p);
    return tn_from_spec(p, two_qubit_spectrum(beta));
}

bool in_CN(const Dist& p, double beta, std::uint64_t interior_samples, std::uint64_t seed) {
    require_two_qubit(p);
    return cn_from_spec(p, two_qubit_spectrum(beta), interior_samples, seed);
}

Dist p_star(double beta) {
    const double z = 4.0 + 2.0 * std::cosh(beta);
    return Dist({std::exp(beta) / z, 1.0 / z, 1.0 / z, (2.0 + std::exp(-beta)) / z});
}

Dist p_star_star(double beta) {
    const double z = 4.0 + 2.0 * std::cosh(beta);
    return Dist({std::exp(beta) / z, 3.0 / z, 1.0 / z, std::exp(-beta) / z});
}

EntanglementVolumes volume_ratio_CN_TN(double beta, std::uint64_t samples, std::uint64_t seed,
                                       std::uint64_t interior_samples, Execution exec) {
    if (samples < 10000)
        throw Error(ErrorCode::InvalidArgument, "volume_ratio_CN_TN: need >= 10^4 samples");
    const EnergySpectrum spec = two_qubit_spectrum(beta);
    const TMCurve f_star = tm_curve(p_star(beta), spec);
    const auto hits = count_hits<4>(4, samples, seed, exec, [&](std::vector<double>& qv) {
        const Dist q(qv);
        const bool tn = tn_from_spec(q, spec);
        const bool cn = tn && cn_from_spec(q, spec, interior_samples, seed);
        const bool below_star = curve_dominates(f_star, tm_curve(q, spec));
        return std::array<bool, 4>{tn, cn, below_star, below_star && cn};
    });
    EntanglementVolumes out;
    out.tn = make_estimate(hits[0], samples, seed);
    out.cn = make_estimate(hits[1], samples, seed);
    if (hits[0] > 0) {
        out.ratio = static_cast<double>(hits[1]) / static_cast<double>(hits[0]);
        out.ratio_std_error =
            std::sqrt(out.ratio * (1.0 - out.ratio) / static_cast<double>(hits[0]));
    }
    out.p_star_samples = hits[2];
    if (hits[2] > 0)
        out.p_star_agreement = static_cast<double>(hits[3]) / static_cast<double>(hits[2]);
    return out;
}

}  // namespace thermocone
