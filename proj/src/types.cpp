#include "thermocone/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace thermocone {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::NotIncomparable: return "NotIncomparable";
    case ErrorCode::EmptyL: return "EmptyL";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::Underflow: return "Underflow";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

namespace {

double checked_sum(const std::vector<double>& v, const char* what) {
    if (v.empty()) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": empty vector");
    for (double x : v) {
        if (!std::isfinite(x))
            throw Error(ErrorCode::InvalidArgument, std::string(what) + ": non-finite entry");
    }
    double s = std::accumulate(v.begin(), v.end(), 0.0);
    if (std::abs(s - 1.0) > kEpsSum) {
        std::ostringstream msg;
        msg.precision(12);
        msg << what << ": entries sum to " << s << ", expected 1";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    return s;
}

}  // namespace

Dist::Dist(std::vector<double> probs) : p_(std::move(probs)) {
    for (double& x : p_) {
        if (x < -kEpsNeg)
            throw Error(ErrorCode::InvalidArgument, "Dist: negative probability");
        if (x < 0.0) x = 0.0;
    }
    checked_sum(p_, "Dist");
}

Dist::Dist(std::initializer_list<double> probs) : Dist(std::vector<double>(probs)) {}

QuasiDist::QuasiDist(std::vector<double> entries) : t_(std::move(entries)) {
    checked_sum(t_, "QuasiDist");
}

QuasiDist::QuasiDist(std::initializer_list<double> entries)
    : QuasiDist(std::vector<double>(entries)) {}

EnergySpectrum::EnergySpectrum(std::vector<double> energies, double beta)
    : energies_(std::move(energies)), beta_(beta) {
    if (energies_.empty())
        throw Error(ErrorCode::InvalidArgument, "EnergySpectrum: no energy levels");
    for (double e : energies_) {
        if (!std::isfinite(e))
            throw Error(ErrorCode::InvalidArgument, "EnergySpectrum: non-finite energy");
    }
    if (std::isnan(beta_) || beta_ < 0.0)
        throw Error(ErrorCode::InvalidArgument, "EnergySpectrum: beta must be >= 0");

    const double emin = *std::min_element(energies_.begin(), energies_.end());
    gibbs_.resize(energies_.size());
    if (std::isinf(beta_)) {
        for (std::size_t i = 0; i < energies_.size(); ++i)
            gibbs_[i] = energies_[i] == emin ? 1.0 : 0.0;
    } else {
        for (std::size_t i = 0; i < energies_.size(); ++i) {
            gibbs_[i] = std::exp(-beta_ * (energies_[i] - emin));
            if (gibbs_[i] == 0.0)
                throw Error(ErrorCode::Underflow,
                            "EnergySpectrum: Gibbs weight underflows at this beta");
        }
    }
    const double z = std::accumulate(gibbs_.begin(), gibbs_.end(), 0.0);
    for (double& g : gibbs_) g /= z;
}

EnergySpectrum EnergySpectrum::from_gibbs(const std::vector<double>& weights, double beta) {
    if (weights.empty())
        throw Error(ErrorCode::InvalidArgument, "from_gibbs: no weights");
    const double wmax = *std::max_element(weights.begin(), weights.end());
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw Error(ErrorCode::InvalidArgument, "from_gibbs: weights must be positive");
    }
    std::vector<double> energies(weights.size(), 0.0);
    if (beta == 0.0) {
        for (double w : weights) {
            if (std::abs(w - wmax) > kEpsSum * wmax)
                throw Error(ErrorCode::InvalidArgument,
                            "from_gibbs: non-uniform weights need beta > 0");
        }
    } else {
        if (!(beta > 0.0) || std::isinf(beta))
            throw Error(ErrorCode::InvalidArgument, "from_gibbs: beta must be finite and > 0");
        for (std::size_t i = 0; i < weights.size(); ++i)
            energies[i] = -std::log(weights[i] / wmax) / beta;
    }
    EnergySpectrum s(std::move(energies), beta);
    // Use the requested weights verbatim; recomputing through exp/log costs a few ulps.
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (std::size_t i = 0; i < weights.size(); ++i) s.gibbs_[i] = weights[i] / total;
    return s;
}

EnergySpectrum EnergySpectrum::with_gibbs(std::vector<double> energies, double beta,
                                         const std::vector<double>& weights) {
    EnergySpectrum s(std::move(energies), beta);
    require_same_size(weights.size(), s.size(), "with_gibbs");
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i] / total;
        if (std::abs(w - s.gibbs_[i]) > 1e-9 * std::max(w, s.gibbs_[i]))
            throw Error(ErrorCode::InvalidArgument,
                        "with_gibbs: weights inconsistent with energies");
        s.gibbs_[i] = w;
    }
    return s;
}

bool EnergySpectrum::sharp() const noexcept { return std::isinf(beta_); }

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
}

void require_enum_cap(std::size_t d, std::size_t cap, const char* what) {
    if (d > cap) {
        std::ostringstream msg;
        msg << what << ": d = " << d << " exceeds the enumeration cap " << cap;
        throw Error(ErrorCode::DimensionCap, msg.str());
    }
}

}  // namespace thermocone
