#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace thermocone {

inline constexpr double kEpsNeg = 1e-12;
inline constexpr double kEpsSum = 1e-9;
inline constexpr double kEpsSlope = 1e-10;
inline constexpr double kEpsCmp = 1e-10;
inline constexpr double kDedupTol = 1e-10;

// Largest d for operations that walk all of S_d.
inline constexpr std::size_t kMaxEnumDim = 8;

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    DimensionCap,
    NotIncomparable,
    EmptyL,
    NoRoot,
    Underflow,
};

const char* to_string(ErrorCode code);

// Domain failure reported by library operations. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Level sequence of a β-order: order[k] is the (0-based) level placed at rank k.
using Order = std::vector<std::size_t>;

class Dist {
public:
    Dist() = default;
    explicit Dist(std::vector<double> probs);
    Dist(std::initializer_list<double> probs);

    std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& values() const noexcept { return p_; }
    std::span<const double> span() const noexcept { return p_; }

private:
    std::vector<double> p_;
};

class QuasiDist {
public:
    QuasiDist() = default;
    explicit QuasiDist(std::vector<double> entries);
    QuasiDist(std::initializer_list<double> entries);

    std::size_t size() const noexcept { return t_.size(); }
    double operator[](std::size_t i) const { return t_[i]; }
    const std::vector<double>& values() const noexcept { return t_; }
    std::span<const double> span() const noexcept { return t_; }

private:
    std::vector<double> t_;
};

// Energy levels plus inverse temperature. β = +inf is accepted and gives the
// sharp ground-state limit of the Gibbs vector.
class EnergySpectrum {
public:
    EnergySpectrum(std::vector<double> energies, double beta);

    // Spectrum whose Gibbs vector at `beta` is proportional to `weights`.
    // At β = 0 the weights must be uniform.
    static EnergySpectrum from_gibbs(const std::vector<double>& weights, double beta);

    // Energies with a Gibbs vector supplied by the caller (e.g. a product of
    // factor Gibbs vectors). The weights must match exp(-βE) up to 1e-9 relative.
    static EnergySpectrum with_gibbs(std::vector<double> energies, double beta,
                                     const std::vector<double>& weights);

    std::size_t size() const noexcept { return energies_.size(); }
    const std::vector<double>& energies() const noexcept { return energies_; }
    double beta() const noexcept { return beta_; }
    bool sharp() const noexcept;
    const std::vector<double>& gibbs() const noexcept { return gibbs_; }

private:
    std::vector<double> energies_;
    double beta_;
    std::vector<double> gibbs_;
};

void require_same_size(std::size_t a, std::size_t b, const char* what);
void require_enum_cap(std::size_t d, std::size_t cap, const char* what);

}  // namespace thermocone
