#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "thermocone/catalysis.hpp"
#include "thermocone/core.hpp"
#include "thermocone/parallel.hpp"

namespace thermocone {

enum class Region { CatalysableFuture, CatalysablePast, Future, Past, Incomparable };

// Accepts "C+", "C-", "T+", "T-", "T0".
Region parse_region(const std::string& name);
std::string to_string(Region r);

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::uint64_t kDefaultSamples = 100000;

struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;
};

VolumeEstimate make_estimate(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed);

// Zero within 3 standard errors; a run without hits also counts as zero.
bool is_zero_volume(const VolumeEstimate& v);

// Membership tests against a fixed reference state, with its curve and slope
// bounds computed once.
class RegionTester {
public:
    RegionTester(const Dist& p, const EnergySpectrum& spec);
    bool contains(Region region, const Dist& q) const;

private:
    Dist p_;
    EnergySpectrum spec_;
    TMCurve fp_;
    SlopeBounds bounds_;
};

VolumeEstimate mc_volume(const Dist& p, const EnergySpectrum& spec, Region region,
                         std::uint64_t samples, std::uint64_t seed,
                         Execution exec = Execution::Parallel);

// Polygon area in the plane of the 2-simplex, relative to the simplex area.
double exact_area_d3(const std::vector<Dist>& vertices);

// Exact relative volume for d = 3 and region T+ or C+.
double exact_volume_d3(const Dist& p, const EnergySpectrum& spec, Region region);

enum class IsoMethod { MonteCarlo, Exact };

struct IsoPoint {
    double x;  // p_1
    double y;  // p_2
    double volume;
    double relative;  // volume / max volume over the grid (0 if all vanish)
};

// V(C+) over the barycentric grid p = (i, j, r - i - j)/r of the 2-simplex.
std::vector<IsoPoint> isovolume_grid(const EnergySpectrum& spec, std::size_t resolution,
                                     std::uint64_t samples, std::uint64_t seed,
                                     IsoMethod method = IsoMethod::MonteCarlo,
                                     Execution exec = Execution::Parallel);

void write_isovolume_csv(std::ostream& out, const std::vector<IsoPoint>& grid);

}  // namespace thermocone
