#ifndef PAULIGEO_VOLUME_HPP
#define PAULIGEO_VOLUME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauligeo/families.hpp"

namespace pauligeo {

enum class VolumeMethod {
    exact,
    monte_carlo,
};

struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;  // 0 for exact results
    VolumeMethod method = VolumeMethod::exact;
    std::uint64_t samples = 0;  // 0 for exact results
    std::uint64_t seed = 0;
};

struct RatioResult {
    RegionId numerator;
    RegionId denominator;
    double value = 0.0;
    double std_error = 0.0;
    VolumeMethod method = VolumeMethod::exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

enum class ChartStatus {
    consistent,
    discrepant,
    unreported,
};

struct ChartEntry {
    Family family;
    std::string ratio_name;  // "<numerator>/<denominator>" in kebab region names
    double value = 0.0;
    std::optional<double> paper_value;
    ChartStatus status = ChartStatus::unreported;
};

// Hilbert-Schmidt volume of a region: metric scale times the Lebesgue
// measure of its cell decomposition.  Empty decompositions give 0.
VolumeEstimate exact_volume(Family f, RegionId r, LdivMode mode = LdivMode::literal);

// Same integration with the metric scale factor overridden (test hook for
// the scale-covariance property).
VolumeEstimate exact_volume_with_scale(Family f, RegionId r, double scale,
                                       LdivMode mode = LdivMode::literal);

// Monte Carlo estimate over the parameter box.  Membership goes through the
// pointwise predicates, never through the cell decomposition, so the two
// routes stay independent.  The estimator is counter-based: the result is
// a pure function of (samples, seed) no matter how the loop is scheduled.
VolumeEstimate mc_volume(Family f, RegionId r, std::uint64_t samples,
                         std::uint64_t seed, LdivMode mode = LdivMode::literal);

VolumeEstimate mc_volume_with_scale(Family f, RegionId r, double scale,
                                    std::uint64_t samples, std::uint64_t seed,
                                    LdivMode mode = LdivMode::literal);

// Ratio of region volumes within one family.  Exact ratios divide exact
// volumes; Monte Carlo ratios reuse the same sample stream for both regions
// and propagate the correlation through the delta method.
// Throws ZeroDenominator when the denominator volume is zero (exact) or no
// sample lands in the denominator region (Monte Carlo).
RatioResult volume_ratio(Family f, RegionId numerator, RegionId denominator,
                         VolumeMethod method = VolumeMethod::exact,
                         std::uint64_t samples = 1000000, std::uint64_t seed = 0,
                         LdivMode mode = LdivMode::literal);

// Relative-volume tables behind the two summary charts: for every family
// with a finite-dimensional parameterization (all but the general one),
// the ratios {cpt, ebc, pt-tlg}/pt and {ebc, cpt-tlg, pdiv, cpdiv, ldiv}/cpt,
// computed exactly and compared against the values reported alongside the
// channel families (tolerance 1e-9; entries nobody reported are marked so).
std::vector<ChartEntry> chart_data(LdivMode mode = LdivMode::literal);

std::string volume_method_name(VolumeMethod m);
std::string chart_status_name(ChartStatus s);

}  // namespace pauligeo

#endif
