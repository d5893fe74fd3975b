#include <cmath>
#include <stdexcept>

#include "pauligeo/error.hpp"
#include "pauligeo/families.hpp"
#include "pauligeo/rng.hpp"
#include "pauligeo/volume.hpp"

namespace pauligeo {

namespace {

void fill_point(const Box& box, std::uint64_t seed, std::uint64_t index, FamilyParams& x) {
    for (int k = 0; k < box.dim; ++k) {
        const double u = counter_uniform(seed, index * static_cast<std::uint64_t>(box.dim) +
                                                   static_cast<std::uint64_t>(k));
        x.values[static_cast<std::size_t>(k)] = box.lo[k] + u * (box.hi[k] - box.lo[k]);
    }
}

}  // namespace

VolumeEstimate mc_volume_with_scale(Family f, RegionId r, double scale, std::uint64_t samples,
                                    std::uint64_t seed, LdivMode mode) {
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    const Box box = parameter_box(f);

    FamilyParams x;
    x.values.resize(static_cast<std::size_t>(box.dim));
    std::uint64_t accepted = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        fill_point(box, seed, i, x);
        if (region_contains(f, r, mode, x)) ++accepted;
    }

    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(accepted) / n;
    const double box_volume = box.volume();

    VolumeEstimate out;
    out.value = scale * box_volume * p;
    out.std_error = scale * box_volume * std::sqrt(p * (1.0 - p) / n);
    out.method = VolumeMethod::monte_carlo;
    out.samples = samples;
    out.seed = seed;
    return out;
}

VolumeEstimate mc_volume(Family f, RegionId r, std::uint64_t samples, std::uint64_t seed,
                         LdivMode mode) {
    return mc_volume_with_scale(f, r, metric_scale(f), samples, seed, mode);
}

RatioResult volume_ratio(Family f, RegionId numerator, RegionId denominator, VolumeMethod method,
                         std::uint64_t samples, std::uint64_t seed, LdivMode mode) {
    RatioResult out;
    out.numerator = numerator;
    out.denominator = denominator;
    out.method = method;

    if (method == VolumeMethod::exact) {
        const double num = exact_volume(f, numerator, mode).value;
        const double den = exact_volume(f, denominator, mode).value;
        if (den == 0.0) throw ZeroDenominator("denominator region has zero volume");
        out.value = num / den;
        return out;
    }

    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    const Box box = parameter_box(f);

    // Common random numbers: one stream feeds both memberships, and the
    // covariance term carries the shared randomness into the error bar.
    FamilyParams x;
    x.values.resize(static_cast<std::size_t>(box.dim));
    std::uint64_t ca = 0;
    std::uint64_t cb = 0;
    std::uint64_t cab = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        fill_point(box, seed, i, x);
        const bool in_num = region_contains(f, numerator, mode, x);
        const bool in_den = region_contains(f, denominator, mode, x);
        if (in_num) ++ca;
        if (in_den) ++cb;
        if (in_num && in_den) ++cab;
    }

    out.samples = samples;
    out.seed = seed;
    if (cb == 0) throw ZeroDenominator("no samples fell in the denominator region");
    if (ca == 0) {
        out.value = 0.0;
        out.std_error = 0.0;
        return out;
    }

    const double n = static_cast<double>(samples);
    const double pa = static_cast<double>(ca) / n;
    const double pb = static_cast<double>(cb) / n;
    const double pab = static_cast<double>(cab) / n;
    const double r = pa / pb;
    // Delta method for the ratio of correlated acceptance rates.
    const double var = (r * r / n) * ((1.0 - pa) / pa + (1.0 - pb) / pb -
                                      2.0 * (pab - pa * pb) / (pa * pb));
    out.value = r;
    out.std_error = std::sqrt(std::max(0.0, var));
    return out;
}

}  // namespace pauligeo
