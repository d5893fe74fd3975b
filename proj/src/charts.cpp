#include <array>
#include <cmath>
#include <optional>

#include "pauligeo/volume.hpp"

namespace pauligeo {

namespace {

struct RatioSpec {
    RegionId num;
    RegionId den;
};

// First three rows feed the relative-volume chart normalized by PT,
// the rest the chart normalized by CPT.
constexpr std::array<RatioSpec, 8> kRatios{{
    {RegionId::cpt, RegionId::pt},
    {RegionId::ebc, RegionId::pt},
    {RegionId::pt_tlg, RegionId::pt},
    {RegionId::ebc, RegionId::cpt},
    {RegionId::cpt_tlg, RegionId::cpt},
    {RegionId::pdiv, RegionId::cpt},
    {RegionId::cpdiv, RegionId::cpt},
    {RegionId::ldiv, RegionId::cpt},
}};

using PaperRow = std::array<std::optional<double>, 8>;

// Reported relative volumes, in kRatios order.  Entries with no reported
// value stay empty.
PaperRow paper_values(Family f) {
    constexpr std::optional<double> none;
    switch (f) {
        case Family::axial:
            return {1.0, 1.0, 0.5, 1.0, 0.5, 1.0, 1.0, 0.5};
        case Family::pair_zero:
            return {0.5, 0.5, 0.5, 1.0, 0.5, 0.5, 0.0, 0.0};
        case Family::depolarizing:
            return {2.0 / 3.0, none, 0.5, 0.5, 0.75, 0.75, 0.75, 0.75};
        case Family::two_distinct_zero:
            return {0.5, 0.5, 0.25, 1.0, 0.25, 1.0, 0.0, 0.0};
        case Family::degenerate_pair:
            return {0.5, none, 0.25, 0.5, 0.375, 0.75, 2.0 / 3.0, 2.0 / 3.0};
        case Family::two_pauli:
            return {1.0, 0.0, 0.5, 0.0, 0.5, 1.0, 0.0, 0.0};
        case Family::dephasing:
            return {1.0, 0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0};
        case Family::general:
            break;
    }
    return {none, none, none, none, none, none, none, none};
}

constexpr double kMatchTol = 1e-9;

}  // namespace

std::vector<ChartEntry> chart_data(LdivMode mode) {
    std::vector<ChartEntry> entries;
    entries.reserve(7 * kRatios.size());
    for (Family f : all_families()) {
        if (f == Family::general) continue;  // no finite parameter box
        const PaperRow paper = paper_values(f);
        for (std::size_t i = 0; i < kRatios.size(); ++i) {
            ChartEntry e;
            e.family = f;
            e.ratio_name = region_name(kRatios[i].num) + "/" + region_name(kRatios[i].den);
            e.value = volume_ratio(f, kRatios[i].num, kRatios[i].den, VolumeMethod::exact,
                                   0, 0, mode)
                          .value;
            e.paper_value = paper[i];
            if (!e.paper_value) {
                e.status = ChartStatus::unreported;
            } else if (std::abs(e.value - *e.paper_value) <= kMatchTol) {
                e.status = ChartStatus::consistent;
            } else {
                e.status = ChartStatus::discrepant;
            }
            entries.push_back(std::move(e));
        }
    }
    return entries;
}

}  // namespace pauligeo
