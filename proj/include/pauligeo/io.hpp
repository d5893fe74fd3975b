#ifndef PAULIGEO_IO_HPP
#define PAULIGEO_IO_HPP

#include <array>
#include <string>
#include <vector>

#include "pauligeo/channel.hpp"
#include "pauligeo/dynamics.hpp"
#include "pauligeo/families.hpp"
#include "pauligeo/volume.hpp"

namespace pauligeo {

// Shortest round-trip decimal form; identical input gives identical bytes.
std::string format_double(double v);

// Serializers below return the full document, newline-terminated.

std::string classification_json(const PauliEigenvalues& e, const ClassificationReport& r);
std::string classification_csv(const PauliEigenvalues& e, const ClassificationReport& r);

std::string volume_json(Family f, RegionId r, LdivMode mode, const VolumeEstimate& v);
std::string volume_csv(Family f, RegionId r, LdivMode mode, const VolumeEstimate& v);

std::string ratio_json(Family f, LdivMode mode, const RatioResult& res);
std::string ratio_csv(Family f, LdivMode mode, const RatioResult& res);

std::string chart_json(const std::vector<ChartEntry>& entries);
std::string chart_csv(const std::vector<ChartEntry>& entries);

std::string cross_section_json(Family f, const std::vector<CrossSectionCopy>& copies);

// Columns: t,lambda1,lambda2,lambda3,cptp,eb,pdiv,cpdiv,ldiv
// (ldiv reports the literal criterion).
std::string trajectory_csv(const Trajectory& tr);
std::string trajectory_json(const Trajectory& tr);

std::string tlg_rates_json(const PauliEigenvalues& e, const std::array<double, 3>& rates);
std::string tlg_rates_csv(const PauliEigenvalues& e, const std::array<double, 3>& rates);

}  // namespace pauligeo

#endif
