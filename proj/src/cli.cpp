#include "pauligeo/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pauligeo/dynamics.hpp"
#include "pauligeo/error.hpp"
#include "pauligeo/io.hpp"
#include "pauligeo/volume.hpp"

namespace pauligeo {

namespace {

std::vector<std::string> family_choices() {
    std::vector<std::string> names;
    for (Family f : all_families()) names.push_back(family_name(f));
    return names;
}

std::vector<std::string> region_choices() {
    std::vector<std::string> names;
    for (RegionId r : all_regions()) names.push_back(region_name(r));
    return names;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<double> parse_number_list(const std::string& text, std::size_t count,
                                      const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != token.size() || token.empty())
            throw CLI::ValidationError(flag, "expects comma-separated numbers, got '" +
                                                 token + "'");
        out.push_back(v);
    }
    if (out.size() != count)
        throw CLI::ValidationError(flag, "expects exactly " + std::to_string(count) +
                                             " comma-separated numbers");
    return out;
}

// --rates forms: "const:g1,g2,g3", "pw:FILE" (lines `t,g1,g2,g3`, first t = 0,
// last line closes the grid), or "tanh-demo".
RateSpec parse_rates(const std::string& spec) {
    if (spec == "tanh-demo") {
        return RateSpec::sampled({[](double) { return 1.0; }, [](double) { return 1.0; },
                                  [](double t) { return -std::tanh(t); }});
    }
    if (spec.rfind("const:", 0) == 0) {
        const auto g = parse_number_list(spec.substr(6), 3, "--rates");
        return RateSpec::constant({g[0], g[1], g[2]});
    }
    if (spec.rfind("pw:", 0) == 0) {
        const std::string path = spec.substr(3);
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("--rates", "cannot open rates file: " + path);
        std::vector<double> edges;
        std::array<std::vector<double>, 3> values;
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            const auto row = parse_number_list(line, 4, "--rates");
            edges.push_back(row[0]);
            for (int k = 0; k < 3; ++k)
                values[static_cast<std::size_t>(k)].push_back(row[static_cast<std::size_t>(k) + 1]);
        }
        if (edges.size() < 2)
            throw CLI::ValidationError("--rates", "rates file needs at least two rows");
        for (auto& v : values) v.pop_back();  // last row only closes the grid
        try {
            return RateSpec::piecewise(std::move(edges), std::move(values));
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("--rates", e.what());
        }
    }
    throw CLI::ValidationError("--rates",
                               "expects const:g1,g2,g3 | pw:FILE | tanh-demo, got '" +
                                   spec + "'");
}

void emit(const std::string& output_path, const std::string& doc) {
    if (output_path.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + output_path);
    out << doc;
}

bool exact_supported(Family f, RegionId r, LdivMode mode) {
    try {
        region_constraints(f, r, mode);
        return true;
    } catch (const UnsupportedRegion&) {
        return false;
    }
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Geometry of qubit Pauli channels: classification, region volumes, "
                 "figure data, and dynamical-map trajectories"};
    app.require_subcommand(1);

    const auto families = family_choices();
    const auto regions = region_choices();
    const std::vector<std::string> modes{"literal", "cpdiv"};
    const std::vector<std::string> methods{"exact", "mc"};
    const std::vector<std::string> formats{"json", "csv"};

    // ---- classify ----------------------------------------------------
    std::string cl_eigen, cl_probs, cl_format = "json", cl_output;
    auto* classify_cmd =
        app.add_subcommand("classify", "Classify a Pauli map given by eigenvalues or "
                                       "mixing probabilities");
    auto* cl_e = classify_cmd->add_option("--eigenvalues", cl_eigen, "lambda1,lambda2,lambda3");
    auto* cl_p =
        classify_cmd->add_option("--probabilities", cl_probs, "p0,p1,p2,p3 (must sum to 1)");
    cl_e->excludes(cl_p);
    cl_p->excludes(cl_e);
    classify_cmd->add_option("--format", cl_format)->check(CLI::IsMember(formats));
    classify_cmd->add_option("--output", cl_output, "Write to file instead of stdout");
    classify_cmd->callback([&] {
        if (cl_eigen.empty() && cl_probs.empty())
            throw CLI::RequiredError("--eigenvalues or --probabilities");
        PauliEigenvalues e;
        if (!cl_eigen.empty()) {
            const auto v = parse_number_list(cl_eigen, 3, "--eigenvalues");
            e = PauliEigenvalues{v[0], v[1], v[2]};
        } else {
            const auto v = parse_number_list(cl_probs, 4, "--probabilities");
            e = eigenvalues_from_probabilities(PauliProbabilities{v[0], v[1], v[2], v[3]});
        }
        const ClassificationReport report = classify(e);
        emit(cl_output, cl_format == "csv" ? classification_csv(e, report)
                                           : classification_json(e, report));
    });

    // ---- volume ------------------------------------------------------
    std::string vo_family, vo_region, vo_mode = "literal", vo_method, vo_format = "json",
                vo_output;
    std::uint64_t vo_samples = 1000000, vo_seed = 0;
    auto* volume_cmd =
        app.add_subcommand("volume", "Hilbert-Schmidt volume of a region within a family");
    volume_cmd->add_option("--family", vo_family)->required()->check(CLI::IsMember(families));
    volume_cmd->add_option("--region", vo_region)->required()->check(CLI::IsMember(regions));
    volume_cmd->add_option("--ldiv-mode", vo_mode)->check(CLI::IsMember(modes));
    volume_cmd->add_option("--method", vo_method, "Default: exact where supported, else mc")
        ->check(CLI::IsMember(methods));
    volume_cmd->add_option("--samples", vo_samples)->check(CLI::Range(std::uint64_t(1), std::numeric_limits<std::uint64_t>::max()));
    volume_cmd->add_option("--seed", vo_seed);
    volume_cmd->add_option("--format", vo_format)->check(CLI::IsMember(formats));
    volume_cmd->add_option("--output", vo_output);
    volume_cmd->callback([&] {
        const Family f = family_from_name(vo_family);
        const RegionId r = region_from_name(vo_region);
        const LdivMode mode = ldiv_mode_from_name(vo_mode);
        const bool exact = vo_method.empty() ? exact_supported(f, r, mode)
                                             : vo_method == "exact";
        const VolumeEstimate v = exact ? exact_volume(f, r, mode)
                                       : mc_volume(f, r, vo_samples, vo_seed, mode);
        emit(vo_output, vo_format == "csv" ? volume_csv(f, r, mode, v)
                                           : volume_json(f, r, mode, v));
    });

    // ---- ratio -------------------------------------------------------
    std::string ra_family, ra_num, ra_den, ra_mode = "literal", ra_method,
                ra_format = "json", ra_output;
    std::uint64_t ra_samples = 1000000, ra_seed = 0;
    auto* ratio_cmd =
        app.add_subcommand("ratio", "Relative volume of two regions within one family");
    ratio_cmd->add_option("--family", ra_family)->required()->check(CLI::IsMember(families));
    ratio_cmd->add_option("--num", ra_num)->required()->check(CLI::IsMember(regions));
    ratio_cmd->add_option("--den", ra_den)->required()->check(CLI::IsMember(regions));
    ratio_cmd->add_option("--ldiv-mode", ra_mode)->check(CLI::IsMember(modes));
    ratio_cmd->add_option("--method", ra_method, "Default: exact where supported, else mc")
        ->check(CLI::IsMember(methods));
    ratio_cmd->add_option("--samples", ra_samples)->check(CLI::Range(std::uint64_t(1), std::numeric_limits<std::uint64_t>::max()));
    ratio_cmd->add_option("--seed", ra_seed);
    ratio_cmd->add_option("--format", ra_format)->check(CLI::IsMember(formats));
    ratio_cmd->add_option("--output", ra_output);
    ratio_cmd->callback([&] {
        const Family f = family_from_name(ra_family);
        const RegionId num = region_from_name(ra_num);
        const RegionId den = region_from_name(ra_den);
        const LdivMode mode = ldiv_mode_from_name(ra_mode);
        const bool exact = ra_method.empty()
                               ? exact_supported(f, num, mode) && exact_supported(f, den, mode)
                               : ra_method == "exact";
        const RatioResult res =
            volume_ratio(f, num, den, exact ? VolumeMethod::exact : VolumeMethod::monte_carlo,
                         ra_samples, ra_seed, mode);
        emit(ra_output,
             ra_format == "csv" ? ratio_csv(f, mode, res) : ratio_json(f, mode, res));
    });

    // ---- charts ------------------------------------------------------
    std::string ch_mode = "literal", ch_format = "csv", ch_output;
    auto* charts_cmd = app.add_subcommand(
        "charts", "Relative-volume table for all finite families, with reported-value "
                  "comparison status");
    charts_cmd->add_option("--ldiv-mode", ch_mode)->check(CLI::IsMember(modes));
    charts_cmd->add_option("--format", ch_format)->check(CLI::IsMember(formats));
    charts_cmd->add_option("--output", ch_output);
    charts_cmd->callback([&] {
        const auto entries = chart_data(ldiv_mode_from_name(ch_mode));
        emit(ch_output, ch_format == "csv" ? chart_csv(entries) : chart_json(entries));
    });

    // ---- cross-section ----------------------------------------------
    std::string cs_family, cs_output;
    auto* cs_cmd = app.add_subcommand(
        "cross-section", "Figure cross-sections (CPT and CPT-TLG outlines) as JSON");
    cs_cmd->add_option("--family", cs_family)->required()->check(CLI::IsMember(families));
    cs_cmd->add_option("--output", cs_output);
    cs_cmd->callback([&] {
        const Family f = family_from_name(cs_family);
        emit(cs_output, cross_section_json(f, cross_section(f)));
    });

    // ---- trajectory --------------------------------------------------
    std::string tr_rates, tr_format = "csv", tr_output;
    double tr_tmax = 10.0, tr_tol = 1e-10;
    int tr_points = 200;
    auto* traj_cmd = app.add_subcommand(
        "trajectory", "Eigenvalue trajectory of a time-local generator, classified per "
                      "sample");
    traj_cmd->add_option("--rates", tr_rates, "const:g1,g2,g3 | pw:FILE | tanh-demo")
        ->required();
    traj_cmd->add_option("--t-max", tr_tmax)->check(CLI::PositiveNumber);
    traj_cmd->add_option("--points", tr_points, "Grid size including t=0")
        ->check(CLI::Range(2, 1000000));
    traj_cmd->add_option("--tol", tr_tol, "Quadrature tolerance per integral")
        ->check(CLI::PositiveNumber);
    traj_cmd->add_option("--format", tr_format)->check(CLI::IsMember(formats));
    traj_cmd->add_option("--output", tr_output);
    traj_cmd->callback([&] {
        const RateSpec rates = parse_rates(tr_rates);
        std::vector<double> grid;
        grid.reserve(static_cast<std::size_t>(tr_points));
        for (int i = 0; i < tr_points; ++i)
            grid.push_back(tr_tmax * static_cast<double>(i) /
                           static_cast<double>(tr_points - 1));
        const Trajectory tr = trajectory(rates, grid, tr_tol);
        emit(tr_output, tr_format == "json" ? trajectory_json(tr) : trajectory_csv(tr));
    });

    // ---- rates -------------------------------------------------------
    std::string rt_eigen, rt_format = "json", rt_output;
    auto* rates_cmd = app.add_subcommand(
        "rates", "Integrated time-local rates reproducing a target channel");
    rates_cmd->add_option("--eigenvalues", rt_eigen, "lambda1,lambda2,lambda3")->required();
    rates_cmd->add_option("--format", rt_format)->check(CLI::IsMember(formats));
    rates_cmd->add_option("--output", rt_output);
    rates_cmd->callback([&] {
        const auto v = parse_number_list(rt_eigen, 3, "--eigenvalues");
        const PauliEigenvalues e{v[0], v[1], v[2]};
        const auto rates = tlg_rates_for_target(e);
        emit(rt_output, rt_format == "csv" ? tlg_rates_csv(e, rates)
                                           : tlg_rates_json(e, rates));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace pauligeo
