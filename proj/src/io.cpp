#include "pauligeo/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace pauligeo {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json eigenvalue_array(const PauliEigenvalues& e) { return Json::array({e[0], e[1], e[2]}); }

Json report_fields(const ClassificationReport& r) {
    Json j;
    j["positive_tp"] = r.positive_tp;
    j["cptp"] = r.cptp;
    j["entanglement_breaking"] = r.entanglement_breaking;
    j["tlg_obtainable"] = r.tlg_obtainable;
    j["invertible"] = r.invertible;
    j["p_divisible"] = r.p_divisible;
    j["cp_divisible"] = r.cp_divisible;
    j["l_divisible_literal"] = r.l_divisible_literal;
    j["l_divisible_cpdiv_mode"] = r.l_divisible_cpdiv_mode;
    j["boundary"] = r.boundary;
    return j;
}

char flag(bool b) { return b ? '1' : '0'; }

}  // namespace

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string classification_json(const PauliEigenvalues& e, const ClassificationReport& r) {
    Json j;
    j["eigenvalues"] = eigenvalue_array(e);
    j.update(report_fields(r));
    return dump(j);
}

std::string classification_csv(const PauliEigenvalues& e, const ClassificationReport& r) {
    std::ostringstream out;
    out << "lambda1,lambda2,lambda3,positive_tp,cptp,eb,tlg,invertible,pdiv,cpdiv,"
           "ldiv_literal,ldiv_cpdiv,boundary\n";
    out << format_double(e[0]) << ',' << format_double(e[1]) << ',' << format_double(e[2]);
    for (bool b : {r.positive_tp, r.cptp, r.entanglement_breaking, r.tlg_obtainable,
                   r.invertible, r.p_divisible, r.cp_divisible, r.l_divisible_literal,
                   r.l_divisible_cpdiv_mode})
        out << ',' << flag(b);
    out << ',';
    bool first = true;
    for (const auto& name : r.boundary) {
        if (!first) out << ';';
        out << name;
        first = false;
    }
    out << '\n';
    return out.str();
}

std::string volume_json(Family f, RegionId r, LdivMode mode, const VolumeEstimate& v) {
    Json j;
    j["family"] = family_name(f);
    j["region"] = region_name(r);
    j["mode"] = ldiv_mode_name(mode);
    j["method"] = volume_method_name(v.method);
    j["value"] = v.value;
    j["stderr"] = v.std_error;
    j["samples"] = v.samples;
    j["seed"] = v.seed;
    return dump(j);
}

std::string volume_csv(Family f, RegionId r, LdivMode mode, const VolumeEstimate& v) {
    std::ostringstream out;
    out << "family,region,mode,method,value,stderr,samples,seed\n";
    out << family_name(f) << ',' << region_name(r) << ',' << ldiv_mode_name(mode) << ','
        << volume_method_name(v.method) << ',' << format_double(v.value) << ','
        << format_double(v.std_error) << ',' << v.samples << ',' << v.seed << '\n';
    return out.str();
}

std::string ratio_json(Family f, LdivMode mode, const RatioResult& res) {
    Json j;
    j["family"] = family_name(f);
    j["num"] = region_name(res.numerator);
    j["den"] = region_name(res.denominator);
    j["mode"] = ldiv_mode_name(mode);
    j["method"] = volume_method_name(res.method);
    j["value"] = res.value;
    j["stderr"] = res.std_error;
    j["samples"] = res.samples;
    j["seed"] = res.seed;
    return dump(j);
}

std::string ratio_csv(Family f, LdivMode mode, const RatioResult& res) {
    std::ostringstream out;
    out << "family,num,den,mode,method,value,stderr,samples,seed\n";
    out << family_name(f) << ',' << region_name(res.numerator) << ','
        << region_name(res.denominator) << ',' << ldiv_mode_name(mode) << ','
        << volume_method_name(res.method) << ',' << format_double(res.value) << ','
        << format_double(res.std_error) << ',' << res.samples << ',' << res.seed << '\n';
    return out.str();
}

std::string chart_json(const std::vector<ChartEntry>& entries) {
    Json arr = Json::array();
    for (const auto& e : entries) {
        Json j;
        j["family"] = family_name(e.family);
        j["ratio_name"] = e.ratio_name;
        j["value"] = e.value;
        if (e.paper_value)
            j["paper_value"] = *e.paper_value;
        else
            j["paper_value"] = nullptr;
        j["status"] = chart_status_name(e.status);
        arr.push_back(std::move(j));
    }
    return dump(arr);
}

std::string chart_csv(const std::vector<ChartEntry>& entries) {
    std::ostringstream out;
    out << "family,ratio_name,value,paper_value,status\n";
    for (const auto& e : entries) {
        out << family_name(e.family) << ',' << e.ratio_name << ',' << format_double(e.value)
            << ',';
        if (e.paper_value) out << format_double(*e.paper_value);
        out << ',' << chart_status_name(e.status) << '\n';
    }
    return out.str();
}

std::string cross_section_json(Family f, const std::vector<CrossSectionCopy>& copies) {
    Json arr = Json::array();
    for (const auto& copy : copies) {
        Json j;
        j["family"] = family_name(f);
        j["plane"] = copy.plane;
        Json regions = Json::array();
        for (const auto& region : copy.regions) {
            Json r;
            r["label"] = region.label;
            Json verts = Json::array();
            for (const auto& v : region.vertices)
                verts.push_back(Json::array({v[0], v[1], v[2]}));
            r["vertices"] = std::move(verts);
            regions.push_back(std::move(r));
        }
        j["regions"] = std::move(regions);
        arr.push_back(std::move(j));
    }
    return dump(arr);
}

std::string trajectory_csv(const Trajectory& tr) {
    std::ostringstream out;
    out << "t,lambda1,lambda2,lambda3,cptp,eb,pdiv,cpdiv,ldiv\n";
    for (const auto& s : tr.samples) {
        out << format_double(s.t) << ',' << format_double(s.eigenvalues[0]) << ','
            << format_double(s.eigenvalues[1]) << ',' << format_double(s.eigenvalues[2])
            << ',' << flag(s.report.cptp) << ',' << flag(s.report.entanglement_breaking)
            << ',' << flag(s.report.p_divisible) << ',' << flag(s.report.cp_divisible)
            << ',' << flag(s.report.l_divisible_literal) << '\n';
    }
    return out.str();
}

std::string trajectory_json(const Trajectory& tr) {
    Json j;
    j["tol"] = tr.tol;
    Json samples = Json::array();
    for (const auto& s : tr.samples) {
        Json row;
        row["t"] = s.t;
        row["eigenvalues"] = eigenvalue_array(s.eigenvalues);
        row.update(report_fields(s.report));
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    return dump(j);
}

std::string tlg_rates_json(const PauliEigenvalues& e, const std::array<double, 3>& rates) {
    Json j;
    j["eigenvalues"] = eigenvalue_array(e);
    j["rates"] = Json::array({rates[0], rates[1], rates[2]});
    return dump(j);
}

std::string tlg_rates_csv(const PauliEigenvalues& e, const std::array<double, 3>& rates) {
    std::ostringstream out;
    out << "lambda1,lambda2,lambda3,Gamma1,Gamma2,Gamma3\n";
    out << format_double(e[0]) << ',' << format_double(e[1]) << ',' << format_double(e[2])
        << ',' << format_double(rates[0]) << ',' << format_double(rates[1]) << ','
        << format_double(rates[2]) << '\n';
    return out.str();
}

}  // namespace pauligeo
