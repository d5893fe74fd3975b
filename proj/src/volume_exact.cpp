#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pauligeo/families.hpp"
#include "pauligeo/geometry.hpp"
#include "pauligeo/volume.hpp"

namespace pauligeo {

namespace {

double interval_measure(const Cell& cell, const Box& box) {
    double lo = box.lo[0];
    double hi = box.hi[0];
    for (const auto& c : cell.affine) {
        const double a = c.a[0];
        if (a > 0.0) {
            lo = std::max(lo, -c.b / a);
        } else if (a < 0.0) {
            hi = std::min(hi, -c.b / a);
        } else if (c.b < 0.0) {
            return 0.0;
        }
    }
    return std::max(0.0, hi - lo);
}

double polygon_measure(const Cell& cell, const Box& box) {
    std::vector<Vec2> poly{
        {box.lo[0], box.lo[1]},
        {box.hi[0], box.lo[1]},
        {box.hi[0], box.hi[1]},
        {box.lo[0], box.hi[1]},
    };
    for (const auto& c : cell.affine) {
        poly = clip_polygon(poly, c.a[0], c.a[1], c.b);
        if (poly.size() < 3) return 0.0;
    }
    return polygon_area(poly);
}

// Line y = alpha*s + beta in the (arg, var) plane of a parabolic cell.
struct BoundLine {
    double alpha = 0.0;
    double beta = 0.0;
    double at(double s) const { return alpha * s + beta; }
};

// Area of {(s, y) : bounds hold, y >= s^2} by vertical slab decomposition.
// Breakpoints cover every pairwise crossing, so on each open slab the active
// lower and upper envelopes are single curves and the slab integral is exact.
double parabolic_measure(const Cell& cell, const Box& box) {
    const int u = cell.para_arg;
    const int v = cell.para_var;

    double s_lo = box.lo[u];
    double s_hi = box.hi[u];
    std::vector<BoundLine> lower{{0.0, box.lo[v]}};
    std::vector<BoundLine> upper{{0.0, box.hi[v]}};

    for (const auto& c : cell.affine) {
        const double au = c.a[u];
        const double av = c.a[v];
        if (av > 0.0) {
            lower.push_back({-au / av, -c.b / av});
        } else if (av < 0.0) {
            upper.push_back({-au / av, -c.b / av});
        } else if (au > 0.0) {
            s_lo = std::max(s_lo, -c.b / au);
        } else if (au < 0.0) {
            s_hi = std::min(s_hi, -c.b / au);
        } else if (c.b < 0.0) {
            return 0.0;
        }
    }
    if (s_hi <= s_lo) return 0.0;

    std::vector<double> cuts{s_lo, s_hi};
    auto add_cut = [&](double s) {
        if (s > s_lo && s < s_hi) cuts.push_back(s);
    };
    std::vector<BoundLine> lines = lower;
    lines.insert(lines.end(), upper.begin(), upper.end());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double da = lines[i].alpha - lines[j].alpha;
            if (da != 0.0) add_cut((lines[j].beta - lines[i].beta) / da);
        }
        // s^2 = alpha*s + beta
        const double disc = lines[i].alpha * lines[i].alpha + 4.0 * lines[i].beta;
        if (disc >= 0.0) {
            const double root = std::sqrt(disc);
            add_cut(0.5 * (lines[i].alpha - root));
            add_cut(0.5 * (lines[i].alpha + root));
        }
    }
    std::sort(cuts.begin(), cuts.end());

    double area = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double s0 = cuts[k];
        const double s1 = cuts[k + 1];
        if (s1 - s0 < 1e-15) continue;
        const double sm = 0.5 * (s0 + s1);

        const auto top = *std::min_element(
            upper.begin(), upper.end(),
            [&](const BoundLine& x, const BoundLine& y) { return x.at(sm) < y.at(sm); });
        const auto bot = *std::max_element(
            lower.begin(), lower.end(),
            [&](const BoundLine& x, const BoundLine& y) { return x.at(sm) < y.at(sm); });

        if (sm * sm >= bot.at(sm)) {
            // parabola is the active floor
            if (top.at(sm) <= sm * sm) continue;
            area += 0.5 * top.alpha * (s1 * s1 - s0 * s0) + top.beta * (s1 - s0) -
                    (s1 * s1 * s1 - s0 * s0 * s0) / 3.0;
        } else {
            if (top.at(sm) <= bot.at(sm)) continue;
            const double g0 = top.at(s0) - bot.at(s0);
            const double g1 = top.at(s1) - bot.at(s1);
            area += 0.5 * (g0 + g1) * (s1 - s0);
        }
    }
    return std::max(0.0, area);
}

double polytope_measure(const Cell& cell, const Box& box) {
    std::vector<Tetrahedron> tets =
        box_tetrahedra({box.lo[0], box.lo[1], box.lo[2]}, {box.hi[0], box.hi[1], box.hi[2]});
    for (const auto& c : cell.affine) {
        std::vector<Tetrahedron> kept;
        for (const auto& t : tets) {
            auto parts = clip_tetrahedron(t, {c.a[0], c.a[1], c.a[2]}, c.b);
            kept.insert(kept.end(), parts.begin(), parts.end());
        }
        tets = std::move(kept);
        if (tets.empty()) return 0.0;
    }
    double vol = 0.0;
    for (const auto& t : tets) vol += tetrahedron_volume(t);
    return vol;
}

double cell_measure(const Cell& cell, const Box& box) {
    switch (box.dim) {
        case 1:
            if (cell.has_parabola())
                throw std::logic_error("parabolic constraint in a 1D cell");
            return interval_measure(cell, box);
        case 2:
            return cell.has_parabola() ? parabolic_measure(cell, box)
                                       : polygon_measure(cell, box);
        case 3:
            if (cell.has_parabola())
                throw std::logic_error("parabolic constraint in a 3D cell");
            return polytope_measure(cell, box);
        default:
            throw std::logic_error("unsupported cell dimension");
    }
}

}  // namespace

VolumeEstimate exact_volume_with_scale(Family f, RegionId r, double scale, LdivMode mode) {
    const ConstraintSet cs = region_constraints(f, r, mode);
    const Box box = parameter_box(f);
    double measure = 0.0;
    for (const auto& cell : cs.cells) measure += cell_measure(cell, box);

    VolumeEstimate out;
    out.value = scale * measure;
    out.method = VolumeMethod::exact;
    return out;
}

VolumeEstimate exact_volume(Family f, RegionId r, LdivMode mode) {
    return exact_volume_with_scale(f, r, metric_scale(f), mode);
}

std::string volume_method_name(VolumeMethod m) {
    return m == VolumeMethod::exact ? "exact" : "mc";
}

std::string chart_status_name(ChartStatus s) {
    switch (s) {
        case ChartStatus::consistent: return "consistent";
        case ChartStatus::discrepant: return "discrepant";
        case ChartStatus::unreported: return "unreported";
    }
    return "unreported";
}

}  // namespace pauligeo
