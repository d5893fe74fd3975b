#include "pauligeo/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pauligeo {

namespace {

struct Embedding {
    // e = A x + c, columns of A laid out per parameter
    std::array<std::array<double, 3>, 3> columns{};
    std::array<double, 3> offset{};
};

Embedding embedding_of(Family f) {
    switch (f) {
        case Family::axial:
            return {{{{1, 0, 0}}}, {0, 0, 0}};
        case Family::pair_zero:
            return {{{{1, 1, 0}}}, {0, 0, 0}};
        case Family::depolarizing:
            return {{{{1, 1, 1}}}, {0, 0, 0}};
        case Family::two_distinct_zero:
            return {{{{1, 0, 0}, {0, 1, 0}}}, {0, 0, 0}};
        case Family::degenerate_pair:
            return {{{{1, 1, 0}, {0, 0, 1}}}, {0, 0, 0}};
        case Family::two_pauli:
            return {{{{-1, -1, -2}}}, {1, 1, 1}};
        case Family::dephasing:
            return {{{{0, -2, -2}}}, {1, 1, 1}};
        case Family::general:
            return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {0, 0, 0}};
    }
    throw std::logic_error("unhandled family");
}

// Closed forms stated alongside the volume elements; families without a
// stated constant are left unchecked here and pinned in tests instead.
const std::map<Family, double> kKnownScales = {
    {Family::axial, 0.5},
    {Family::pair_zero, std::sqrt(2.0) / 2.0},
    {Family::depolarizing, std::sqrt(3.0) / 2.0},
    {Family::two_distinct_zero, 0.25},
    {Family::degenerate_pair, std::sqrt(2.0) / 4.0},
    {Family::general, 0.125},
};

Cell box_cell(const Box& box) {
    Cell c;
    for (int i = 0; i < box.dim; ++i) {
        AffineConstraint lo{};
        lo.a[static_cast<size_t>(i)] = 1.0;
        lo.b = -box.lo[static_cast<size_t>(i)];
        AffineConstraint hi{};
        hi.a[static_cast<size_t>(i)] = -1.0;
        hi.b = box.hi[static_cast<size_t>(i)];
        c.affine.push_back(lo);
        c.affine.push_back(hi);
    }
    return c;
}

Cell& add(Cell& c, double a1, double a2, double a3, double b) {
    c.affine.push_back({{a1, a2, a3}, b});
    return c;
}

// 1D helper: the interval [lo, hi] clipped against the box bounds.
Cell interval_cell(const Box& box, double lo, double hi) {
    Cell c = box_cell(box);
    add(c, 1, 0, 0, -lo);
    add(c, -1, 0, 0, hi);
    return c;
}

ConstraintSet intervals(const Box& box, std::initializer_list<std::pair<double, double>> parts) {
    ConstraintSet cs;
    cs.dim = 1;
    for (const auto& [lo, hi] : parts) cs.cells.push_back(interval_cell(box, lo, hi));
    return cs;
}

ConstraintSet empty_set(int dim) {
    ConstraintSet cs;
    cs.dim = dim;
    return cs;
}

bool is_tlg_region(RegionId r) {
    switch (r) {
        case RegionId::tlg:
        case RegionId::pt_tlg:
        case RegionId::cpt_tlg:
        case RegionId::ebc_tlg:
        case RegionId::pdiv_tlg:
        case RegionId::cpdiv_tlg:
        case RegionId::ldiv_tlg:
            return true;
        default:
            return false;
    }
}

// The non-TLG region a TLG intersection is built from.
RegionId tlg_base(RegionId r) {
    switch (r) {
        case RegionId::pt_tlg:
            return RegionId::pt;
        case RegionId::cpt_tlg:
            return RegionId::cpt;
        case RegionId::ebc_tlg:
            return RegionId::ebc;
        case RegionId::pdiv_tlg:
            return RegionId::pdiv;
        case RegionId::cpdiv_tlg:
            return RegionId::cpdiv;
        case RegionId::ldiv_tlg:
            return RegionId::ldiv;
        default:
            return r;
    }
}

ConstraintSet axial_constraints(const Box& box, RegionId r, LdivMode mode) {
    switch (r) {
        case RegionId::pt:
        case RegionId::cpt:
        case RegionId::ebc:
        case RegionId::pdiv:
        case RegionId::cpdiv:
            return intervals(box, {{-1, 1}});
        case RegionId::ldiv:
            return mode == LdivMode::literal ? intervals(box, {{0, 1}}) : intervals(box, {{-1, 1}});
        default:
            // every TLG intersection collapses to the nonnegative half
            return intervals(box, {{0, 1}});
    }
}

ConstraintSet pair_zero_constraints(const Box& box, RegionId r, LdivMode) {
    switch (r) {
        case RegionId::pt:
            return intervals(box, {{-1, 1}});
        case RegionId::cpt:
        case RegionId::ebc:
        case RegionId::pdiv:
            return intervals(box, {{-0.5, 0.5}});
        case RegionId::tlg:
        case RegionId::pt_tlg:
            return intervals(box, {{0, 1}});
        case RegionId::cpt_tlg:
        case RegionId::ebc_tlg:
        case RegionId::pdiv_tlg:
            return intervals(box, {{0, 0.5}});
        default:
            // no channel in this family is CP- or L-divisible on a set of
            // positive measure (both eigenvalues vanish together only at 0)
            return empty_set(1);
    }
}

ConstraintSet depolarizing_constraints(const Box& box, RegionId r, LdivMode) {
    switch (r) {
        case RegionId::pt:
            return intervals(box, {{-1, 1}});
        case RegionId::cpt:
            return intervals(box, {{-1.0 / 3.0, 1}});
        case RegionId::ebc:
            return intervals(box, {{-1.0 / 3.0, 1.0 / 3.0}});
        case RegionId::ebc_tlg:
            return intervals(box, {{0, 1.0 / 3.0}});
        default:
            // TLG and all divisibility regions coincide with [0, 1]
            return intervals(box, {{0, 1}});
    }
}

ConstraintSet two_pauli_constraints(const Box& box, RegionId r, LdivMode mode) {
    switch (r) {
        case RegionId::pt:
        case RegionId::cpt:
            return intervals(box, {{0, 1}});
        case RegionId::ebc:
            return intervals(box, {{0.5, 1}});
        case RegionId::tlg:
        case RegionId::pt_tlg:
        case RegionId::cpt_tlg:
        case RegionId::pdiv:
        case RegionId::pdiv_tlg:
            return intervals(box, {{0, 0.5}});
        case RegionId::ebc_tlg:
            // single entanglement-breaking point compatible with the
            // time-local-generator condition
            return intervals(box, {{0.5, 0.5}});
        case RegionId::cpdiv:
        case RegionId::cpdiv_tlg:
        case RegionId::ldiv:
        case RegionId::ldiv_tlg:
            (void)mode;
            return empty_set(1);
    }
    throw std::logic_error("unhandled region");
}

ConstraintSet dephasing_constraints(const Box& box, RegionId r, LdivMode) {
    switch (r) {
        case RegionId::pt:
        case RegionId::cpt:
        case RegionId::pdiv:
        case RegionId::cpdiv:
        case RegionId::ldiv:
            return intervals(box, {{0, 1}});
        case RegionId::ebc:
        case RegionId::ebc_tlg:
            // the only entanglement-breaking dephasing channel
            return intervals(box, {{0.5, 0.5}});
        default:
            return intervals(box, {{0, 0.5}});
    }
}

ConstraintSet two_distinct_zero_constraints(const Box& box, RegionId r, LdivMode) {
    ConstraintSet cs;
    cs.dim = 2;
    switch (r) {
        case RegionId::pt:
            cs.cells.push_back(box_cell(box));
            return cs;
        case RegionId::cpt:
        case RegionId::ebc:
        case RegionId::pdiv: {
            // |l| + |e| <= 1, a convex diamond
            Cell c = box_cell(box);
            add(c, -1, -1, 0, 1);
            add(c, -1, 1, 0, 1);
            add(c, 1, -1, 0, 1);
            add(c, 1, 1, 0, 1);
            cs.cells.push_back(c);
            return cs;
        }
        case RegionId::tlg:
        case RegionId::pt_tlg: {
            Cell c = box_cell(box);
            add(c, 1, 0, 0, 0);
            add(c, 0, 1, 0, 0);
            cs.cells.push_back(c);
            return cs;
        }
        case RegionId::cpt_tlg:
        case RegionId::ebc_tlg:
        case RegionId::pdiv_tlg: {
            Cell c = box_cell(box);
            add(c, 1, 0, 0, 0);
            add(c, 0, 1, 0, 0);
            add(c, -1, -1, 0, 1);
            cs.cells.push_back(c);
            return cs;
        }
        default:
            // CP- and L-divisible channels of this family lie on the axes
            return empty_set(2);
    }
}

ConstraintSet degenerate_pair_constraints(const Box& box, RegionId r, LdivMode mode) {
    ConstraintSet cs;
    cs.dim = 2;
    Cell c = box_cell(box);
    switch (r) {
        case RegionId::pt:
            break;
        case RegionId::cpt:
            // 2|l| <= 1 + e, e <= 1
            add(c, 0, -1, 0, 1);
            add(c, -2, 1, 0, 1);
            add(c, 2, 1, 0, 1);
            break;
        case RegionId::ebc:
            // 2|l| + |e| <= 1
            add(c, -2, -1, 0, 1);
            add(c, -2, 1, 0, 1);
            add(c, 2, -1, 0, 1);
            add(c, 2, 1, 0, 1);
            break;
        case RegionId::tlg:
        case RegionId::pt_tlg:
            add(c, 1, 0, 0, 0);
            add(c, 0, 1, 0, 0);
            break;
        case RegionId::cpt_tlg:
        case RegionId::pdiv_tlg:
            add(c, 1, 0, 0, 0);
            add(c, 0, 1, 0, 0);
            add(c, 0, -1, 0, 1);
            add(c, -2, 1, 0, 1);
            break;
        case RegionId::ebc_tlg:
            add(c, 1, 0, 0, 0);
            add(c, 0, 1, 0, 0);
            add(c, -2, -1, 0, 1);
            break;
        case RegionId::pdiv:
            add(c, 0, 1, 0, 0);
            add(c, 0, -1, 0, 1);
            add(c, -2, 1, 0, 1);
            add(c, 2, 1, 0, 1);
            break;
        case RegionId::cpdiv:
            // l^2 <= e <= 1
            add(c, 0, -1, 0, 1);
            c.para_var = 1;
            c.para_arg = 0;
            break;
        case RegionId::ldiv:
            if (mode == LdivMode::literal) add(c, 1, 0, 0, 0);
            add(c, 0, -1, 0, 1);
            c.para_var = 1;
            c.para_arg = 0;
            break;
        case RegionId::cpdiv_tlg:
        case RegionId::ldiv_tlg:
            add(c, 1, 0, 0, 0);
            add(c, 0, -1, 0, 1);
            c.para_var = 1;
            c.para_arg = 0;
            break;
    }
    cs.cells.push_back(c);
    return cs;
}

ConstraintSet general_constraints(const Box& box, RegionId r, LdivMode) {
    ConstraintSet cs;
    cs.dim = 3;
    auto cpt_planes = [](Cell& c) {
        add(c, 1, 1, 1, 1);
        add(c, 1, -1, -1, 1);
        add(c, -1, 1, -1, 1);
        add(c, -1, -1, 1, 1);
    };
    auto positive_orthant = [](Cell& c) {
        add(c, 1, 0, 0, 0);
        add(c, 0, 1, 0, 0);
        add(c, 0, 0, 1, 0);
    };
    switch (r) {
        case RegionId::pt: {
            cs.cells.push_back(box_cell(box));
            return cs;
        }
        case RegionId::cpt: {
            Cell c = box_cell(box);
            cpt_planes(c);
            cs.cells.push_back(c);
            return cs;
        }
        case RegionId::ebc: {
            // the octahedron sum |l_k| <= 1; it lies inside the
            // complete-positivity tetrahedron, so no extra planes
            Cell c = box_cell(box);
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1})
                    for (int s3 : {-1, 1}) add(c, -s1, -s2, -s3, 1);
            cs.cells.push_back(c);
            return cs;
        }
        case RegionId::tlg:
        case RegionId::pt_tlg: {
            Cell c = box_cell(box);
            positive_orthant(c);
            cs.cells.push_back(c);
            return cs;
        }
        case RegionId::cpt_tlg:
        case RegionId::pdiv_tlg: {
            Cell c = box_cell(box);
            positive_orthant(c);
            cpt_planes(c);
            cs.cells.push_back(c);
            return cs;
        }
        case RegionId::ebc_tlg: {
            Cell c = box_cell(box);
            positive_orthant(c);
            add(c, -1, -1, -1, 1);
            cs.cells.push_back(c);
            return cs;
        }
        case RegionId::pdiv: {
            // orthants with an even number of negative coordinates,
            // intersected with the complete-positivity tetrahedron
            const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
            for (const auto& s : signs) {
                Cell c = box_cell(box);
                add(c, s[0], 0, 0, 0);
                add(c, 0, s[1], 0, 0);
                add(c, 0, 0, s[2], 0);
                cpt_planes(c);
                cs.cells.push_back(c);
            }
            return cs;
        }
        case RegionId::cpdiv:
        case RegionId::ldiv:
        case RegionId::cpdiv_tlg:
        case RegionId::ldiv_tlg:
            // cubic in the eigenvalues; no affine-plus-parabola realization
            throw UnsupportedRegion("region has no exact cell decomposition for the general family");
    }
    throw std::logic_error("unhandled region");
}

}  // namespace

double Box::volume() const {
    double v = 1.0;
    for (int i = 0; i < dim; ++i) v *= hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)];
    return v;
}

double AffineConstraint::eval(const std::vector<double>& x) const {
    double v = b;
    for (size_t i = 0; i < x.size(); ++i) v += a[i] * x[i];
    return v;
}

bool Cell::contains(const std::vector<double>& x, double tol) const {
    for (const auto& h : affine)
        if (h.eval(x) < -tol) return false;
    if (has_parabola()) {
        const double s = x[static_cast<size_t>(para_arg)];
        if (x[static_cast<size_t>(para_var)] < s * s - tol) return false;
    }
    return true;
}

bool ConstraintSet::contains(const std::vector<double>& x, double tol) const {
    return std::any_of(cells.begin(), cells.end(),
                       [&](const Cell& c) { return c.contains(x, tol); });
}

int family_dimension(Family f) {
    switch (f) {
        case Family::two_distinct_zero:
        case Family::degenerate_pair:
            return 2;
        case Family::general:
            return 3;
        default:
            return 1;
    }
}

PauliEigenvalues embed(Family f, const FamilyParams& x) {
    const int d = family_dimension(f);
    if (static_cast<int>(x.values.size()) != d)
        throw DimensionMismatch("expected " + std::to_string(d) + " parameters for " +
                                family_name(f));
    const Embedding em = embedding_of(f);
    std::array<double, 3> e = em.offset;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < 3; ++i)
            e[static_cast<size_t>(i)] +=
                em.columns[static_cast<size_t>(j)][static_cast<size_t>(i)] *
                x.values[static_cast<size_t>(j)];
    return {e[0], e[1], e[2]};
}

double metric_scale(Family f) {
    const int d = family_dimension(f);
    const Embedding em = embedding_of(f);
    // m = J^T (1/4 I) J, a d x d Gram matrix
    double m[3][3] = {};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k)
                dot += em.columns[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                       em.columns[static_cast<size_t>(j)][static_cast<size_t>(k)];
            m[i][j] = 0.25 * dot;
        }
    double det = 0.0;
    if (d == 1) {
        det = m[0][0];
    } else if (d == 2) {
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    } else {
        det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    const double scale = std::sqrt(det);
    if (auto it = kKnownScales.find(f); it != kKnownScales.end())
        if (std::abs(scale - it->second) > 1e-14)
            throw std::logic_error("metric scale disagrees with its closed form");
    return scale;
}

Box parameter_box(Family f) {
    Box box;
    box.dim = family_dimension(f);
    const bool unit = (f == Family::two_pauli || f == Family::dephasing);
    for (int i = 0; i < box.dim; ++i) {
        box.lo[static_cast<size_t>(i)] = unit ? 0.0 : -1.0;
        box.hi[static_cast<size_t>(i)] = 1.0;
    }
    return box;
}

ConstraintSet region_constraints(Family f, RegionId r, LdivMode mode) {
    const Box box = parameter_box(f);
    switch (f) {
        case Family::axial:
            return axial_constraints(box, r, mode);
        case Family::pair_zero:
            return pair_zero_constraints(box, r, mode);
        case Family::depolarizing:
            return depolarizing_constraints(box, r, mode);
        case Family::two_distinct_zero:
            return two_distinct_zero_constraints(box, r, mode);
        case Family::degenerate_pair:
            return degenerate_pair_constraints(box, r, mode);
        case Family::two_pauli:
            return two_pauli_constraints(box, r, mode);
        case Family::dephasing:
            return dephasing_constraints(box, r, mode);
        case Family::general:
            return general_constraints(box, r, mode);
    }
    throw std::logic_error("unhandled family");
}

bool region_contains(Family f, RegionId r, LdivMode mode, const FamilyParams& x) {
    const PauliEigenvalues e = embed(f, x);
    if (is_tlg_region(r) && !is_tlg_obtainable(e)) return false;
    switch (tlg_base(r)) {
        case RegionId::pt:
            return is_positive_tp(e);
        case RegionId::tlg:
            return true;
        case RegionId::cpt:
            return is_cptp(e);
        case RegionId::ebc:
            return is_entanglement_breaking(e);
        case RegionId::pdiv:
            return is_cptp(e) && is_p_divisible(e);
        case RegionId::cpdiv:
            return is_cptp(e) && is_cp_divisible(e);
        case RegionId::ldiv:
            return is_cptp(e) && is_l_divisible(e, mode);
        default:
            throw std::logic_error("unhandled region");
    }
}

std::string family_name(Family f) {
    switch (f) {
        case Family::axial:
            return "axial";
        case Family::pair_zero:
            return "pair-zero";
        case Family::depolarizing:
            return "depolarizing";
        case Family::two_distinct_zero:
            return "two-distinct-zero";
        case Family::degenerate_pair:
            return "degenerate-pair";
        case Family::two_pauli:
            return "two-pauli";
        case Family::dephasing:
            return "dephasing";
        case Family::general:
            return "general";
    }
    throw std::logic_error("unhandled family");
}

std::string region_name(RegionId r) {
    switch (r) {
        case RegionId::pt:
            return "pt";
        case RegionId::cpt:
            return "cpt";
        case RegionId::ebc:
            return "ebc";
        case RegionId::tlg:
            return "tlg";
        case RegionId::pt_tlg:
            return "pt-tlg";
        case RegionId::cpt_tlg:
            return "cpt-tlg";
        case RegionId::ebc_tlg:
            return "ebc-tlg";
        case RegionId::pdiv:
            return "pdiv";
        case RegionId::cpdiv:
            return "cpdiv";
        case RegionId::ldiv:
            return "ldiv";
        case RegionId::pdiv_tlg:
            return "pdiv-tlg";
        case RegionId::cpdiv_tlg:
            return "cpdiv-tlg";
        case RegionId::ldiv_tlg:
            return "ldiv-tlg";
    }
    throw std::logic_error("unhandled region");
}

std::string ldiv_mode_name(LdivMode mode) {
    return mode == LdivMode::literal ? "literal" : "cpdiv";
}

Family family_from_name(const std::string& name) {
    for (Family f : all_families())
        if (family_name(f) == name) return f;
    throw Error("unknown family: " + name);
}

RegionId region_from_name(const std::string& name) {
    for (RegionId r : all_regions())
        if (region_name(r) == name) return r;
    throw Error("unknown region: " + name);
}

LdivMode ldiv_mode_from_name(const std::string& name) {
    if (name == "literal") return LdivMode::literal;
    if (name == "cpdiv") return LdivMode::cpdiv_equivalent;
    throw Error("unknown L-divisibility mode: " + name);
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = {
        Family::axial,          Family::pair_zero,       Family::depolarizing,
        Family::two_distinct_zero, Family::degenerate_pair, Family::two_pauli,
        Family::dephasing,      Family::general,
    };
    return fams;
}

const std::vector<RegionId>& all_regions() {
    static const std::vector<RegionId> regions = {
        RegionId::pt,      RegionId::cpt,      RegionId::ebc,      RegionId::tlg,
        RegionId::pt_tlg,  RegionId::cpt_tlg,  RegionId::ebc_tlg,  RegionId::pdiv,
        RegionId::cpdiv,   RegionId::ldiv,     RegionId::pdiv_tlg, RegionId::cpdiv_tlg,
        RegionId::ldiv_tlg,
    };
    return regions;
}

}  // namespace pauligeo
