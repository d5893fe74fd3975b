#ifndef PAULIGEO_FAMILIES_HPP
#define PAULIGEO_FAMILIES_HPP

#include <array>
#include <string>
#include <vector>

#include "pauligeo/channel.hpp"
#include "pauligeo/error.hpp"

namespace pauligeo {

enum class Family {
    axial,               // (l, 0, 0)
    pair_zero,           // (l, l, 0)
    depolarizing,        // (l, l, l)
    two_distinct_zero,   // (l, e, 0)
    degenerate_pair,     // (l, l, e)
    two_pauli,           // (1-p, 1-p, 1-2p), p in [0,1]
    dephasing,           // (1, 1-2p, 1-2p), p in [0,1]
    general,             // (l1, l2, l3)
};

enum class RegionId {
    pt,
    cpt,
    ebc,
    tlg,
    pt_tlg,
    cpt_tlg,
    ebc_tlg,
    pdiv,
    cpdiv,
    ldiv,
    pdiv_tlg,
    cpdiv_tlg,
    ldiv_tlg,
};

struct FamilyParams {
    std::vector<double> values;
};

struct Box {
    int dim = 0;
    std::array<double, 3> lo{};
    std::array<double, 3> hi{};
    double volume() const;
};

// One affine inequality a.x + b >= 0 on family parameters.
struct AffineConstraint {
    std::array<double, 3> a{};
    double b = 0.0;
    double eval(const std::vector<double>& x) const;
};

// Conjunctive cell: affine inequalities plus at most one parabolic
// inequality x[para_var] >= x[para_arg]^2.  Cells carry their own box
// bounds, so each cell is a self-contained region description.
struct Cell {
    std::vector<AffineConstraint> affine;
    int para_var = -1;
    int para_arg = -1;
    bool has_parabola() const { return para_var >= 0; }
    bool contains(const std::vector<double>& x, double tol = kRegionTol) const;
};

// Union of cells; cells overlap only on measure-zero sets.  Cells realize
// the closure of the region interior (lower-dimensional components carry no
// volume and are kept only where a region is itself degenerate).
struct ConstraintSet {
    int dim = 0;
    std::vector<Cell> cells;
    bool contains(const std::vector<double>& x, double tol = kRegionTol) const;
};

int family_dimension(Family f);
PauliEigenvalues embed(Family f, const FamilyParams& x);

// Density converting parameter-space Lebesgue measure to Hilbert-Schmidt
// volume: sqrt(det(J^T g J)) with g = (1/4) identity and J the embedding
// Jacobian.  Computed from the Jacobian, then checked against the known
// closed forms where one exists.
double metric_scale(Family f);

Box parameter_box(Family f);

ConstraintSet region_constraints(Family f, RegionId r, LdivMode mode);

// Membership through the channel-core predicates composed with embed; kept
// deliberately independent of region_constraints so the two routes can be
// checked against each other.
bool region_contains(Family f, RegionId r, LdivMode mode, const FamilyParams& x);

struct CrossSectionRegion {
    std::string label;   // "cpt" or "cpt-tlg"
    std::vector<std::array<double, 3>> vertices;
};

struct CrossSectionCopy {
    std::string plane;
    std::vector<CrossSectionRegion> regions;
};

// Figure geometry: per symmetry copy, the complete-positivity boundary and
// its time-local-generator sub-region, as ordered vertex lists in
// eigenvalue space.  Two-parameter families yield polygons, one-parameter
// families segments; the three-parameter family has no planar section and
// yields an empty list.
std::vector<CrossSectionCopy> cross_section(Family f);

std::string family_name(Family f);
std::string region_name(RegionId r);
std::string ldiv_mode_name(LdivMode mode);
Family family_from_name(const std::string& name);
RegionId region_from_name(const std::string& name);
LdivMode ldiv_mode_from_name(const std::string& name);

const std::vector<Family>& all_families();
const std::vector<RegionId>& all_regions();

}  // namespace pauligeo

#endif
