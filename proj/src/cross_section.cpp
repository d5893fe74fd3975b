#include <array>
#include <string>
#include <vector>

#include "pauligeo/families.hpp"

namespace pauligeo {

namespace {

using Point = std::array<double, 3>;

// Cyclic right shift by k: the symmetry copies of each figure come from
// permuting the three eigenvalue axes.
Point shift(const Point& v, int k) {
    Point out{};
    for (int i = 0; i < 3; ++i) out[(i + k) % 3] = v[i];
    return out;
}

std::vector<Point> shift_all(const std::vector<Point>& vs, int k) {
    std::vector<Point> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(shift(v, k));
    return out;
}

CrossSectionCopy make_copy(const std::string& plane, const std::vector<Point>& cpt,
                           const std::vector<Point>& tlg, int k) {
    CrossSectionCopy copy;
    copy.plane = plane;
    copy.regions.push_back({"cpt", shift_all(cpt, k)});
    copy.regions.push_back({"cpt-tlg", shift_all(tlg, k)});
    return copy;
}

// Three copies of a base section, in the given plane-label order with the
// matching axis shifts.
std::vector<CrossSectionCopy> three_copies(const std::array<std::string, 3>& planes,
                                           const std::array<int, 3>& shifts,
                                           const std::vector<Point>& cpt,
                                           const std::vector<Point>& tlg) {
    std::vector<CrossSectionCopy> out;
    for (int i = 0; i < 3; ++i)
        out.push_back(make_copy(planes[i], cpt, tlg, shifts[i]));
    return out;
}

const std::array<std::string, 3> kCopyLabels{"copy-1", "copy-2", "copy-3"};

}  // namespace

std::vector<CrossSectionCopy> cross_section(Family f) {
    switch (f) {
        case Family::axial:
            return three_copies(kCopyLabels, {0, 1, 2},
                                {{-1, 0, 0}, {1, 0, 0}},
                                {{0, 0, 0}, {1, 0, 0}});
        case Family::pair_zero:
            return three_copies(kCopyLabels, {0, 1, 2},
                                {{-0.5, -0.5, 0}, {0.5, 0.5, 0}},
                                {{0, 0, 0}, {0.5, 0.5, 0}});
        case Family::depolarizing:
            return {make_copy("lambda1=lambda2=lambda3",
                              {{-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0}, {1, 1, 1}},
                              {{0, 0, 0}, {1, 1, 1}}, 0)};
        case Family::two_distinct_zero:
            // Base section lives in the plane lambda3 = 0; the figure lists
            // the lambda1 = 0 copy first.
            return three_copies({"lambda1=0", "lambda2=0", "lambda3=0"}, {1, 2, 0},
                                {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}},
                                {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
        case Family::degenerate_pair:
            return three_copies({"lambda1=lambda2", "lambda2=lambda3", "lambda3=lambda1"},
                                {0, 1, 2},
                                {{0, 0, -1}, {1, 1, 1}, {-1, -1, 1}},
                                {{0, 0, 0}, {0.5, 0.5, 0}, {1, 1, 1}, {0, 0, 1}});
        case Family::two_pauli:
            return three_copies(kCopyLabels, {0, 1, 2},
                                {{1, 1, 1}, {0, 0, -1}},
                                {{1, 1, 1}, {0.5, 0.5, 0}});
        case Family::dephasing:
            return three_copies(kCopyLabels, {0, 1, 2},
                                {{1, 1, 1}, {1, -1, -1}},
                                {{1, 1, 1}, {1, 0, 0}});
        case Family::general:
            return {};  // nothing lower-dimensional to slice
    }
    return {};
}

}  // namespace pauligeo
