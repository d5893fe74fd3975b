#ifndef PAULIGEO_GEOMETRY_HPP
#define PAULIGEO_GEOMETRY_HPP

#include <array>
#include <vector>

namespace pauligeo {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

// Keeps the part of a convex polygon with a0*x + a1*y + b >= 0
// (Sutherland-Hodgman against a single half-plane).
std::vector<Vec2> clip_polygon(const std::vector<Vec2>& poly, double a0, double a1, double b);

// Unsigned shoelace area.
double polygon_area(const std::vector<Vec2>& poly);

struct Tetrahedron {
    std::array<Vec3, 4> v;
};

double tetrahedron_volume(const Tetrahedron& t);

// Six-tetrahedra decomposition of an axis-aligned box.
std::vector<Tetrahedron> box_tetrahedra(const Vec3& lo, const Vec3& hi);

// Keeps the part of a tetrahedron with n.x + b >= 0, re-tetrahedralized.
std::vector<Tetrahedron> clip_tetrahedron(const Tetrahedron& t, const Vec3& n, double b);

}  // namespace pauligeo

#endif
