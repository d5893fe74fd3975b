#include "pauligeo/geometry.hpp"

#include <cmath>

namespace pauligeo {

namespace {

// Vertices this close to a clip boundary count as inside, so that volumes
// of closed regions are not eroded by rounding.
constexpr double kClipEps = 1e-12;

Vec2 intersect2(const Vec2& u, const Vec2& v, double gu, double gv) {
    const double t = gu / (gu - gv);
    return {u[0] + t * (v[0] - u[0]), u[1] + t * (v[1] - u[1])};
}

Vec3 intersect3(const Vec3& u, const Vec3& v, double gu, double gv) {
    const double t = gu / (gu - gv);
    return {u[0] + t * (v[0] - u[0]), u[1] + t * (v[1] - u[1]), u[2] + t * (v[2] - u[2])};
}

}  // namespace

std::vector<Vec2> clip_polygon(const std::vector<Vec2>& poly, double a0, double a1, double b) {
    std::vector<Vec2> out;
    const size_t n = poly.size();
    if (n == 0) return out;
    auto g = [&](const Vec2& p) { return a0 * p[0] + a1 * p[1] + b; };
    for (size_t i = 0; i < n; ++i) {
        const Vec2& cur = poly[i];
        const Vec2& nxt = poly[(i + 1) % n];
        const double gc = g(cur);
        const double gn = g(nxt);
        const bool cin = gc >= -kClipEps;
        const bool nin = gn >= -kClipEps;
        if (cin) out.push_back(cur);
        if (cin != nin) out.push_back(intersect2(cur, nxt, gc, gn));
    }
    return out;
}

double polygon_area(const std::vector<Vec2>& poly) {
    const size_t n = poly.size();
    double twice = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(twice);
}

double tetrahedron_volume(const Tetrahedron& t) {
    const Vec3& a = t.v[0];
    double m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = t.v[static_cast<size_t>(i + 1)][static_cast<size_t>(j)] -
                      a[static_cast<size_t>(j)];
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return std::abs(det) / 6.0;
}

std::vector<Tetrahedron> box_tetrahedra(const Vec3& lo, const Vec3& hi) {
    auto corner = [&](int mask) -> Vec3 {
        return {(mask & 1) ? hi[0] : lo[0], (mask & 2) ? hi[1] : lo[1], (mask & 4) ? hi[2] : lo[2]};
    };
    // Kuhn subdivision: six tetrahedra along the main diagonal 000 -> 111,
    // one per permutation order of the axes.
    static const int paths[6][2] = {{1, 3}, {1, 5}, {2, 3}, {2, 6}, {4, 5}, {4, 6}};
    std::vector<Tetrahedron> tets;
    tets.reserve(6);
    for (const auto& p : paths)
        tets.push_back({{corner(0), corner(p[0]), corner(p[0] | p[1]), corner(7)}});
    return tets;
}

std::vector<Tetrahedron> clip_tetrahedron(const Tetrahedron& t, const Vec3& n, double b) {
    double g[4];
    int inside[4];
    int outside[4];
    int ni = 0;
    int no = 0;
    for (int i = 0; i < 4; ++i) {
        g[i] = n[0] * t.v[static_cast<size_t>(i)][0] + n[1] * t.v[static_cast<size_t>(i)][1] +
               n[2] * t.v[static_cast<size_t>(i)][2] + b;
        if (g[i] >= -kClipEps)
            inside[ni++] = i;
        else
            outside[no++] = i;
    }
    std::vector<Tetrahedron> out;
    if (ni == 4) {
        out.push_back(t);
        return out;
    }
    if (ni == 0) return out;

    auto vx = [&](int i) { return t.v[static_cast<size_t>(i)]; };
    auto cut = [&](int i, int o) { return intersect3(vx(i), vx(o), g[i], g[o]); };

    if (ni == 1) {
        const int p = inside[0];
        out.push_back({{vx(p), cut(p, outside[0]), cut(p, outside[1]), cut(p, outside[2])}});
    } else if (ni == 2) {
        // the kept piece is a wedge with two quadrilateral faces
        const int p0 = inside[0];
        const int p1 = inside[1];
        const Vec3 c00 = cut(p0, outside[0]);
        const Vec3 c01 = cut(p0, outside[1]);
        const Vec3 c10 = cut(p1, outside[0]);
        const Vec3 c11 = cut(p1, outside[1]);
        out.push_back({{vx(p0), vx(p1), c00, c01}});
        out.push_back({{vx(p1), c00, c01, c11}});
        out.push_back({{vx(p1), c00, c10, c11}});
    } else {
        // one vertex removed: a frustum, split into three tetrahedra
        const int o = outside[0];
        const int p0 = inside[0];
        const int p1 = inside[1];
        const int p2 = inside[2];
        const Vec3 c0 = cut(p0, o);
        const Vec3 c1 = cut(p1, o);
        const Vec3 c2 = cut(p2, o);
        out.push_back({{vx(p0), vx(p1), vx(p2), c0}});
        out.push_back({{vx(p1), vx(p2), c0, c1}});
        out.push_back({{vx(p2), c0, c1, c2}});
    }
    return out;
}

}  // namespace pauligeo
