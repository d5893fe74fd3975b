#include <doctest.h>

#include <cmath>
#include <vector>

#include "pauligeo/geometry.hpp"
#include "pauligeo/rng.hpp"

using namespace pauligeo;

namespace {

double total_volume(const std::vector<Tetrahedron>& tets) {
    double v = 0.0;
    for (const auto& t : tets) v += tetrahedron_volume(t);
    return v;
}

Vec3 random_point(std::uint64_t seed, std::uint64_t i) {
    return {counter_uniform(seed, 3 * i) * 2 - 1, counter_uniform(seed, 3 * i + 1) * 2 - 1,
            counter_uniform(seed, 3 * i + 2) * 2 - 1};
}

}  // namespace

TEST_CASE("shoelace area") {
    CHECK(polygon_area({{0, 0}, {1, 0}, {1, 1}, {0, 1}}) == doctest::Approx(1.0));
    CHECK(polygon_area({{0, 0}, {2, 0}, {0, 1}}) == doctest::Approx(1.0));
    // orientation-independent
    CHECK(polygon_area({{0, 1}, {2, 0}, {0, 0}}) == doctest::Approx(1.0));
    CHECK(polygon_area({{0, 0}, {1, 0}}) == 0.0);
}

TEST_CASE("half-plane clipping") {
    const std::vector<Vec2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

    // keep x + y <= 1, i.e. -x - y + 1 >= 0
    auto clipped = clip_polygon(square, -1, -1, 1);
    CHECK(polygon_area(clipped) == doctest::Approx(0.5));

    // a plane missing the polygon entirely keeps everything / nothing
    CHECK(polygon_area(clip_polygon(square, 1, 0, 5)) == doctest::Approx(1.0));
    CHECK(clip_polygon(square, 1, 0, -5).size() < 3);

    // successive clips commute on the area
    auto a = clip_polygon(clip_polygon(square, -1, 0, 0.75), 0, -1, 0.5);
    auto b = clip_polygon(clip_polygon(square, 0, -1, 0.5), -1, 0, 0.75);
    CHECK(polygon_area(a) == doctest::Approx(polygon_area(b)));
    CHECK(polygon_area(a) == doctest::Approx(0.375));
}

TEST_CASE("tetrahedron volume") {
    const Tetrahedron corner{{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}};
    CHECK(tetrahedron_volume(corner) == doctest::Approx(1.0 / 6.0));

    const Tetrahedron flat{{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 1, 0}}};
    CHECK(tetrahedron_volume(flat) == 0.0);
}

TEST_CASE("box decomposition covers the box") {
    const auto tets = box_tetrahedra({-1, -0.5, 0}, {1, 1.5, 3});
    CHECK(tets.size() == 6);
    CHECK(total_volume(tets) == doctest::Approx(2.0 * 2.0 * 3.0).epsilon(1e-13));
    for (const auto& t : tets) CHECK(tetrahedron_volume(t) > 0.0);
}

TEST_CASE("clipping a box by known planes") {
    auto clip_all = [](std::vector<Tetrahedron> tets, const Vec3& n, double b) {
        std::vector<Tetrahedron> out;
        for (const auto& t : tets) {
            auto parts = clip_tetrahedron(t, n, b);
            out.insert(out.end(), parts.begin(), parts.end());
        }
        return out;
    };

    // unit cube, keep x + y + z <= 1.5: half by symmetry
    auto tets = clip_all(box_tetrahedra({0, 0, 0}, {1, 1, 1}), {-1, -1, -1}, 1.5);
    CHECK(total_volume(tets) == doctest::Approx(0.5).epsilon(1e-12));

    // keep x + y + z <= 1: the corner simplex
    tets = clip_all(box_tetrahedra({0, 0, 0}, {1, 1, 1}), {-1, -1, -1}, 1.0);
    CHECK(total_volume(tets) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    // double clip: intersect with x >= 0.25 as well
    tets = clip_all(tets, {1, 0, 0}, -0.25);
    CHECK(total_volume(tets) == doctest::Approx(std::pow(0.75, 3) / 6.0).epsilon(1e-12));
}

TEST_CASE("tetrahedron clipping conserves volume") {
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const Tetrahedron t{{random_point(41, 4 * i), random_point(41, 4 * i + 1),
                             random_point(41, 4 * i + 2), random_point(41, 4 * i + 3)}};
        const double vol = tetrahedron_volume(t);

        const Vec3 n = random_point(43, i);
        const double b = counter_uniform(47, i) * 2 - 1;

        const auto kept = clip_tetrahedron(t, n, b);
        const auto removed = clip_tetrahedron(t, {-n[0], -n[1], -n[2]}, -b);
        const double vk = total_volume(kept);
        const double vr = total_volume(removed);

        CHECK(vk + vr == doctest::Approx(vol).epsilon(1e-9));
        CHECK(vk <= vol + 1e-12);
        CHECK(vr <= vol + 1e-12);
    }
}

TEST_CASE("clipping keeps everything or nothing when the plane misses") {
    const Tetrahedron t{{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}};
    auto kept = clip_tetrahedron(t, {1, 0, 0}, 2.0);  // x >= -2: all inside
    CHECK(total_volume(kept) == doctest::Approx(tetrahedron_volume(t)));
    kept = clip_tetrahedron(t, {1, 0, 0}, -2.0);  // x >= 2: all outside
    CHECK(total_volume(kept) == 0.0);
}
