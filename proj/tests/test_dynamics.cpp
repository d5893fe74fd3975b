#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pauligeo/channel.hpp"
#include "pauligeo/dynamics.hpp"
#include "pauligeo/error.hpp"
#include "pauligeo/rng.hpp"

using namespace pauligeo;

namespace {

RateSpec tanh_rates() {
    return RateSpec::sampled({[](double) { return 1.0; }, [](double) { return 1.0; },
                              [](double t) { return -std::tanh(t); }});
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / (n - 1));
    return out;
}

}  // namespace

TEST_CASE("semigroup eigenvalues") {
    const auto e = semigroup_eigenvalues({0.0, 0.0, 1.0}, std::log(2.0));
    CHECK(std::abs(e.lambda1 - 0.5) <= 1e-15);
    CHECK(std::abs(e.lambda2 - 0.5) <= 1e-15);
    CHECK(e.lambda3 == 1.0);

    const auto iso = semigroup_eigenvalues({1.0, 1.0, 1.0}, 0.3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(iso[k] - std::exp(-0.6)) <= 1e-15);

    const auto id = semigroup_eigenvalues({0.4, 1.2, 0.9}, 0.0);
    for (int k = 0; k < 3; ++k) CHECK(id[k] == 1.0);

    CHECK_THROWS_AS(semigroup_eigenvalues({-0.1, 0.0, 0.0}, 1.0), NegativeRate);
    CHECK_THROWS_AS(semigroup_eigenvalues({0.1, 0.0, 0.0}, -1.0), NegativeTime);
}

TEST_CASE("rate spec validation") {
    CHECK_THROWS_AS(RateSpec::piecewise({0.5, 1.0}, {{{1.0}, {1.0}, {1.0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(RateSpec::piecewise({0.0}, {{{}, {}, {}}}), std::invalid_argument);
    CHECK_THROWS_AS(RateSpec::piecewise({0.0, 1.0, 1.0}, {{{1.0, 2.0}, {1.0, 2.0}, {1.0, 2.0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(RateSpec::piecewise({0.0, 1.0}, {{{1.0, 2.0}, {1.0}, {1.0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(RateSpec::sampled({nullptr, nullptr, nullptr}), std::invalid_argument);
}

TEST_CASE("piecewise rates integrate bin by bin") {
    const auto rates = RateSpec::piecewise(
        {0.0, 1.0, 2.0}, {{{1.0, 0.5}, {0.0, 2.0}, {0.25, 0.25}}});
    CHECK(rates.rate(0, 0.5) == 1.0);
    CHECK(rates.rate(0, 1.0) == 0.5);   // right-continuous at interior edges
    CHECK(rates.rate(1, 10.0) == 2.0);  // final bin extends past the grid

    const auto traj = trajectory(rates, {0.5, 1.5, 3.0});
    REQUIRE(traj.samples.size() == 4);  // t = 0 is prepended
    CHECK(traj.samples[0].t == 0.0);
    for (int k = 0; k < 3; ++k) CHECK(traj.samples[0].eigenvalues[k] == 1.0);

    // integrals at t = 1.5: I1 = 1.25, I2 = 1.0, I3 = 0.375
    const auto& mid = traj.samples[2];
    CHECK(mid.t == 1.5);
    CHECK(std::abs(mid.eigenvalues.lambda1 - std::exp(-1.375)) <= 1e-14);
    CHECK(std::abs(mid.eigenvalues.lambda2 - std::exp(-1.625)) <= 1e-14);
    CHECK(std::abs(mid.eigenvalues.lambda3 - std::exp(-2.25)) <= 1e-14);

    // integrals at t = 3.0: I1 = 2.0, I2 = 4.0, I3 = 0.75
    const auto& last = traj.samples[3];
    CHECK(std::abs(last.eigenvalues.lambda1 - std::exp(-4.75)) <= 1e-14);
    CHECK(std::abs(last.eigenvalues.lambda2 - std::exp(-2.75)) <= 1e-14);
    CHECK(std::abs(last.eigenvalues.lambda3 - std::exp(-6.0)) <= 1e-14);
}

TEST_CASE("constant-rate trajectories reproduce the semigroup") {
    const std::array<double, 3> gamma{0.3, 0.7, 1.1};
    const auto traj = trajectory(RateSpec::constant(gamma), linspace(0.0, 3.0, 31));
    for (const auto& s : traj.samples) {
        const auto ref = semigroup_eigenvalues(gamma, s.t);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(s.eigenvalues[k] - ref[k]) <= 1e-12);
        CHECK(s.report.cptp);
        CHECK(s.report.p_divisible);
        CHECK(s.report.cp_divisible);
        CHECK(s.report.l_divisible_literal);
    }
}

TEST_CASE("zero rates give the identity trajectory") {
    const auto traj = trajectory(RateSpec::constant({0.0, 0.0, 0.0}), linspace(0.0, 5.0, 11));
    for (const auto& s : traj.samples) {
        for (int k = 0; k < 3; ++k) CHECK(s.eigenvalues[k] == 1.0);
        CHECK(s.report.invertible);
    }
}

TEST_CASE("negative third rate stays CPTP and P-divisible but never CP-divisible") {
    const auto traj = trajectory(tanh_rates(), linspace(0.1, 3.0, 30), 1e-10);
    REQUIRE(traj.samples.size() == 31);
    CHECK(traj.tol == 1e-10);
    for (const auto& s : traj.samples) {
        const double c = std::cosh(s.t);
        CHECK(std::abs(s.eigenvalues.lambda1 - std::exp(-s.t) * c) <= 1e-8);
        CHECK(std::abs(s.eigenvalues.lambda2 - std::exp(-s.t) * c) <= 1e-8);
        CHECK(std::abs(s.eigenvalues.lambda3 - std::exp(-2.0 * s.t)) <= 1e-8);
        CHECK(s.report.cptp);
        CHECK(s.report.p_divisible);
        if (s.t > 0.0) CHECK_FALSE(s.report.cp_divisible);
    }
}

TEST_CASE("halving the quadrature tolerance moves no eigenvalue by more than it") {
    const auto grid = linspace(0.0, 3.0, 16);
    double tol = 1e-6;
    auto prev = trajectory(tanh_rates(), grid, tol);
    for (int round = 0; round < 2; ++round) {
        const auto next = trajectory(tanh_rates(), grid, tol / 2.0);
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (int k = 0; k < 3; ++k)
                CHECK(std::abs(next.samples[i].eigenvalues[k] -
                               prev.samples[i].eigenvalues[k]) <= tol);
        prev = next;
        tol /= 2.0;
    }
}

TEST_CASE("quadrature reports failure on a non-integrable rate") {
    const auto rates = RateSpec::sampled(
        {[](double t) { return t < 1.0 / std::sqrt(2.0) ? 0.0 : 1.0; },
         [](double) { return 0.0; }, [](double) { return 0.0; }});
    CHECK_THROWS_AS(trajectory(rates, {2.0}, 1e-12), QuadratureFailure);
}

TEST_CASE("trajectory grid validation") {
    const auto rates = RateSpec::constant({1.0, 1.0, 1.0});
    CHECK_THROWS_AS(trajectory(rates, {-0.5, 1.0}), NegativeTime);
    CHECK_THROWS_AS(trajectory(rates, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(trajectory(rates, {2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(trajectory(rates, {1.0}, 0.0), std::invalid_argument);
    // an empty grid still yields the t = 0 sample
    const auto traj = trajectory(rates, {});
    REQUIRE(traj.samples.size() == 1);
    CHECK(traj.samples[0].t == 0.0);
}

TEST_CASE("time-local generator rates") {
    const auto g = tlg_rates_for_target(PauliEigenvalues{0.5, 0.5, 1.0});
    CHECK(std::abs(g[0]) <= 1e-15);
    CHECK(std::abs(g[1]) <= 1e-15);
    CHECK(std::abs(g[2] - std::log(2.0)) <= 1e-15);

    const auto h = tlg_rates_for_target(PauliEigenvalues{0.6, 0.6, 0.36});
    CHECK(std::abs(h[0] + std::log(0.6)) <= 1e-15);
    CHECK(std::abs(h[1] + std::log(0.6)) <= 1e-15);
    CHECK(std::abs(h[2]) <= 1e-14);

    CHECK_THROWS_AS(tlg_rates_for_target(PauliEigenvalues{0.5, 0.5, 0.0}), NotTlgObtainable);
    CHECK_THROWS_AS(tlg_rates_for_target(PauliEigenvalues{0.9, -0.1, 0.8}), NotTlgObtainable);
}

TEST_CASE("generator rates reproduce their target eigenvalues") {
    for (std::uint64_t i = 0; i < 10000; ++i) {
        PauliEigenvalues e{0.05 + 0.95 * counter_uniform(11, 3 * i),
                           0.05 + 0.95 * counter_uniform(11, 3 * i + 1),
                           0.05 + 0.95 * counter_uniform(11, 3 * i + 2)};
        const auto g = tlg_rates_for_target(e);
        const PauliEigenvalues back{std::exp(-(g[1] + g[2])), std::exp(-(g[2] + g[0])),
                                    std::exp(-(g[0] + g[1]))};
        for (int k = 0; k < 3; ++k) REQUIRE(std::abs(back[k] - e[k]) <= 1e-12);
    }
}

TEST_CASE("nonnegative generator rates coincide with literal L-divisibility") {
    std::uint64_t pos = 0;
    int checked = 0;
    while (checked < 5000) {
        const PauliEigenvalues e{counter_uniform(23, pos), counter_uniform(23, pos + 1),
                                 counter_uniform(23, pos + 2)};
        pos += 3;
        if (!is_cptp(e)) continue;
        if (e.lambda1 < 1e-6 || e.lambda2 < 1e-6 || e.lambda3 < 1e-6) continue;
        // skip the equality band where tolerances could disagree
        bool near = false;
        for (int k = 0; k < 3; ++k)
            if (std::abs(e[k] - e[(k + 1) % 3] * e[(k + 2) % 3]) <= 1e-9) near = true;
        if (near) continue;
        const auto g = tlg_rates_for_target(e);
        const bool all_nonneg = g[0] >= 0.0 && g[1] >= 0.0 && g[2] >= 0.0;
        REQUIRE(all_nonneg == is_l_divisible(e, LdivMode::literal));
        ++checked;
    }
}
