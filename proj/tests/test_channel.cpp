#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>

#include "pauligeo/channel.hpp"
#include "pauligeo/error.hpp"
#include "pauligeo/rng.hpp"

using namespace pauligeo;

namespace {

double uni(std::uint64_t seed, std::uint64_t pos, double lo, double hi) {
    return lo + counter_uniform(seed, pos) * (hi - lo);
}

PauliEigenvalues random_triple(std::uint64_t seed, std::uint64_t i, double lo, double hi) {
    return {uni(seed, 3 * i, lo, hi), uni(seed, 3 * i + 1, lo, hi),
            uni(seed, 3 * i + 2, lo, hi)};
}

Eigen::Matrix4cd to_eigen(const ChoiMatrix& c) {
    Eigen::Matrix4cd m;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) m(r, col) = c(r, col);
    return m;
}

std::array<double, 4> sorted_choi_spectrum(const PauliEigenvalues& e) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(to_eigen(choi_state(e)));
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("eigenvalues from probabilities") {
    auto e = eigenvalues_from_probabilities({1, 0, 0, 0});
    CHECK(e == PauliEigenvalues{1, 1, 1});
    e = eigenvalues_from_probabilities({0.25, 0.25, 0.25, 0.25});
    CHECK(e == PauliEigenvalues{0, 0, 0});
    e = eigenvalues_from_probabilities({0.5, 0.5, 0, 0});
    CHECK(e == PauliEigenvalues{1, 0, 0});

    CHECK_THROWS_AS(eigenvalues_from_probabilities({0.5, 0.5, 0.5, 0.5}), NonUnitSum);
    // slack just inside the 1e-12 gate
    CHECK_NOTHROW(eigenvalues_from_probabilities({0.25 + 4e-13, 0.25, 0.25, 0.25}));
}

TEST_CASE("probabilities from eigenvalues") {
    auto p = probabilities_from_eigenvalues({1, 1, 1});
    CHECK(p.p0 == 1.0);
    CHECK(p.p1 == 0.0);
    CHECK(p.p2 == 0.0);
    CHECK(p.p3 == 0.0);

    p = probabilities_from_eigenvalues({0, 0, 0});
    for (int a = 0; a < 4; ++a) CHECK(p[a] == 0.25);

    p = probabilities_from_eigenvalues({1, -1, -1});
    CHECK(p.p0 == 0.0);
    CHECK(p.p1 == 1.0);
    CHECK(p.p2 == 0.0);
    CHECK(p.p3 == 0.0);
}

TEST_CASE("probability round trip over random vectors with negative entries") {
    for (std::uint64_t i = 0; i < 10000; ++i) {
        double a = uni(11, 3 * i, -1.0, 1.0);
        double b = uni(11, 3 * i + 1, -1.0, 1.0);
        double c = uni(11, 3 * i + 2, -1.0, 1.0);
        PauliProbabilities p{1.0 - a - b - c, a, b, c};
        const auto q = probabilities_from_eigenvalues(eigenvalues_from_probabilities(p));
        for (int k = 0; k < 4; ++k) CHECK(std::abs(q[k] - p[k]) <= 1e-14);
    }
}

TEST_CASE("apply_channel examples") {
    const auto rho = DensityMatrix::from_bloch(0.3, -0.4, 0.5);

    auto out = apply_channel({1, 1, 1}, rho);
    for (int i = 0; i < 4; ++i) {
        CHECK(out.matrix()[static_cast<std::size_t>(i)].real() ==
              doctest::Approx(rho.matrix()[static_cast<std::size_t>(i)].real()).epsilon(1e-14));
        CHECK(out.matrix()[static_cast<std::size_t>(i)].imag() ==
              doctest::Approx(rho.matrix()[static_cast<std::size_t>(i)].imag()).epsilon(1e-14));
    }

    out = apply_channel({0, 0, 0}, rho);
    auto r = out.bloch_vector();
    CHECK(std::abs(r[0]) <= 1e-14);
    CHECK(std::abs(r[1]) <= 1e-14);
    CHECK(std::abs(r[2]) <= 1e-14);

    out = apply_channel({1, 0, 0}, rho);
    r = out.bloch_vector();
    CHECK(r[0] == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(std::abs(r[1]) <= 1e-13);
    CHECK(std::abs(r[2]) <= 1e-13);
}

TEST_CASE("Bloch components contract by the eigenvalues") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto e = random_triple(13, 2 * i, -1.0, 1.0);
        double rx = uni(14, 3 * i, -0.5, 0.5);
        double ry = uni(14, 3 * i + 1, -0.5, 0.5);
        double rz = uni(14, 3 * i + 2, -0.5, 0.5);
        const auto out = apply_channel(e, DensityMatrix::from_bloch(rx, ry, rz)).bloch_vector();
        CHECK(std::abs(out[0] - e[0] * rx) <= 1e-12);
        CHECK(std::abs(out[1] - e[1] * ry) <= 1e-12);
        CHECK(std::abs(out[2] - e[2] * rz) <= 1e-12);
    }
}

TEST_CASE("density matrix validation") {
    Mat2 not_hermitian{complexd(0.5, 0.0), complexd(0.3, 0.0), complexd(0.1, 0.0),
                       complexd(0.5, 0.0)};
    CHECK_THROWS_AS(DensityMatrix::from_matrix(not_hermitian), InvalidState);

    Mat2 wrong_trace{complexd(0.7, 0.0), complexd(0.0, 0.0), complexd(0.0, 0.0),
                     complexd(0.5, 0.0)};
    CHECK_THROWS_AS(DensityMatrix::from_matrix(wrong_trace), InvalidState);

    Mat2 not_psd{complexd(1.2, 0.0), complexd(0.0, 0.0), complexd(0.0, 0.0),
                 complexd(-0.2, 0.0)};
    CHECK_THROWS_AS(DensityMatrix::from_matrix(not_psd), InvalidState);

    CHECK_THROWS_AS(DensityMatrix::from_bloch(0.8, 0.8, 0.8), InvalidState);
    CHECK_NOTHROW(DensityMatrix::from_bloch(1.0, 0.0, 0.0));  // pure state
}

TEST_CASE("Choi state closed forms") {
    const auto id = choi_state({1, 1, 1});
    // projector onto the maximally entangled state: 1/2 in the four corners
    CHECK(id(0, 0).real() == 0.5);
    CHECK(id(0, 3).real() == 0.5);
    CHECK(id(3, 0).real() == 0.5);
    CHECK(id(3, 3).real() == 0.5);
    CHECK(std::abs(id(1, 1)) <= 1e-15);
    CHECK(std::abs(id(2, 2)) <= 1e-15);

    const auto dep = choi_state({0, 0, 0});
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(std::abs(dep(r, c) - (r == c ? complexd(0.25, 0) : complexd(0, 0))) <= 1e-15);
}

TEST_CASE("Choi spectrum equals the probability vector") {
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const auto e = random_triple(17, i, -1.0, 1.0);
        const auto c = choi_state(e);
        CHECK(c.hermiticity_defect() <= 1e-14);
        CHECK(c.trace_real() == doctest::Approx(1.0).epsilon(1e-13));

        const auto p = probabilities_from_eigenvalues(e);
        std::array<double, 4> expect{p[0], p[1], p[2], p[3]};
        std::sort(expect.begin(), expect.end());
        const auto got = sorted_choi_spectrum(e);
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(got[static_cast<std::size_t>(k)] -
                           expect[static_cast<std::size_t>(k)]) <= 1e-12);
    }
}

TEST_CASE("CPTP iff the Choi state is positive semidefinite") {
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const auto e = random_triple(19, i, -1.2, 1.2);
        const auto spectrum = sorted_choi_spectrum(e);
        CHECK(is_cptp(e) == (spectrum[0] >= -1e-10));
    }
}

TEST_CASE("positive trace-preserving predicate") {
    CHECK(is_positive_tp({1, 1, 1}));
    CHECK_FALSE(is_positive_tp({1.1, 0, 0}));
    CHECK(is_positive_tp({-1, 1, -1}));
}

TEST_CASE("complete positivity predicate") {
    CHECK_FALSE(is_cptp({0.9, 0.9, 0}));
    CHECK(is_cptp({1, -1, -1}));
    CHECK(is_cptp({0.5, 0.5, 0.25}));
}

TEST_CASE("entanglement breaking predicate") {
    CHECK(is_entanglement_breaking({0.2, 0.3, 0.4}));
    CHECK_FALSE(is_entanglement_breaking({0.5, 0.5, 0.5}));
    CHECK(is_entanglement_breaking({1.0 / 3, 1.0 / 3, 1.0 / 3}));
}

TEST_CASE("time-local generator reachability predicate") {
    CHECK(is_tlg_obtainable({0.5, 0.2, 0.1}));
    CHECK_FALSE(is_tlg_obtainable({0.5, -0.1, 0.2}));
    CHECK(is_tlg_obtainable({0, 0, 0}));
}

TEST_CASE("invertibility predicate") {
    CHECK_FALSE(is_invertible({0.5, 0.5, 0}));
    CHECK(is_invertible({0.1, 0.1, 0.1}));
    CHECK_FALSE(is_invertible({1e-16, 1, 1}));
}

TEST_CASE("P-divisibility predicate") {
    CHECK(is_p_divisible({0.5, 0.4, 0.3}));
    CHECK_FALSE(is_p_divisible({0.3, 0.3, -0.3}));
    CHECK(is_p_divisible({0.5, 0.5, 0}));
    CHECK_THROWS_AS(is_p_divisible({0.9, 0.9, 0}), NotAChannel);
}

TEST_CASE("CP-divisibility predicate") {
    CHECK(is_cp_divisible({0.5, 0.5, 0.25}));  // equality case: product = lambda3^2
    CHECK(is_cp_divisible({0.5, 0, 0}));
    CHECK_FALSE(is_cp_divisible({0.5, 0.5, 0}));
    CHECK_FALSE(is_cp_divisible({0, 0, 0}));  // no single non-zero eigenvalue
    CHECK_THROWS_AS(is_cp_divisible({1.1, 0, 0}), NotAChannel);
}

TEST_CASE("L-divisibility predicate in both modes") {
    CHECK(is_l_divisible({0.6, 0.6, 0.36}, LdivMode::literal));
    CHECK(is_l_divisible({1, 1, 1}, LdivMode::literal));

    // The point separating the two readings: pairwise-product test fails
    // on a negative pair, the CP-divisibility region contains it.
    CHECK_FALSE(is_l_divisible({-0.5, -0.5, 0.25}, LdivMode::literal));
    CHECK(is_l_divisible({-0.5, -0.5, 0.25}, LdivMode::cpdiv_equivalent));

    CHECK_THROWS_AS(is_l_divisible({0.9, 0.9, 0}, LdivMode::literal), NotAChannel);
}

TEST_CASE("classification report examples") {
    auto r = classify({1, 1, 1});
    CHECK(r.positive_tp);
    CHECK(r.cptp);
    CHECK_FALSE(r.entanglement_breaking);
    CHECK(r.tlg_obtainable);
    CHECK(r.invertible);
    CHECK(r.p_divisible);
    CHECK(r.cp_divisible);
    CHECK(r.l_divisible_literal);

    r = classify({0.5, 0.5, 0});
    CHECK(r.positive_tp);
    CHECK(r.cptp);
    CHECK(r.entanglement_breaking);
    CHECK(r.tlg_obtainable);
    CHECK_FALSE(r.invertible);
    CHECK(r.p_divisible);
    CHECK_FALSE(r.cp_divisible);
    CHECK_FALSE(r.l_divisible_literal);
    CHECK(r.boundary.count("cptp") == 1);
    CHECK(r.boundary.count("entanglement_breaking") == 1);

    r = classify({0.9, 0.9, 0.9});
    CHECK(r.positive_tp);
    CHECK(r.cptp);
    CHECK_FALSE(r.entanglement_breaking);
    CHECK(r.tlg_obtainable);
    CHECK(r.p_divisible);
    CHECK(r.cp_divisible);
    CHECK(r.l_divisible_literal);
}

TEST_CASE("classify never throws, even far outside the cube") {
    const auto r = classify({5, -7, 100});
    CHECK_FALSE(r.positive_tp);
    CHECK_FALSE(r.cptp);
    CHECK_FALSE(r.p_divisible);
    CHECK_FALSE(r.cp_divisible);
    CHECK_FALSE(r.l_divisible_literal);
    CHECK_FALSE(r.l_divisible_cpdiv_mode);
}

TEST_CASE("implication chains over random triples") {
    std::uint64_t checked = 0;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const auto e = random_triple(23, i, -1.2, 1.2);
        const auto r = classify(e);
        if (r.entanglement_breaking) CHECK(r.cptp);
        if (r.cptp) CHECK(r.positive_tp);
        if (r.cp_divisible) CHECK(r.p_divisible);
        if (r.l_divisible_literal && e[0] > 0 && e[1] > 0 && e[2] > 0) {
            CHECK(r.cp_divisible);
            ++checked;
        }
    }
    CHECK(checked > 0);  // the guarded implication actually fired
}

TEST_CASE("region predicates are closed on their boundaries") {
    CHECK(is_positive_tp({1.0, -1.0, 1.0}));
    CHECK(is_positive_tp({1.0 + 5e-13, 0, 0}));  // inside the 1e-12 slack
    CHECK(is_cptp({0.5, 0.5, 0}));
    CHECK(is_entanglement_breaking({0.5, 0.25, 0.25}));
    CHECK(is_tlg_obtainable({0, 0.5, 0.5}));
    CHECK(is_p_divisible({0.5, 0.5, 0}));
    CHECK(is_cp_divisible({0.5, 0.5, 0.25}));
    CHECK(is_l_divisible({0.6, 0.6, 0.36}, LdivMode::literal));
}

TEST_CASE("boundary report flags equalities") {
    auto r = classify({1, 0.5, 0.5});
    CHECK(r.boundary.count("positive_tp") == 1);

    r = classify({0.5, 0.25, 0.25});
    CHECK(r.boundary.count("entanglement_breaking") == 1);

    r = classify({0.3, 0.2, 0.1});
    CHECK(r.boundary.empty());
}

TEST_CASE("Hilbert-Schmidt distance") {
    CHECK(hs_distance({0.3, 0.2, 0.1}, {0.3, 0.2, 0.1}) == 0.0);
    CHECK(hs_distance({1, 1, 1}, {0, 0, 0}) ==
          doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));

    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto a = random_triple(29, 2 * i, -1.0, 1.0);
        const auto b = random_triple(29, 2 * i + 1, -1.0, 1.0);
        const Eigen::Matrix4cd diff = to_eigen(choi_state(a)) - to_eigen(choi_state(b));
        const double frobenius = std::sqrt((diff.adjoint() * diff).trace().real());
        CHECK(std::abs(hs_distance(a, b) - frobenius) <= 1e-12);
    }
}
