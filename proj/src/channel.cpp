#include "pauligeo/channel.hpp"

#include <algorithm>
#include <cmath>

namespace pauligeo {

namespace {

constexpr complexd kI{0.0, 1.0};

const Mat2 kSigma[4] = {
    {complexd{1, 0}, complexd{0, 0}, complexd{0, 0}, complexd{1, 0}},    // I
    {complexd{0, 0}, complexd{1, 0}, complexd{1, 0}, complexd{0, 0}},    // X
    {complexd{0, 0}, -kI, kI, complexd{0, 0}},                           // Y
    {complexd{1, 0}, complexd{0, 0}, complexd{0, 0}, complexd{-1, 0}},   // Z
};

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[static_cast<size_t>(2 * i + j)] =
                a[static_cast<size_t>(2 * i)] * b[static_cast<size_t>(j)] +
                a[static_cast<size_t>(2 * i + 1)] * b[static_cast<size_t>(2 + j)];
    return r;
}

void axpy(Mat2& acc, double w, const Mat2& m) {
    for (size_t i = 0; i < 4; ++i) acc[i] += w * m[i];
}

// Eigenvalues of a Hermitian 2x2 matrix, ascending.
std::array<double, 2> herm2_eigenvalues(const Mat2& m) {
    const double a = m[0].real();
    const double c = m[3].real();
    const double mean = 0.5 * (a + c);
    const double disc = std::hypot(0.5 * (a - c), std::abs(m[1]));
    return {mean - disc, mean + disc};
}

double hermiticity_defect2(const Mat2& m) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            d = std::max(d, std::abs(m[static_cast<size_t>(2 * i + j)] -
                                     std::conj(m[static_cast<size_t>(2 * j + i)])));
    return d;
}

double snap(double x) { return std::abs(x) < kZeroSnap ? 0.0 : x; }

}  // namespace

double PauliProbabilities::min_entry() const {
    return std::min(std::min(p0, p1), std::min(p2, p3));
}

DensityMatrix DensityMatrix::from_matrix(const Mat2& m) {
    if (hermiticity_defect2(m) > 1e-12) throw InvalidState("density matrix is not Hermitian");
    const complexd tr = m[0] + m[3];
    if (std::abs(tr - complexd{1, 0}) > 1e-12) throw InvalidState("density matrix trace is not 1");
    if (herm2_eigenvalues(m)[0] < -1e-10) throw InvalidState("density matrix is not positive semidefinite");
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_bloch(double rx, double ry, double rz) {
    if (std::sqrt(rx * rx + ry * ry + rz * rz) > 1.0 + 1e-12)
        throw InvalidState("Bloch vector lies outside the unit ball");
    Mat2 m{};
    axpy(m, 0.5, kSigma[0]);
    axpy(m, 0.5 * rx, kSigma[1]);
    axpy(m, 0.5 * ry, kSigma[2]);
    axpy(m, 0.5 * rz, kSigma[3]);
    return DensityMatrix(m);
}

std::array<double, 3> DensityMatrix::bloch_vector() const {
    return {2.0 * m_[1].real(), -2.0 * m_[1].imag(), m_[0].real() - m_[3].real()};
}

double ChoiMatrix::trace_real() const {
    return (m[0] + m[5] + m[10] + m[15]).real();
}

double ChoiMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            d = std::max(d, std::abs(m[static_cast<size_t>(4 * i + j)] -
                                     std::conj(m[static_cast<size_t>(4 * j + i)])));
    return d;
}

PauliEigenvalues eigenvalues_from_probabilities(const PauliProbabilities& p) {
    if (std::abs(p.sum() - 1.0) > 1e-12) throw NonUnitSum("Pauli probabilities do not sum to 1");
    return {2.0 * (p.p0 + p.p1) - 1.0, 2.0 * (p.p0 + p.p2) - 1.0, 2.0 * (p.p0 + p.p3) - 1.0};
}

PauliProbabilities probabilities_from_eigenvalues(const PauliEigenvalues& e) {
    const double s = e.lambda1 + e.lambda2 + e.lambda3;
    return {0.25 * (1.0 + s),
            0.25 * (1.0 + 2.0 * e.lambda1 - s),
            0.25 * (1.0 + 2.0 * e.lambda2 - s),
            0.25 * (1.0 + 2.0 * e.lambda3 - s)};
}

Mat2 apply_pauli_map(const PauliEigenvalues& e, const Mat2& x) {
    const PauliProbabilities p = probabilities_from_eigenvalues(e);
    Mat2 out{};
    for (int a = 0; a < 4; ++a)
        axpy(out, p[a], mul(mul(kSigma[a], x), kSigma[a]));
    return out;
}

DensityMatrix apply_channel(const PauliEigenvalues& e, const DensityMatrix& rho) {
    return DensityMatrix::from_matrix(apply_pauli_map(e, rho.matrix()));
}

ChoiMatrix choi_state(const PauliEigenvalues& e) {
    ChoiMatrix choi;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Mat2 eij{};
            eij[static_cast<size_t>(2 * i + j)] = complexd{1, 0};
            const Mat2 block = apply_pauli_map(e, eij);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    choi.m[static_cast<size_t>(4 * (2 * i + r) + (2 * j + c))] =
                        0.5 * block[static_cast<size_t>(2 * r + c)];
        }
    return choi;
}

bool is_positive_tp(const PauliEigenvalues& e) {
    return std::abs(e.lambda1) <= 1.0 + kRegionTol && std::abs(e.lambda2) <= 1.0 + kRegionTol &&
           std::abs(e.lambda3) <= 1.0 + kRegionTol;
}

bool is_cptp(const PauliEigenvalues& e) {
    return probabilities_from_eigenvalues(e).min_entry() >= -kRegionTol;
}

bool is_entanglement_breaking(const PauliEigenvalues& e) {
    return is_cptp(e) &&
           std::abs(e.lambda1) + std::abs(e.lambda2) + std::abs(e.lambda3) <= 1.0 + kRegionTol;
}

bool is_tlg_obtainable(const PauliEigenvalues& e) {
    return e.lambda1 >= -kRegionTol && e.lambda2 >= -kRegionTol && e.lambda3 >= -kRegionTol;
}

bool is_invertible(const PauliEigenvalues& e) {
    return snap(e.lambda1) != 0.0 && snap(e.lambda2) != 0.0 && snap(e.lambda3) != 0.0;
}

bool is_p_divisible(const PauliEigenvalues& e) {
    if (!is_cptp(e)) throw NotAChannel("P-divisibility is defined for channels only");
    return e.lambda1 * e.lambda2 * e.lambda3 >= -kRegionTol;
}

bool is_cp_divisible(const PauliEigenvalues& e) {
    if (!is_cptp(e)) throw NotAChannel("CP-divisibility is defined for channels only");
    if (is_invertible(e)) {
        const double prod = e.lambda1 * e.lambda2 * e.lambda3;
        if (prod <= 0.0) return false;
        for (int k = 0; k < 3; ++k)
            if (prod > e[k] * e[k] + kRegionTol) return false;
        return true;
    }
    int nonzero = 0;
    for (int k = 0; k < 3; ++k)
        if (snap(e[k]) != 0.0) ++nonzero;
    return nonzero == 1;
}

bool is_l_divisible(const PauliEigenvalues& e, LdivMode mode) {
    if (!is_cptp(e)) throw NotAChannel("L-divisibility is defined for channels only");
    if (mode == LdivMode::cpdiv_equivalent) return is_cp_divisible(e);
    return e.lambda1 * e.lambda2 <= e.lambda3 + kRegionTol &&
           e.lambda2 * e.lambda3 <= e.lambda1 + kRegionTol &&
           e.lambda3 * e.lambda1 <= e.lambda2 + kRegionTol;
}

ClassificationReport classify(const PauliEigenvalues& e) {
    ClassificationReport r;
    r.positive_tp = is_positive_tp(e);
    r.cptp = is_cptp(e);
    r.entanglement_breaking = is_entanglement_breaking(e);
    r.tlg_obtainable = is_tlg_obtainable(e);
    r.invertible = is_invertible(e);
    if (r.cptp) {
        r.p_divisible = is_p_divisible(e);
        r.cp_divisible = is_cp_divisible(e);
        r.l_divisible_literal = is_l_divisible(e, LdivMode::literal);
        r.l_divisible_cpdiv_mode = r.cp_divisible;
    }

    const double abs_max =
        std::max({std::abs(e.lambda1), std::abs(e.lambda2), std::abs(e.lambda3)});
    const double abs_sum = std::abs(e.lambda1) + std::abs(e.lambda2) + std::abs(e.lambda3);
    const double prod = e.lambda1 * e.lambda2 * e.lambda3;
    const double min_lambda = std::min({e.lambda1, e.lambda2, e.lambda3});

    if (r.positive_tp && std::abs(abs_max - 1.0) <= kBoundaryTol) r.boundary.insert("positive_tp");
    if (r.cptp && std::abs(probabilities_from_eigenvalues(e).min_entry()) <= kBoundaryTol)
        r.boundary.insert("cptp");
    if (r.entanglement_breaking && std::abs(abs_sum - 1.0) <= kBoundaryTol)
        r.boundary.insert("entanglement_breaking");
    if (r.tlg_obtainable && std::abs(min_lambda) <= kBoundaryTol) r.boundary.insert("tlg_obtainable");
    if (r.p_divisible && std::abs(prod) <= kBoundaryTol) r.boundary.insert("p_divisible");
    if (r.cp_divisible && r.invertible) {
        double margin = prod;
        for (int k = 0; k < 3; ++k) margin = std::min(margin, e[k] * e[k] - prod);
        if (std::abs(margin) <= kBoundaryTol) r.boundary.insert("cp_divisible");
    }
    if (r.l_divisible_literal) {
        const double margin = std::min({e.lambda3 - e.lambda1 * e.lambda2,
                                        e.lambda1 - e.lambda2 * e.lambda3,
                                        e.lambda2 - e.lambda3 * e.lambda1});
        if (std::abs(margin) <= kBoundaryTol) r.boundary.insert("l_divisible_literal");
    }
    return r;
}

double hs_distance(const PauliEigenvalues& a, const PauliEigenvalues& b) {
    const double d1 = a.lambda1 - b.lambda1;
    const double d2 = a.lambda2 - b.lambda2;
    const double d3 = a.lambda3 - b.lambda3;
    return 0.5 * std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
}

}  // namespace pauligeo
