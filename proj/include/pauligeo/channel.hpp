#ifndef PAULIGEO_CHANNEL_HPP
#define PAULIGEO_CHANNEL_HPP

#include <array>
#include <complex>
#include <set>
#include <string>

#include "pauligeo/error.hpp"

namespace pauligeo {

using complexd = std::complex<double>;
using Mat2 = std::array<complexd, 4>;    // row-major 2x2
using Mat4 = std::array<complexd, 16>;   // row-major 4x4

// Eigenvalues (lambda1, lambda2, lambda3) of a Pauli map on the traceless
// Pauli basis; lambda0 = 1 is implicit.  No range restriction: maps outside
// the positivity cube are representable and classified as such.
struct PauliEigenvalues {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;

    double operator[](int k) const {
        return k == 0 ? lambda1 : (k == 1 ? lambda2 : lambda3);
    }
    friend bool operator==(const PauliEigenvalues&, const PauliEigenvalues&) = default;
};

// Mixing weights (p0, p1, p2, p3) of the Pauli map.  Entries may be negative
// for trace-preserving maps that are not channels; they sum to one.
struct PauliProbabilities {
    double p0 = 1.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;

    double operator[](int a) const {
        return a == 0 ? p0 : (a == 1 ? p1 : (a == 2 ? p2 : p3));
    }
    double sum() const { return p0 + p1 + p2 + p3; }
    double min_entry() const;
};

// Validated qubit state.  Construct through from_matrix, which enforces
// hermiticity, unit trace, and positive semidefiniteness.
class DensityMatrix {
  public:
    static DensityMatrix from_matrix(const Mat2& m);
    static DensityMatrix from_bloch(double rx, double ry, double rz);

    const Mat2& matrix() const { return m_; }
    std::array<double, 3> bloch_vector() const;

  private:
    explicit DensityMatrix(const Mat2& m) : m_(m) {}
    Mat2 m_;
};

// 4x4 Choi state of a Pauli map (basis |00>,|01>,|10>,|11>).
struct ChoiMatrix {
    Mat4 m{};

    complexd operator()(int r, int c) const { return m[static_cast<size_t>(4 * r + c)]; }
    double trace_real() const;
    // max |m - m^dagger| entry, for hermiticity checks
    double hermiticity_defect() const;
};

enum class LdivMode { literal, cpdiv_equivalent };

// All pointwise classification flags for one eigenvalue triple.  Divisibility
// flags are reported false (with cptp telling why) when the map is not a
// channel.  `boundary` lists predicates that hold with equality within 1e-10.
struct ClassificationReport {
    bool positive_tp = false;
    bool cptp = false;
    bool entanglement_breaking = false;
    bool tlg_obtainable = false;
    bool invertible = false;
    bool p_divisible = false;
    bool cp_divisible = false;
    bool l_divisible_literal = false;
    bool l_divisible_cpdiv_mode = false;
    std::set<std::string> boundary;
};

// Inclusive comparison slack for the closed region predicates.
inline constexpr double kRegionTol = 1e-12;
// Magnitudes below this count as structural zeros (invertibility tests).
inline constexpr double kZeroSnap = 1e-14;
// Equality detection tolerance for the classification `boundary` field.
inline constexpr double kBoundaryTol = 1e-10;

PauliEigenvalues eigenvalues_from_probabilities(const PauliProbabilities& p);
PauliProbabilities probabilities_from_eigenvalues(const PauliEigenvalues& e);

// Action of the map on an arbitrary 2x2 matrix (linear extension).
Mat2 apply_pauli_map(const PauliEigenvalues& e, const Mat2& x);
DensityMatrix apply_channel(const PauliEigenvalues& e, const DensityMatrix& rho);

ChoiMatrix choi_state(const PauliEigenvalues& e);

bool is_positive_tp(const PauliEigenvalues& e);
bool is_cptp(const PauliEigenvalues& e);
bool is_entanglement_breaking(const PauliEigenvalues& e);
bool is_tlg_obtainable(const PauliEigenvalues& e);
bool is_invertible(const PauliEigenvalues& e);
bool is_p_divisible(const PauliEigenvalues& e);
bool is_cp_divisible(const PauliEigenvalues& e);
bool is_l_divisible(const PauliEigenvalues& e, LdivMode mode);

ClassificationReport classify(const PauliEigenvalues& e);

// Hilbert-Schmidt distance between the Choi states of two Pauli maps:
// half the Euclidean distance between the eigenvalue triples.
double hs_distance(const PauliEigenvalues& a, const PauliEigenvalues& b);

}  // namespace pauligeo

#endif
