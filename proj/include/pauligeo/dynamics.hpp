#ifndef PAULIGEO_DYNAMICS_HPP
#define PAULIGEO_DYNAMICS_HPP

#include <array>
#include <functional>
#include <vector>

#include "pauligeo/channel.hpp"
#include "pauligeo/error.hpp"

namespace pauligeo {

// Three decoherence rates of a time-local generator.  Rates may be negative
// (non-Markovian generators); only semigroups require nonnegativity.
class RateSpec {
public:
    static RateSpec constant(const std::array<double, 3>& gamma);

    // Piecewise-constant on [edges.front(), edges.back()], bin i holding
    // values[k][i].  Edges start at 0 and increase strictly.  Beyond the
    // last edge the final bin value extends.
    static RateSpec piecewise(std::vector<double> edges,
                              std::array<std::vector<double>, 3> values);

    // Closed-form rates given as callbacks; integrated by quadrature.
    static RateSpec sampled(std::array<std::function<double(double)>, 3> gamma);

    double rate(int k, double t) const;

    // True when cumulative integrals have a closed form (constant or
    // piecewise-constant) and quadrature is unnecessary.
    bool exactly_integrable() const;

    // Cumulative integral of rate k from 0 to t; only valid when
    // exactly_integrable().
    double exact_integral(int k, double t) const;

private:
    enum class Kind { constant, piecewise, sampled };
    Kind kind_ = Kind::constant;
    std::array<double, 3> gamma_{};
    std::vector<double> edges_;
    std::array<std::vector<double>, 3> values_;
    std::array<std::function<double(double)>, 3> callbacks_;
};

struct TrajectorySample {
    double t = 0.0;
    PauliEigenvalues eigenvalues;
    ClassificationReport report;
};

// Samples of a dynamical map along a time grid.  Starts at the identity
// channel; eigenvalues stay strictly positive (exponential form).
struct Trajectory {
    std::vector<TrajectorySample> samples;
    double tol = 0.0;
};

// Markovian semigroup point: eigenvalue k decays at the sum of the other
// two rates.
PauliEigenvalues semigroup_eigenvalues(const std::array<double, 3>& gamma, double t);

// Dynamical map along `grid` (strictly increasing, nonnegative; a 0 sample
// is prepended when missing).  Each cumulative rate integral is computed to
// absolute tolerance `tol` — exactly for constant/piecewise specs, by
// adaptive Simpson quadrature otherwise — and every sample is classified.
Trajectory trajectory(const RateSpec& rates, const std::vector<double>& grid,
                      double tol = 1e-10);

// Integrated rates reproducing a strictly positive eigenvalue triple:
// exp[-(G_j + G_m)] = lambda_k.  Nonnegativity of all three is the
// time-local-generator divisibility criterion.
std::array<double, 3> tlg_rates_for_target(const PauliEigenvalues& e);

}  // namespace pauligeo

#endif
