#include "pauligeo/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pauligeo {

namespace {

constexpr int kMaxDepth = 50;

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
    if (depth > kMaxDepth)
        throw QuadratureFailure("adaptive quadrature exceeded its refinement budget");
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (b <= a) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = simpson(a, fa, fm, b, fb);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 0);
}

}  // namespace

RateSpec RateSpec::constant(const std::array<double, 3>& gamma) {
    RateSpec spec;
    spec.kind_ = Kind::constant;
    spec.gamma_ = gamma;
    return spec;
}

RateSpec RateSpec::piecewise(std::vector<double> edges,
                             std::array<std::vector<double>, 3> values) {
    if (edges.size() < 2 || edges.front() != 0.0)
        throw std::invalid_argument("piecewise rate grid must start at 0 with at least one bin");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (!(edges[i] < edges[i + 1]))
            throw std::invalid_argument("piecewise rate grid must increase strictly");
    for (const auto& v : values)
        if (v.size() != edges.size() - 1)
            throw std::invalid_argument("piecewise rate values must match the bin count");
    RateSpec spec;
    spec.kind_ = Kind::piecewise;
    spec.edges_ = std::move(edges);
    spec.values_ = std::move(values);
    return spec;
}

RateSpec RateSpec::sampled(std::array<std::function<double(double)>, 3> gamma) {
    for (const auto& g : gamma)
        if (!g) throw std::invalid_argument("rate callback is empty");
    RateSpec spec;
    spec.kind_ = Kind::sampled;
    spec.callbacks_ = std::move(gamma);
    return spec;
}

double RateSpec::rate(int k, double t) const {
    switch (kind_) {
        case Kind::constant:
            return gamma_[static_cast<std::size_t>(k)];
        case Kind::piecewise: {
            const auto& v = values_[static_cast<std::size_t>(k)];
            // first edge strictly above t; clamp outside the grid
            const auto it = std::upper_bound(edges_.begin(), edges_.end(), t);
            std::size_t bin = it == edges_.begin()
                                  ? 0
                                  : static_cast<std::size_t>(it - edges_.begin()) - 1;
            bin = std::min(bin, v.size() - 1);
            return v[bin];
        }
        case Kind::sampled:
            return callbacks_[static_cast<std::size_t>(k)](t);
    }
    return 0.0;
}

bool RateSpec::exactly_integrable() const { return kind_ != Kind::sampled; }

double RateSpec::exact_integral(int k, double t) const {
    switch (kind_) {
        case Kind::constant:
            return gamma_[static_cast<std::size_t>(k)] * t;
        case Kind::piecewise: {
            const auto& v = values_[static_cast<std::size_t>(k)];
            double acc = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                const double a = edges_[i];
                const double b = edges_[i + 1];
                if (t <= a) return acc;
                acc += v[i] * (std::min(t, b) - a);
            }
            // final bin value extends beyond the grid
            if (t > edges_.back()) acc += v.back() * (t - edges_.back());
            return acc;
        }
        case Kind::sampled:
            break;
    }
    throw std::logic_error("exact_integral on a sampled rate spec");
}

PauliEigenvalues semigroup_eigenvalues(const std::array<double, 3>& gamma, double t) {
    for (double g : gamma)
        if (g < 0.0) throw NegativeRate("semigroup rates must be nonnegative");
    if (t < 0.0) throw NegativeTime("evolution time must be nonnegative");
    const double s = gamma[0] + gamma[1] + gamma[2];
    return PauliEigenvalues{std::exp(-(s - gamma[0]) * t), std::exp(-(s - gamma[1]) * t),
                            std::exp(-(s - gamma[2]) * t)};
}

Trajectory trajectory(const RateSpec& rates, const std::vector<double>& grid, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    for (double t : grid)
        if (t < 0.0) throw NegativeTime("trajectory grid times must be nonnegative");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::invalid_argument("trajectory grid must increase strictly");

    std::vector<double> times;
    times.reserve(grid.size() + 1);
    if (grid.empty() || grid.front() > 0.0) times.push_back(0.0);
    times.insert(times.end(), grid.begin(), grid.end());
    const double total = times.back() - times.front();

    Trajectory out;
    out.tol = tol;
    out.samples.reserve(times.size());

    std::array<double, 3> integral{0.0, 0.0, 0.0};
    double prev = 0.0;
    for (double t : times) {
        if (rates.exactly_integrable()) {
            for (int k = 0; k < 3; ++k) integral[static_cast<std::size_t>(k)] = rates.exact_integral(k, t);
        } else if (t > prev) {
            // Per-segment budgets sum to tol/2 over the whole grid, keeping
            // each cumulative integral inside the requested tolerance.
            const double budget = 0.5 * tol * (t - prev) / total;
            for (int k = 0; k < 3; ++k) {
                auto f = [&rates, k](double s) { return rates.rate(k, s); };
                integral[static_cast<std::size_t>(k)] += adaptive_simpson(f, prev, t, budget);
            }
        }
        prev = t;

        TrajectorySample sample;
        sample.t = t;
        sample.eigenvalues = PauliEigenvalues{std::exp(-(integral[1] + integral[2])),
                                              std::exp(-(integral[2] + integral[0])),
                                              std::exp(-(integral[0] + integral[1]))};
        sample.report = classify(sample.eigenvalues);
        out.samples.push_back(std::move(sample));
    }
    return out;
}

std::array<double, 3> tlg_rates_for_target(const PauliEigenvalues& e) {
    for (int k = 0; k < 3; ++k)
        if (e[k] <= 0.0)
            throw NotTlgObtainable("target eigenvalues must be strictly positive");
    const double l1 = std::log(e[0]);
    const double l2 = std::log(e[1]);
    const double l3 = std::log(e[2]);
    return {0.5 * (l1 - l2 - l3), 0.5 * (l2 - l3 - l1), 0.5 * (l3 - l1 - l2)};
}

}  // namespace pauligeo
