#pragma once

// Model-specific set-up of the eigenvalue oracles: which scheme, which
// domain, which step.

#include <algorithm>
#include <cmath>
#include <vector>

#include "h1/coulomb.hpp"
#include "h1/oscillator.hpp"
#include "h1/verify/eigen.hpp"

namespace h1::verify {

inline constexpr double kDefaultOracleStep = 1e-3;
inline constexpr double kDefaultTauMax = 25.0;
/// Domain is extended until exp(-kappa tau_max) < 1e-12.
inline constexpr double kTailLog = 27.7;

/// tau_max on a grid of step h so that the slowest requested tail is negligible.
inline double oracle_tau_max(double slowest_decay, double h) {
    const double t = std::max(kDefaultTauMax, kTailLog / slowest_decay);
    return std::ceil(t / h - 1e-9) * h;
}

/// Lowest `m` eigenvalues eps of the reduced Poschl-Teller equation.
inline std::vector<double> oracle_eigenvalues(const oscillator::OscillatorModel& model, unsigned m,
                                              double h = kDefaultOracleStep) {
    const unsigned count = oscillator::bound_state_count(model);
    if (m == 0 || m > count)
        throw IndexError("oracle_eigenvalues: m must be within the bound-state count");
    const double slowest = oscillator::decay_rate(model, m - 1);
    const double tau_max = oracle_tau_max(slowest, h);
    const double c = model.k() * model.k() - 0.25;
    if (model.branch() == Branch::plus && c >= 0.0) {
        const FDGrid grid(h, tau_max, h);
        return fd_eigenvalues([&](double t) { return oscillator::reduced_potential(model, t); }, grid, m);
    }
    const double k0sq = model.k0() * model.k0() - 0.25;
    const auto regular = [k0sq](double t) {
        const double ch = std::cosh(t);
        return -k0sq / (ch * ch);
    };
    return factored_eigenvalues(regular, 0.5 + model.signed_k(), tau_max, h, m);
}

/// Lowest `m` eigenvalues lambda = 2R^2E - 2 mu R of the reduced Manning-Rosen equation.
inline std::vector<double> oracle_eigenvalues(const coulomb::CoulombModel& model, unsigned m,
                                              double h = kDefaultOracleStep) {
    const unsigned count = coulomb::bound_state_count(model);
    if (m == 0 || m > count)
        throw IndexError("oracle_eigenvalues: m must be within the bound-state count");
    const unsigned top = m - 1;
    const double slowest = coulomb::sigma(model, top) - (top + model.nu());
    const double tau_max = oracle_tau_max(slowest, h);
    const double c = model.p() * model.p() - 0.25;
    if (model.branch() == Branch::plus && c >= 0.0) {
        const FDGrid grid(h, tau_max, h);
        return fd_eigenvalues([&](double t) { return coulomb::reduced_potential(model, t); }, grid, m);
    }
    const double g = model.coupling();
    const auto regular = [g](double t) { return -2.0 * g / std::tanh(t); };
    return factored_eigenvalues(regular, model.nu(), tau_max, h, m);
}

/// Oracle energies E = (lambda + 2 mu R) / (2 R^2).
inline std::vector<double> oracle_energies(const coulomb::CoulombModel& model, unsigned m,
                                           double h = kDefaultOracleStep) {
    auto lam = oracle_eigenvalues(model, m, h);
    const double R = model.radius();
    for (double& v : lam)
        v = (v + 2.0 * model.coupling()) / (2.0 * R * R);
    return lam;
}

} // namespace h1::verify
