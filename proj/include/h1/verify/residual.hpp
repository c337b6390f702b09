#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "h1/errors.hpp"

namespace h1::verify {

/**
 * @brief max |Psi''_fd + (eps - U) Psi| / max |Psi| over [lo, hi] with step h.
 *
 * Psi'' uses the 5-point central difference; the evaluator is sampled up to
 * 2h outside [lo, hi], which must avoid singular points.
 */
template <class State, class Potential>
double ode_residual(State&& psi, double eps, Potential&& u, double lo, double hi, double h) {
    if (!(h > 0.0) || !(lo < hi))
        throw DomainError("ode_residual: need h > 0 and lo < hi");
    const auto steps = static_cast<std::size_t>(std::llround((hi - lo) / h));
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = lo + static_cast<double>(i) * h;
        const double f0 = psi(t);
        const double d2 = (-psi(t + 2 * h) + 16.0 * psi(t + h) - 30.0 * f0 + 16.0 * psi(t - h) - psi(t - 2 * h)) /
                          (12.0 * h * h);
        worst = std::max(worst, std::fabs(d2 + (eps - u(t)) * f0));
        scale = std::max(scale, std::fabs(f0));
    }
    if (!(scale > 0.0))
        throw DomainError("ode_residual: state vanishes identically on the grid");
    return worst / scale;
}

} // namespace h1::verify
