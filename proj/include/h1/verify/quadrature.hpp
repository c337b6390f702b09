#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "h1/errors.hpp"

namespace h1::verify {

/// Gauss-Legendre rule on [-1, 1], nodes from Newton iteration on P_N.
template <std::size_t N>
struct GaussLegendre {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    GaussLegendre() {
        for (std::size_t i = 0; i < (N + 1) / 2; ++i) {
            double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                                (static_cast<double>(N) + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (std::size_t k = 2; k <= N; ++k) {
                    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                    p0 = p1;
                    p1 = pk;
                }
                dp = static_cast<double>(N) * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-16)
                    break;
            }
            nodes[i] = -x;
            nodes[N - 1 - i] = x;
            weights[i] = weights[N - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    static const GaussLegendre& instance() {
        static const GaussLegendre rule;
        return rule;
    }

    template <class F>
    double apply(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            s += weights[i] * f(mid + half * nodes[i]);
        return s * half;
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t panels = 0;
};

/// Subdivision cap of integrate(); exceeding it raises ConvergenceError.
inline constexpr int kMaxQuadratureDepth = 64;

namespace detail {

template <class F>
void integrate_panel(F& f, double a, double b, double whole, double tol, int depth, QuadratureResult& acc) {
    const auto& rule = GaussLegendre<10>::instance();
    const double mid = 0.5 * (a + b);
    const double left = rule.apply(f, a, mid);
    const double right = rule.apply(f, mid, b);
    const double refined = left + right;
    const double diff = std::fabs(refined - whole);
    // Below roundoff of the panel sum no further subdivision can help.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (std::fabs(left) + std::fabs(right));
    if (diff <= tol || diff <= floor) {
        acc.value += refined;
        acc.error_estimate += diff;
        ++acc.panels;
        return;
    }
    if (depth >= kMaxQuadratureDepth || !std::isfinite(refined))
        throw ConvergenceError("integrate: subdivision depth cap reached near [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    integrate_panel(f, a, mid, left, 0.5 * tol, depth + 1, acc);
    integrate_panel(f, mid, b, right, 0.5 * tol, depth + 1, acc);
}

} // namespace detail

/**
 * @brief Adaptive bisection with 10-point Gauss-Legendre panels.
 *
 * A panel is accepted when the two half-panel sum agrees with the whole-panel
 * value to within its share of `abs_tol`; the discarded differences are
 * accumulated into `error_estimate`.
 */
template <class F>
QuadratureResult integrate_with_error(F&& f, double a, double b, double abs_tol) {
    if (!(a < b))
        throw DomainError("integrate: need a < b");
    if (!(abs_tol > 0.0))
        throw DomainError("integrate: abs_tol must be positive");
    QuadratureResult acc;
    const double whole = GaussLegendre<10>::instance().apply(f, a, b);
    detail::integrate_panel(f, a, b, whole, abs_tol, 0, acc);
    return acc;
}

template <class F>
double integrate(F&& f, double a, double b, double abs_tol) {
    return integrate_with_error(std::forward<F>(f), a, b, abs_tol).value;
}

} // namespace h1::verify
