#pragma once

// Sturm-sequence eigenvalue oracles for reduced 1D Schrodinger operators
// -Psi'' + U(tau) Psi = lambda Psi on a truncated half-line.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "h1/errors.hpp"
#include "h1/special.hpp"
#include "h1/verify/quadrature.hpp"

namespace h1::verify {

/// Uniform grid tau_min, tau_min + h, ..., tau_max.
struct FDGrid {
    double tau_min = 0.0;
    double tau_max = 0.0;
    double h = 0.0;

    FDGrid(double tau_min_, double tau_max_, double h_) : tau_min(tau_min_), tau_max(tau_max_), h(h_) {
        if (!(h > 0.0) || !(tau_min < tau_max))
            throw DomainError("FDGrid: need h > 0 and tau_min < tau_max");
        const double steps = (tau_max - tau_min) / h;
        if (std::fabs(steps - std::round(steps)) > 1e-6 * std::max(1.0, steps))
            throw DomainError("FDGrid: (tau_max - tau_min)/h must be an integer");
        if (std::round(steps) < 10.0)
            throw DomainError("FDGrid: need at least 10 intervals");
    }

    std::size_t intervals() const noexcept { return static_cast<std::size_t>(std::llround((tau_max - tau_min) / h)); }
    double node(std::size_t i) const noexcept { return tau_min + static_cast<double>(i) * h; }
};

/**
 * @brief Symmetric tridiagonal pencil K - lambda M with M positive definite.
 *
 * count_below(lambda) is the number of negative LDL^T pivots of K - lambda M,
 * which by Sylvester's law of inertia equals the number of eigenvalues below
 * lambda.
 */
class TridiagonalPencil {
public:
    TridiagonalPencil(std::vector<double> k_diag, std::vector<double> k_off, std::vector<double> m_diag,
                      std::vector<double> m_off)
        : kd_(std::move(k_diag)), ke_(std::move(k_off)), md_(std::move(m_diag)), me_(std::move(m_off)) {
        if (kd_.empty() || md_.size() != kd_.size() || ke_.size() + 1 != kd_.size() || me_.size() != ke_.size())
            throw DomainError("TridiagonalPencil: inconsistent sizes");
    }

    /// Standard problem (M = I).
    TridiagonalPencil(std::vector<double> k_diag, std::vector<double> k_off)
        : TridiagonalPencil(k_diag, k_off, std::vector<double>(k_diag.size(), 1.0),
                            std::vector<double>(k_off.size(), 0.0)) {}

    std::size_t size() const noexcept { return kd_.size(); }

    std::size_t count_below(double lambda) const noexcept {
        constexpr double tiny = std::numeric_limits<double>::min();
        std::size_t negatives = 0;
        double q = kd_[0] - lambda * md_[0];
        for (std::size_t i = 0;; ++i) {
            if (q == 0.0)
                q = -tiny;
            if (q < 0.0)
                ++negatives;
            if (i + 1 == kd_.size())
                break;
            const double off = ke_[i] - lambda * me_[i];
            q = (kd_[i + 1] - lambda * md_[i + 1]) - off * off / q;
        }
        return negatives;
    }

    /// The m smallest eigenvalues, ascending, by bisection on count_below.
    std::vector<double> lowest(unsigned m) const {
        if (m == 0 || m > size())
            throw DomainError("TridiagonalPencil::lowest: need 1 <= m <= size");
        double lo = -1.0;
        for (int i = 0; count_below(lo) > 0; ++i) {
            if (i > 1100 || !std::isfinite(lo))
                throw ConvergenceError("fd eigenvalues: could not bracket the spectrum from below");
            lo *= 2.0;
        }
        double hi = 1.0;
        for (int i = 0; count_below(hi) < m; ++i) {
            if (i > 1100 || !std::isfinite(hi))
                throw ConvergenceError("fd eigenvalues: could not bracket the spectrum from above");
            hi *= 2.0;
        }
        std::vector<double> out;
        out.reserve(m);
        double floor = lo;
        for (unsigned j = 0; j < m; ++j) {
            double a = floor, b = hi;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b)
                    break;
                if (count_below(mid) > j)
                    b = mid;
                else
                    a = mid;
            }
            out.push_back(0.5 * (a + b));
            floor = a;
        }
        return out;
    }

private:
    std::vector<double> kd_, ke_, md_, me_;
};

/**
 * @brief Lowest m eigenvalues of -d^2/dtau^2 + U by the 3-point scheme.
 *
 * Every grid node is an unknown; Psi vanishes at the ghost nodes
 * tau_min - h and tau_max + h, so tau_min = h places the left Dirichlet
 * point exactly at tau = 0. Requested m beyond the bound states returns the
 * discretized-box continuum, not an error.
 */
template <class Potential>
std::vector<double> fd_eigenvalues(Potential&& u, const FDGrid& grid, unsigned m) {
    const std::size_t nodes = grid.intervals() + 1;
    const double inv_h2 = 1.0 / (grid.h * grid.h);
    std::vector<double> diag(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        diag[i] = 2.0 * inv_h2 + u(grid.node(i));
        if (!std::isfinite(diag[i]))
            throw DomainError("fd_eigenvalues: potential not finite at tau = " + std::to_string(grid.node(i)));
    }
    std::vector<double> off(nodes - 1, -inv_h2);
    return TridiagonalPencil(std::move(diag), std::move(off)).lowest(m);
}

/**
 * @brief Lowest m eigenvalues for a potential whose singular part is
 * c / sinh^2(tau) with c = a (a - 1), selecting the solution ~ tau^a.
 *
 * Psi = sinh(tau)^a phi turns -Psi'' + (U_reg + c csch^2) Psi = lambda Psi into
 * -(w phi')' + (U_reg - a^2) w phi = lambda w phi with w = sinh^{2a}: the
 * singular term cancels and tau = 0 becomes a natural boundary. Discretized by
 * piecewise-linear Galerkin on [0, tau_max] (Dirichlet at tau_max); element
 * integrals use Gauss-Legendre in u = sqrt(tau) so that weights ~ tau^{2a-1}
 * stay smooth.
 */
template <class RegularPotential>
std::vector<double> factored_eigenvalues(RegularPotential&& u_regular, double exponent, double tau_max, double h,
                                         unsigned m) {
    if (!(exponent >= 0.0))
        throw DomainError("factored_eigenvalues: exponent must be >= 0");
    const FDGrid grid(0.0, tau_max, h);
    const std::size_t elements = grid.intervals();
    const std::size_t nodes = elements; // node `elements` sits at tau_max (Dirichlet)
    std::vector<double> kd(nodes, 0.0), ke(nodes - 1, 0.0), md(nodes, 0.0), me(nodes - 1, 0.0);
    const auto& rule = GaussLegendre<8>::instance();
    const double a2 = exponent * exponent;
    for (std::size_t e = 0; e < elements; ++e) {
        const double ta = grid.node(e), tb = grid.node(e + 1);
        const double ua = std::sqrt(ta), ub = std::sqrt(tb);
        const double umid = 0.5 * (ua + ub), uhalf = 0.5 * (ub - ua);
        double stiff = 0.0, m11 = 0.0, m12 = 0.0, m22 = 0.0, q11 = 0.0, q12 = 0.0, q22 = 0.0;
        for (std::size_t g = 0; g < 8; ++g) {
            const double uu = umid + uhalf * rule.nodes[g];
            const double t = uu * uu;
            const double jac = 2.0 * uu * uhalf * rule.weights[g];
            const double w = std::exp(2.0 * exponent * special::log_sinh(t));
            const double q = u_regular(t) - a2;
            const double l1 = (tb - t) / h, l2 = (t - ta) / h;
            stiff += w * jac;
            m11 += w * l1 * l1 * jac;
            m12 += w * l1 * l2 * jac;
            m22 += w * l2 * l2 * jac;
            q11 += w * q * l1 * l1 * jac;
            q12 += w * q * l1 * l2 * jac;
            q22 += w * q * l2 * l2 * jac;
        }
        stiff /= h * h;
        kd[e] += stiff + q11;
        md[e] += m11;
        if (e + 1 < nodes) {
            kd[e + 1] += stiff + q22;
            md[e + 1] += m22;
            ke[e] += -stiff + q12;
            me[e] += m12;
        }
    }
    // Congruence by diag(M)^{-1/2}: same inertia, entries of order one.
    std::vector<double> scale(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        if (!(md[i] > 0.0) || !std::isfinite(kd[i]))
            throw DomainError("factored_eigenvalues: degenerate element integrals");
        scale[i] = 1.0 / std::sqrt(md[i]);
    }
    for (std::size_t i = 0; i < nodes; ++i) {
        kd[i] *= scale[i] * scale[i];
        md[i] = 1.0;
        if (i + 1 < nodes) {
            ke[i] *= scale[i] * scale[i + 1];
            me[i] *= scale[i] * scale[i + 1];
        }
    }
    return TridiagonalPencil(std::move(kd), std::move(ke), std::move(md), std::move(me)).lowest(m);
}

} // namespace h1::verify
