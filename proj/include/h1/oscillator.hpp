#pragma once

// Singular oscillator on the upper sheet of the hyperbola H1, in the
// pseudospherical coordinate tau (s0 = R cosh tau, s1 = R sinh tau).
// Units: hbar = mass = 1.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "h1/errors.hpp"
#include "h1/grid.hpp"
#include "h1/special.hpp"

namespace h1::oscillator {

/// Immutable parameter set (omega, R, k, branch) with derived k0.
class OscillatorModel {
public:
    OscillatorModel(double omega, double radius, double k, Branch branch)
        : omega_(omega), radius_(radius), k_(k), branch_(branch) {
        if (!(omega > 0.0) || !(radius > 0.0) || !(k > 0.0) || !std::isfinite(omega) ||
            !std::isfinite(radius) || !std::isfinite(k))
            throw ModelError("OscillatorModel: omega, radius and k must be positive and finite");
        if (branch == Branch::minus && k > 0.5)
            throw ModelError("OscillatorModel: the minus branch requires k <= 1/2 "
                             "(for k > 1/2 motion is confined to a half-line)");
        // k0 = sqrt(omega^2 R^4 + 1/4)
        k0_ = std::hypot(omega * radius * radius, 0.5);
    }

    double omega() const noexcept { return omega_; }
    double radius() const noexcept { return radius_; }
    double k() const noexcept { return k_; }
    Branch branch() const noexcept { return branch_; }
    double k0() const noexcept { return k0_; }
    /// ±k according to the branch.
    double signed_k() const noexcept { return sign_of(branch_) * k_; }

    /// Full-line (even/odd) states exist only when the csch^2 term is not repulsive.
    bool full_line() const noexcept { return k_ <= 0.5; }

private:
    double omega_;
    double radius_;
    double k_;
    Branch branch_;
    double k0_;
};

struct BoundState {
    unsigned n = 0;
    double epsilon = 0.0;
    double energy = 0.0;
    double norm_constant = 0.0;
    Parity parity = Parity::half_line;
};

inline double k0_of(const OscillatorModel& m) noexcept { return m.k0(); }

/// Potential in pseudospherical form.
inline double potential(const OscillatorModel& m, double tau) {
    const double R = m.radius();
    const double c_inv_sq = m.k() * m.k() - 0.25;
    const double ch = std::cosh(tau);
    double v = -(m.k0() * m.k0() - 0.25) / (ch * ch);
    if (c_inv_sq != 0.0) {
        if (tau == 0.0)
            throw DomainError("oscillator::potential: singular at tau = 0 for k != 1/2");
        const double sh = std::sinh(tau);
        v += c_inv_sq / (sh * sh);
    }
    const double w = m.omega();
    return v / (2.0 * R * R) + 0.5 * w * w * R * R;
}

/// Potential of the reduced Poschl-Teller equation  -Psi'' + U Psi = eps Psi.
inline double reduced_potential(const OscillatorModel& m, double tau) {
    const double ch = std::cosh(tau);
    double u = -(m.k0() * m.k0() - 0.25) / (ch * ch);
    const double c = m.k() * m.k() - 0.25;
    if (c != 0.0) {
        const double sh = std::sinh(tau);
        u += c / (sh * sh);
    }
    return u;
}

/// Number of n >= 0 with 2n + 1 ± k < k0.
inline unsigned bound_state_count(const OscillatorModel& m) noexcept {
    const double half_gap = 0.5 * (m.k0() - m.signed_k() - 1.0);
    if (!(half_gap > 0.0))
        return 0;
    return static_cast<unsigned>(std::ceil(half_gap));
}

namespace detail {

inline void require_bound(const OscillatorModel& m, unsigned n) {
    const unsigned count = bound_state_count(m);
    if (n >= count)
        throw IndexError("oscillator: n = " + std::to_string(n) + " outside bound range (count " +
                         std::to_string(count) + ")");
}

inline void require_positive_gamma_argument(double x, const char* what) {
    if (!(x > 0.0))
        throw InternalError(std::string("oscillator: non-positive Gamma argument in ") + what);
}

} // namespace detail

/// Decay rate sqrt(-eps) = k0 - (2n + 1 ± k) of state n.
inline double decay_rate(const OscillatorModel& m, unsigned n) {
    detail::require_bound(m, n);
    return m.k0() - (2.0 * n + 1.0 + m.signed_k());
}

inline double epsilon_n(const OscillatorModel& m, unsigned n) {
    const double kappa = decay_rate(m, n);
    return -kappa * kappa;
}

inline double energy_n(const OscillatorModel& m, unsigned n) {
    detail::require_bound(m, n);
    const double a = 2.0 * n + 1.0 + m.signed_k();
    const double R = m.radius();
    return -(a * a - 2.0 * m.k0() * a + 0.25) / (2.0 * R * R);
}

/// Natural log of the normalization constant N_n.
inline double log_norm_constant(const OscillatorModel& m, unsigned n) {
    detail::require_bound(m, n);
    const double sk = m.signed_k();
    const double k0 = m.k0();
    const double dn = n;
    const double lin = k0 - sk - 1.0 - 2.0 * dn;
    detail::require_positive_gamma_argument(lin, "(k0 -+ k - 1 - 2n)");
    detail::require_positive_gamma_argument(k0 - dn, "Gamma(k0 - n)");
    detail::require_positive_gamma_argument(dn + 1.0 + sk, "Gamma(n + 1 ± k)");
    detail::require_positive_gamma_argument(k0 - dn - sk, "Gamma(k0 - n -+ k)");
    detail::require_positive_gamma_argument(1.0 + sk, "Gamma(1 ± k)");
    using special::log_gamma;
    return -log_gamma(1.0 + sk) +
           0.5 * (std::log(lin) + log_gamma(k0 - dn) + log_gamma(dn + 1.0 + sk) -
                  std::log(m.radius()) - log_gamma(k0 - dn - sk) - log_gamma(dn + 1.0));
}

inline double norm_constant(const OscillatorModel& m, unsigned n) {
    return std::exp(log_norm_constant(m, n));
}

inline BoundState bound_state(const OscillatorModel& m, unsigned n) {
    return BoundState{n, epsilon_n(m, n), energy_n(m, n), norm_constant(m, n), Parity::half_line};
}

inline std::vector<BoundState> spectrum(const OscillatorModel& m) {
    std::vector<BoundState> out;
    const unsigned count = bound_state_count(m);
    out.reserve(count);
    for (unsigned n = 0; n < count; ++n)
        out.push_back(bound_state(m, n));
    return out;
}

/**
 * @brief Normalized half-line wavefunction at a single tau >= 0.
 *
 * Powers of sinh and cosh are combined in log space so that large k0
 * (k0 ~ omega R^2) neither overflows nor underflows prematurely.
 */
inline double wavefunction(const OscillatorModel& m, unsigned n, double tau) {
    if (!(tau >= 0.0))
        throw DomainError("oscillator::wavefunction: tau must be >= 0 (reflect for tau < 0)");
    const double lnN = log_norm_constant(m, n);
    const double sk = m.signed_k();
    const double k0 = m.k0();
    const double sinh_power = 0.5 + sk;
    const double cosh_power = 2.0 * n - k0 + 0.5;
    if (tau == 0.0)
        return sinh_power > 0.0 ? 0.0 : std::exp(lnN);
    const double th = std::tanh(tau);
    const double poly = special::hyp2f1_terminating(n, k0 - n, 1.0 + sk, th * th);
    const double log_mag = lnN + sinh_power * special::log_sinh(tau) + cosh_power * special::log_cosh(tau);
    return std::exp(log_mag) * poly;
}

/// Full-line assembly: even uses |tau|, odd adds sign(tau); half_line requires tau >= 0.
inline double wavefunction(const OscillatorModel& m, unsigned n, double tau, Parity parity) {
    if (parity == Parity::half_line)
        return wavefunction(m, n, tau);
    if (!m.full_line())
        throw DomainError("oscillator::wavefunction: even/odd states need k <= 1/2");
    const double v = wavefunction(m, n, std::fabs(tau));
    return (parity == Parity::odd && tau < 0.0) ? -v : v;
}

inline GridFunction eval_wavefunction(const OscillatorModel& m, unsigned n, const UniformGrid& tau_grid,
                                      Parity parity = Parity::half_line) {
    detail::require_bound(m, n);
    return sample(tau_grid, [&](double t) { return wavefunction(m, n, t, parity); });
}

// ---- flat-space (R -> infinity) system -------------------------------------

namespace detail {
inline double flat_signed_k(double omega, double k, Branch branch) {
    if (!(omega > 0.0) || !(k > 0.0))
        throw ModelError("flat oscillator: omega and k must be positive");
    if (branch == Branch::minus && k > 0.5)
        throw ModelError("flat oscillator: the minus branch requires k <= 1/2");
    return sign_of(branch) * k;
}
} // namespace detail

inline double flat_energy(double omega, double k, Branch branch, unsigned n) {
    const double sk = detail::flat_signed_k(omega, k, branch);
    return omega * (2.0 * n + 1.0 + sk);
}

inline double flat_wavefunction(double omega, double k, Branch branch, unsigned n, double x) {
    const double sk = detail::flat_signed_k(omega, k, branch);
    if (!(x >= 0.0))
        throw DomainError("oscillator::flat_wavefunction: x must be >= 0");
    using special::log_gamma;
    const double log_c = 0.5 * (0.5 * std::log(omega) + log_gamma(n + 1.0 + sk) - log_gamma(n + 1.0) -
                                2.0 * log_gamma(1.0 + sk));
    const double power = 0.5 + sk;
    const double t = omega * x * x;
    if (x == 0.0)
        return power > 0.0 ? 0.0 : std::exp(log_c);
    const double log_mag = log_c + power * std::log(std::sqrt(omega) * x) - 0.5 * t;
    return std::exp(log_mag) * special::hyp1f1_terminating(n, 1.0 + sk, t);
}

inline GridFunction flat_wavefunction(double omega, double k, Branch branch, unsigned n,
                                      const UniformGrid& x_grid) {
    return sample(x_grid, [&](double x) { return flat_wavefunction(omega, k, branch, n, x); });
}

} // namespace h1::oscillator
