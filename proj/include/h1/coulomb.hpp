#pragma once

// Singular Coulomb problem on H1 and its duality with the singular
// oscillator through e^tau = cosh(alpha), Psi = W / sqrt(coth alpha).

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "h1/errors.hpp"
#include "h1/grid.hpp"
#include "h1/special.hpp"

namespace h1::coulomb {

/// Immutable parameter set (mu, R, p, branch) with derived k = 2p and nu = (1 ± k)/2.
class CoulombModel {
public:
    CoulombModel(double mu, double radius, double p, Branch branch)
        : mu_(mu), radius_(radius), p_(p), branch_(branch) {
        if (!(mu > 0.0) || !(radius > 0.0) || !(p > 0.0) || !std::isfinite(mu) ||
            !std::isfinite(radius) || !std::isfinite(p))
            throw ModelError("CoulombModel: mu, radius and p must be positive and finite");
        if (branch == Branch::minus && p > 0.25)
            throw ModelError("CoulombModel: the minus branch requires p <= 1/4 (k = 2p <= 1/2)");
        nu_ = 0.5 * (1.0 + signed_k());
    }

    double mu() const noexcept { return mu_; }
    double radius() const noexcept { return radius_; }
    double p() const noexcept { return p_; }
    Branch branch() const noexcept { return branch_; }
    double k() const noexcept { return 2.0 * p_; }
    double signed_k() const noexcept { return sign_of(branch_) * 2.0 * p_; }
    double nu() const noexcept { return nu_; }
    /// mu * R, the dimensionless coupling.
    double coupling() const noexcept { return mu_ * radius_; }

    /// The csch^2 term is absent (p = 1/2) or attractive: motion on the full line.
    bool full_line() const noexcept { return p_ <= 0.5; }

private:
    double mu_;
    double radius_;
    double p_;
    Branch branch_;
    double nu_;
};

struct CoulombBoundState {
    unsigned n = 0;
    double nu = 0.0;
    double sigma = 0.0;
    double energy = 0.0;
    double norm_constant = 0.0;
    Parity parity = Parity::half_line;
};

/// Image of a Coulomb energy in oscillator (Poschl-Teller) variables.
struct OscillatorImage {
    double epsilon;
    double k0;
    double k;
};

inline double potential(const CoulombModel& m, double tau) {
    if (tau == 0.0)
        throw DomainError("coulomb::potential: singular at tau = 0");
    const double a = std::fabs(tau);
    // coth|tau| - 1 = 2 / (e^{2|tau|} - 1)
    const double coth_minus_one = 2.0 / std::expm1(2.0 * a);
    const double R = m.radius();
    double v = -(m.mu() / R) * coth_minus_one;
    const double c = m.p() * m.p() - 0.25;
    if (c != 0.0) {
        const double sh = std::sinh(tau);
        v += c / (2.0 * R * R * sh * sh);
    }
    return v;
}

/// Potential of the reduced Manning-Rosen equation -Psi'' + U Psi = lambda Psi
/// on tau > 0, with lambda = 2 R^2 E - 2 mu R.
inline double reduced_potential(const CoulombModel& m, double tau) {
    double u = -2.0 * m.coupling() / std::tanh(tau);
    const double c = m.p() * m.p() - 0.25;
    if (c != 0.0) {
        const double sh = std::sinh(tau);
        u += c / (sh * sh);
    }
    return u;
}

/// Eigenvalue of the reduced equation belonging to energy E.
inline double reduced_eigenvalue(const CoulombModel& m, double energy) noexcept {
    const double R = m.radius();
    return 2.0 * R * R * energy - 2.0 * m.coupling();
}

/// tau = ln cosh(alpha).
inline double duality_tau_of_alpha(double alpha) noexcept { return special::log_cosh(alpha); }

/// alpha = arccosh(e^tau), inverse of duality_tau_of_alpha on alpha >= 0.
inline double duality_alpha_of_tau(double tau) {
    if (!(tau >= 0.0))
        throw DomainError("duality_alpha_of_tau: tau must be >= 0");
    // arccosh(e^t) = ln(e^t + sqrt(e^{2t} - 1)) = t + ln(1 + sqrt(1 - e^{-2t}))
    return tau + std::log1p(std::sqrt(-std::expm1(-2.0 * tau)));
}

inline OscillatorImage map_to_oscillator(const CoulombModel& m, double energy) {
    const double R = m.radius();
    const double eps = 2.0 * R * R * energy;
    const double k0_sq = -eps + 4.0 * m.coupling();
    if (!(k0_sq > 0.0))
        throw DomainError("map_to_oscillator: k0^2 = -2R^2E + 4 mu R must be positive");
    return OscillatorImage{eps, std::sqrt(k0_sq), m.k()};
}

/// Number of n >= 0 with mu R > (n + nu)^2.
inline unsigned bound_state_count(const CoulombModel& m) noexcept {
    const double g = m.coupling();
    const double nu = m.nu();
    const double guess = std::ceil(std::sqrt(g) - nu);
    unsigned c = guess > 0.0 ? static_cast<unsigned>(guess) : 0u;
    while (c > 0 && !(g > (c - 1 + nu) * (c - 1 + nu)))
        --c;
    while (g > (c + nu) * (c + nu))
        ++c;
    return c;
}

namespace detail {

inline void require_bound(const CoulombModel& m, unsigned n) {
    const unsigned count = bound_state_count(m);
    if (n >= count)
        throw IndexError("coulomb: n = " + std::to_string(n) + " outside bound range (count " +
                         std::to_string(count) + ")");
}

inline void require_positive(double x, const char* what) {
    if (!(x > 0.0))
        throw InternalError(std::string("coulomb: non-positive argument in ") + what);
}

} // namespace detail

/// sigma_nu = mu R / (n + nu); depends on n, so it lives on the state.
inline double sigma(const CoulombModel& m, unsigned n) {
    detail::require_bound(m, n);
    return m.coupling() / (n + m.nu());
}

inline double energy_n(const CoulombModel& m, unsigned n) {
    detail::require_bound(m, n);
    const double s = n + m.nu();
    const double R = m.radius();
    const double mu = m.mu();
    return -s * s / (2.0 * R * R) - mu * mu / (2.0 * s * s) + mu / R;
}

/// k0 of the dual oscillator for state n, via map_to_oscillator.
inline double dual_k0(const CoulombModel& m, unsigned n) {
    return map_to_oscillator(m, energy_n(m, n)).k0;
}

/// ln A_n, the constant of the alpha-form solution W_n.
inline double log_norm_constant_general(const CoulombModel& m, unsigned n) {
    detail::require_bound(m, n);
    const double k0 = dual_k0(m, n);
    const double sk = m.signed_k();
    const double dn = n;
    const double lin = k0 - 2.0 * dn - sk - 1.0;
    detail::require_positive(lin, "(k0 - 2n -+ k - 1)");
    detail::require_positive(k0 - dn, "Gamma(k0 - n)");
    detail::require_positive(dn + 1.0 + sk, "Gamma(n + 1 ± k)");
    detail::require_positive(1.0 + sk, "Gamma(1 ± k)");
    detail::require_positive(k0 - dn - sk, "Gamma(k0 - n -+ k)");
    using special::log_gamma;
    return 0.5 * (std::log(k0) + std::log(lin) + log_gamma(k0 - dn) + log_gamma(dn + 1.0 + sk) -
                  std::log(m.radius()) - std::log(2.0 * dn + 1.0 + sk) - log_gamma(dn + 1.0) -
                  2.0 * log_gamma(1.0 + sk) - log_gamma(k0 - dn - sk));
}

inline double norm_constant_general(const CoulombModel& m, unsigned n) {
    return std::exp(log_norm_constant_general(m, n));
}

/// ln of the constant of the tau-form wavefunction, written in sigma_nu.
inline double log_norm_constant_tau(const CoulombModel& m, unsigned n) {
    const double s = sigma(m, n);
    const double nu = m.nu();
    const double dn = n;
    const double gap = s * s - (dn + nu) * (dn + nu);
    detail::require_positive(gap, "sigma^2 - (n + nu)^2");
    detail::require_positive(s + 1.0 - nu, "Gamma(sigma + 1 - nu)");
    using special::log_gamma;
    return nu * std::numbers::ln2 +
           0.5 * (std::log(gap) + log_gamma(s + nu) + log_gamma(dn + 2.0 * nu) -
                  std::log(2.0 * m.radius() * (dn + nu)) - log_gamma(dn + 1.0) -
                  log_gamma(s + 1.0 - nu) - 2.0 * log_gamma(2.0 * nu));
}

inline double norm_constant_tau(const CoulombModel& m, unsigned n) {
    return std::exp(log_norm_constant_tau(m, n));
}

inline CoulombBoundState bound_state(const CoulombModel& m, unsigned n) {
    return CoulombBoundState{n, m.nu(), sigma(m, n), energy_n(m, n), norm_constant_tau(m, n),
                             Parity::half_line};
}

inline std::vector<CoulombBoundState> spectrum(const CoulombModel& m) {
    std::vector<CoulombBoundState> out;
    const unsigned count = bound_state_count(m);
    for (unsigned n = 0; n < count; ++n)
        out.push_back(bound_state(m, n));
    return out;
}

/// Oscillator-form solution W_n(alpha), alpha >= 0.
inline double w_solution(const CoulombModel& m, unsigned n, double alpha) {
    if (!(alpha >= 0.0))
        throw DomainError("coulomb::w_solution: alpha must be >= 0");
    const double lnA = log_norm_constant_general(m, n);
    const double k0 = dual_k0(m, n);
    const double sk = m.signed_k();
    const double sinh_power = 0.5 + sk;
    if (alpha == 0.0)
        return sinh_power > 0.0 ? 0.0 : std::exp(lnA);
    const double th = std::tanh(alpha);
    const double poly = special::hyp2f1_terminating(n, k0 - n, 1.0 + sk, th * th);
    const double log_mag =
        lnA + sinh_power * special::log_sinh(alpha) + (2.0 * n - k0 + 0.5) * special::log_cosh(alpha);
    return std::exp(log_mag) * poly;
}

inline GridFunction w_solution(const CoulombModel& m, unsigned n, const UniformGrid& alpha_grid) {
    detail::require_bound(m, n);
    return sample(alpha_grid, [&](double a) { return w_solution(m, n, a); });
}

/// Normalized half-line wavefunction Psi_n(tau), tau >= 0.
inline double wavefunction(const CoulombModel& m, unsigned n, double tau) {
    if (!(tau >= 0.0))
        throw DomainError("coulomb::wavefunction: tau must be >= 0 on the half-line");
    const double lnC = log_norm_constant_tau(m, n);
    const double nu = m.nu();
    const double s = m.coupling() / (n + nu);
    if (tau == 0.0)
        return 0.0; // nu > 0
    const double poly = special::hyp2f1_terminating(n, nu + s, 2.0 * nu, -std::expm1(-2.0 * tau));
    const double log_mag = lnC + nu * special::log_sinh(tau) + tau * (n - s);
    return std::exp(log_mag) * poly;
}

inline double wavefunction(const CoulombModel& m, unsigned n, double tau, Parity parity) {
    if (parity == Parity::half_line)
        return wavefunction(m, n, tau);
    if (!m.full_line())
        throw DomainError("coulomb::wavefunction: even/odd states need p <= 1/2");
    const double v = wavefunction(m, n, std::fabs(tau));
    return (parity == Parity::odd && tau < 0.0) ? -v : v;
}

inline GridFunction wavefunction_tau(const CoulombModel& m, unsigned n, const UniformGrid& tau_grid,
                                     Parity parity = Parity::half_line) {
    detail::require_bound(m, n);
    if (parity != Parity::half_line && !m.full_line())
        throw DomainError("coulomb::wavefunction_tau: even/odd states need p <= 1/2");
    return sample(tau_grid, [&](double t) { return wavefunction(m, n, t, parity); });
}

// ---- flat-space (R -> infinity) system -------------------------------------

inline double flat_energy(double mu, double nu, unsigned n) {
    if (!(mu > 0.0) || !(nu > 0.0))
        throw ModelError("coulomb::flat_energy: mu and nu must be positive");
    const double s = n + nu;
    return -mu * mu / (2.0 * s * s);
}

/// Flat 1D Coulomb (anyon) state in y = 2 mu |x| / (n + nu); half-line norm 1/2.
inline double flat_wavefunction(double mu, double nu, unsigned n, double x, Parity parity = Parity::half_line) {
    if (!(mu > 0.0) || !(nu > 0.0))
        throw ModelError("coulomb::flat_wavefunction: mu and nu must be positive");
    if (parity == Parity::half_line && !(x >= 0.0))
        throw DomainError("coulomb::flat_wavefunction: x must be >= 0 on the half-line");
    const double s = n + nu;
    const double y = 2.0 * mu * std::fabs(x) / s;
    if (y == 0.0)
        return 0.0;
    using special::log_gamma;
    const double log_c = 0.5 * std::log(mu) - log_gamma(2.0 * nu) - std::log(s) +
                         0.5 * (log_gamma(n + 2.0 * nu) - std::log(2.0) - log_gamma(n + 1.0));
    const double v = std::exp(log_c + nu * std::log(y) - 0.5 * y) * special::hyp1f1_terminating(n, 2.0 * nu, y);
    return (parity == Parity::odd && x < 0.0) ? -v : v;
}

inline GridFunction flat_wavefunction(double mu, double nu, unsigned n, const UniformGrid& x_grid,
                                      Parity parity = Parity::half_line) {
    return sample(x_grid, [&](double x) { return flat_wavefunction(mu, nu, n, x, parity); });
}

} // namespace h1::coulomb
