#pragma once

// Verification checks. Each check compares a closed-form result with an
// oracle that does not share its code path and records the outcome in a
// VerificationReport carrying its own tolerance.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "h1/coulomb.hpp"
#include "h1/oscillator.hpp"
#include "h1/verify/oracles.hpp"
#include "h1/verify/quadrature.hpp"
#include "h1/verify/report.hpp"
#include "h1/verify/residual.hpp"

namespace h1::verify {

// Check tolerances.
inline constexpr double kOrthonormalityTol = 1e-8;
inline constexpr double kResidualTol = 1e-6;
inline constexpr double kOracleRelTol = 1e-3;
inline constexpr double kDualitySpectrumTol = 1e-12;
inline constexpr double kDualityPointwiseTol = 1e-8;
inline constexpr double kContractionRatioTol = 0.05;
inline constexpr double kContractionShapeTol = 0.02;
inline constexpr double kContractionAmplitudeTol = 0.01;
inline constexpr double kContractionLimitTol = 1e-3;
inline constexpr double kContractionIdentityTol = 1e-6;
inline constexpr double kDecompositionTol = 1e-12;

/// Number of lowest states compared against the eigenvalue oracle.
inline constexpr unsigned kMaxOracleStates = 6;

struct Defect {
    enum class Target { none, epsilon, k0 };
    Target target = Target::none;
    double magnitude = 0.0;
};

/// "epsilon:1e-6" or "k0:1e-6".
inline std::optional<Defect> parse_defect(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        return std::nullopt;
    const std::string_view target = spec.substr(0, colon);
    const std::string value(spec.substr(colon + 1));
    Defect d;
    if (target == "epsilon")
        d.target = Defect::Target::epsilon;
    else if (target == "k0")
        d.target = Defect::Target::k0;
    else
        return std::nullopt;
    try {
        std::size_t used = 0;
        d.magnitude = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(d.magnitude))
            return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return d;
}

struct CheckOptions {
    double tol_scale = 1.0;
    Defect defect{};
};

inline ParameterMap describe(const oscillator::OscillatorModel& m) {
    return {{"system", "oscillator"},
            {"omega", format_number(m.omega())},
            {"radius", format_number(m.radius())},
            {"k", format_number(m.k())},
            {"branch", std::string(to_string(m.branch()))}};
}

inline ParameterMap describe(const coulomb::CoulombModel& m) {
    return {{"system", "coulomb"},
            {"mu", format_number(m.mu())},
            {"radius", format_number(m.radius())},
            {"p", format_number(m.p())},
            {"branch", std::string(to_string(m.branch()))}};
}

inline ParameterMap with(ParameterMap base, const std::string& key, const std::string& value) {
    base[key] = value;
    return base;
}

namespace detail {

/// integral_0^T f(tau) dtau with tau = s^2, which smooths tau^{2a} endpoint behavior.
template <class F>
double half_line_integral(F&& f, double tau_max, double abs_tol) {
    const auto g = [&](double s) { return 2.0 * s * f(s * s); };
    return integrate(g, 0.0, std::sqrt(tau_max), abs_tol);
}

inline double quadrature_tau_max(double slowest_decay) { return std::max(25.0, 40.0 / slowest_decay); }

} // namespace detail

// ---- orthonormality ---------------------------------------------------------

inline std::vector<VerificationReport> check_orthonormality(const oscillator::OscillatorModel& m,
                                                            const CheckOptions& opt = {}) {
    std::vector<VerificationReport> out;
    const unsigned count = oscillator::bound_state_count(m);
    const double R = m.radius();
    for (unsigned a = 0; a < count; ++a) {
        for (unsigned b = a; b < count; ++b) {
            const double slowest = std::min(oscillator::decay_rate(m, a), oscillator::decay_rate(m, b));
            const double value = R * detail::half_line_integral(
                                         [&](double t) {
                                             return oscillator::wavefunction(m, a, t) * oscillator::wavefunction(m, b, t);
                                         },
                                         detail::quadrature_tau_max(slowest), 1e-12 / R);
            const double expected = a == b ? 0.5 : 0.0;
            out.push_back(make_report("orthonormality.oscillator", value - expected, kOrthonormalityTol * opt.tol_scale,
                                      "adaptive Gauss-Legendre quadrature of R*int_0^inf Psi_n Psi_n' dtau",
                                      with(with(describe(m), "n", std::to_string(a)), "n'", std::to_string(b))));
        }
    }
    return out;
}

inline std::vector<VerificationReport> check_orthonormality(const coulomb::CoulombModel& m,
                                                            const CheckOptions& opt = {}) {
    std::vector<VerificationReport> out;
    const unsigned count = coulomb::bound_state_count(m);
    const double R = m.radius();
    const auto kappa = [&](unsigned n) { return coulomb::sigma(m, n) - (n + m.nu()); };
    for (unsigned a = 0; a < count; ++a) {
        for (unsigned b = a; b < count; ++b) {
            const double value =
                R * detail::half_line_integral(
                        [&](double t) { return coulomb::wavefunction(m, a, t) * coulomb::wavefunction(m, b, t); },
                        detail::quadrature_tau_max(std::min(kappa(a), kappa(b))), 1e-12 / R);
            const double expected = a == b ? 0.5 : 0.0;
            out.push_back(make_report("orthonormality.coulomb", value - expected, kOrthonormalityTol * opt.tol_scale,
                                      "adaptive Gauss-Legendre quadrature of R*int_0^inf Psi_n Psi_n' dtau",
                                      with(with(describe(m), "n", std::to_string(a)), "n'", std::to_string(b))));
        }
        // alpha-form normalization R int W^2 tanh^2(alpha) dalpha = 1/2
        const double alpha_max = coulomb::duality_alpha_of_tau(detail::quadrature_tau_max(kappa(a)));
        const double w_norm = R * detail::half_line_integral(
                                      [&](double al) {
                                          const double w = coulomb::w_solution(m, a, al);
                                          const double th = std::tanh(al);
                                          return w * w * th * th;
                                      },
                                      alpha_max, 1e-12 / R);
        out.push_back(make_report("orthonormality.coulomb.alpha_form", w_norm - 0.5, kOrthonormalityTol * opt.tol_scale,
                                  "quadrature of R*int_0^inf W_n^2 tanh^2(alpha) dalpha",
                                  with(describe(m), "n", std::to_string(a))));
        if (m.full_line()) {
            for (Parity parity : {Parity::even, Parity::odd}) {
                const double tmax = detail::quadrature_tau_max(kappa(a));
                const auto sq = [&](double t) {
                    const double v = coulomb::wavefunction(m, a, t, parity);
                    return v * v;
                };
                const double left = R * detail::half_line_integral([&](double t) { return sq(-t); }, tmax, 1e-12 / R);
                const double right = R * detail::half_line_integral(sq, tmax, 1e-12 / R);
                out.push_back(make_report("orthonormality.coulomb.full_line", left + right - 1.0,
                                          kOrthonormalityTol * opt.tol_scale,
                                          "quadrature of R*int_-inf^inf Psi^2 dtau for the parity-extended state",
                                          with(with(describe(m), "n", std::to_string(a)), "parity",
                                               std::string(to_string(parity)))));
            }
        }
    }
    return out;
}

// ---- ODE residual -----------------------------------------------------------

inline constexpr double kResidualLo = 0.1;
inline constexpr double kResidualHi = 10.0;

/// Residual step: 1e-3, refined so that kappa * h <= 0.006 for fast-decaying states.
inline double residual_step(double kappa) {
    const double h = std::min(1e-3, 0.006 / kappa);
    // snap to a divisor of the interval length
    const double steps = std::ceil((kResidualHi - kResidualLo) / h);
    return (kResidualHi - kResidualLo) / steps;
}

inline std::vector<VerificationReport> check_residual(const oscillator::OscillatorModel& m,
                                                      const CheckOptions& opt = {}) {
    std::vector<VerificationReport> out;
    for (unsigned n = 0; n < oscillator::bound_state_count(m); ++n) {
        const double eps = oscillator::epsilon_n(m, n);
        const double r = ode_residual([&](double t) { return oscillator::wavefunction(m, n, t); }, eps,
                                      [&](double t) { return oscillator::reduced_potential(m, t); }, kResidualLo,
                                      kResidualHi, residual_step(oscillator::decay_rate(m, n)));
        out.push_back(make_report("residual.oscillator", r, kResidualTol * opt.tol_scale,
                                  "5-point finite-difference residual of the reduced Poschl-Teller equation",
                                  with(describe(m), "n", std::to_string(n))));
    }
    return out;
}

inline std::vector<VerificationReport> check_residual(const coulomb::CoulombModel& m, const CheckOptions& opt = {}) {
    std::vector<VerificationReport> out;
    for (unsigned n = 0; n < coulomb::bound_state_count(m); ++n) {
        const double lambda = coulomb::reduced_eigenvalue(m, coulomb::energy_n(m, n));
        const double kappa = coulomb::sigma(m, n) - (n + m.nu());
        const double r = ode_residual([&](double t) { return coulomb::wavefunction(m, n, t); }, lambda,
                                      [&](double t) { return coulomb::reduced_potential(m, t); }, kResidualLo,
                                      kResidualHi, residual_step(kappa));
        out.push_back(make_report("residual.coulomb", r, kResidualTol * opt.tol_scale,
                                  "5-point finite-difference residual of the reduced Manning-Rosen equation",
                                  with(describe(m), "n", std::to_string(n))));
    }
    return out;
}

// ---- eigenvalue oracle ------------------------------------------------------

inline const char* oracle_description(bool dirichlet) {
    return dirichlet ? "3-point finite differences, Dirichlet, Sturm bisection"
                     : "sinh^a-factored P1 Galerkin, Sturm bisection on K - lambda M";
}

inline std::vector<VerificationReport> check_oracle(const oscillator::OscillatorModel& m, const CheckOptions& opt = {}) {
    std::vector<VerificationReport> out;
    const unsigned count = std::min(oscillator::bound_state_count(m), kMaxOracleStates);
    if (count == 0)
        return out;
    const auto fd = oracle_eigenvalues(m, count);
    const bool dirichlet = m.branch() == Branch::plus && m.k() >= 0.5;
    for (unsigned n = 0; n < count; ++n) {
        const double exact = oscillator::epsilon_n(m, n);
        out.push_back(make_report("oracle.oscillator", (fd[n] - exact) / std::fabs(exact),
                                  kOracleRelTol * opt.tol_scale, oracle_description(dirichlet),
                                  with(with(describe(m), "n", std::to_string(n)), "oracle_epsilon",
                                       format_number(fd[n]))));
    }
    return out;
}

inline std::vector<VerificationReport> check_oracle(const coulomb::CoulombModel& m, const CheckOptions& opt = {}) {
    std::vector<VerificationReport> out;
    const unsigned count = std::min(coulomb::bound_state_count(m), kMaxOracleStates);
    if (count == 0)
        return out;
    const auto fd = oracle_energies(m, count);
    const bool dirichlet = m.branch() == Branch::plus && m.p() >= 0.5;
    for (unsigned n = 0; n < count; ++n) {
        const double exact = coulomb::energy_n(m, n);
        out.push_back(make_report("oracle.coulomb", (fd[n] - exact) / std::fabs(exact),
                                  kOracleRelTol * opt.tol_scale, oracle_description(dirichlet),
                                  with(with(describe(m), "n", std::to_string(n)), "oracle_energy",
                                       format_number(fd[n]))));
    }
    return out;
}

// ---- duality ------------------------------------------------------------------

inline constexpr double kDualityAlphaLo = 0.2;
inline constexpr double kDualityAlphaHi = 5.0;
inline constexpr std::size_t kDualityPoints = 481;

/**
 * @brief Spectrum identity sqrt(-eps) = k0 - (2n + 1 ± k) and pointwise
 * proportionality Psi(ln cosh alpha) ~ W(alpha) / sqrt(coth alpha).
 *
 * Grid points adjacent to a sign change of Psi are skipped in the ratio,
 * since both sides vanish there.
 */
inline std::vector<VerificationReport> check_duality(const coulomb::CoulombModel& m, unsigned n,
                                                     const CheckOptions& opt = {}) {
    const double energy = coulomb::energy_n(m, n);
    auto image = coulomb::map_to_oscillator(m, energy);
    if (opt.defect.target == Defect::Target::epsilon)
        image.epsilon += opt.defect.magnitude;
    else if (opt.defect.target == Defect::Target::k0)
        image.k0 += opt.defect.magnitude;
    const double lhs = std::sqrt(-image.epsilon);
    const double rhs = image.k0 - (2.0 * n + 1.0 + m.signed_k());
    const ParameterMap params = with(describe(m), "n", std::to_string(n));
    std::vector<VerificationReport> out;
    out.push_back(make_report("duality.spectrum", lhs - rhs, kDualitySpectrumTol * opt.tol_scale,
                              "map_to_oscillator(E_n) substituted into the oscillator quantization", params));

    const auto grid = UniformGrid::spanning(kDualityAlphaLo, kDualityAlphaHi, kDualityPoints, CoordinateLabel::alpha);
    std::vector<double> psi(grid.count), ratio(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double al = grid[i];
        psi[i] = coulomb::wavefunction(m, n, coulomb::duality_tau_of_alpha(al));
        const double w = coulomb::w_solution(m, n, al) * std::sqrt(std::tanh(al));
        ratio[i] = psi[i] / w;
    }
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < grid.count; ++i) {
        const bool near_node = psi[i] == 0.0 || (i > 0 && psi[i] * psi[i - 1] <= 0.0) ||
                               (i + 1 < grid.count && psi[i] * psi[i + 1] <= 0.0);
        if (near_node)
            continue;
        lo = std::min(lo, ratio[i]);
        hi = std::max(hi, ratio[i]);
    }
    const double variation = (lo > 0.0 && std::isfinite(hi)) ? hi / lo - 1.0 : INFINITY;
    out.push_back(make_report("duality.pointwise", variation, kDualityPointwiseTol * opt.tol_scale,
                              "max/min of Psi(ln cosh alpha) / (W(alpha)/sqrt(coth alpha)) over alpha in [0.2, 5]",
                              params));
    return out;
}

// ---- contraction ----------------------------------------------------------

struct OscillatorContraction {
    double omega = 1.0;
    double k = 1.0;
    Branch branch = Branch::plus;
    unsigned n = 0;
    std::vector<double> radii;
};

struct CoulombContraction {
    double mu = 1.0;
    double p = 0.5;
    Branch branch = Branch::plus;
    unsigned n = 0;
    std::vector<double> radii;
};

namespace detail {

/// L2 distance of unit-normalized shapes and the fitted amplitude <u,v>/<v,v>.
struct ShapeComparison {
    double distance;
    double amplitude;
};

template <class U, class V>
ShapeComparison compare_shapes(U&& u, V&& v, double x_max) {
    constexpr double tol = 1e-13;
    const double uu = half_line_integral([&](double x) { return u(x) * u(x); }, x_max, tol);
    const double vv = half_line_integral([&](double x) { return v(x) * v(x); }, x_max, tol);
    const double uv = half_line_integral([&](double x) { return u(x) * v(x); }, x_max, tol);
    const double nu = std::sqrt(uu), nv = std::sqrt(vv);
    const double d2 = half_line_integral(
        [&](double x) {
            const double d = u(x) / nu - v(x) / nv;
            return d * d;
        },
        x_max, tol);
    return {std::sqrt(std::max(0.0, d2)), uv / vv};
}

template <class Radii>
void require_increasing(const Radii& radii) {
    if (radii.size() < 2)
        throw DomainError("check_contraction: need at least two radii");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]))
            throw DomainError("check_contraction: radii must be increasing");
}

} // namespace detail

inline ParameterMap describe(const OscillatorContraction& c) {
    std::string radii;
    for (double r : c.radii)
        radii += (radii.empty() ? "" : "|") + format_number(r);
    return {{"system", "oscillator"}, {"omega", format_number(c.omega)}, {"k", format_number(c.k)},
            {"branch", std::string(to_string(c.branch))}, {"n", std::to_string(c.n)}, {"radii", radii}};
}

inline ParameterMap describe(const CoulombContraction& c) {
    std::string radii;
    for (double r : c.radii)
        radii += (radii.empty() ? "" : "|") + format_number(r);
    return {{"system", "coulomb"}, {"mu", format_number(c.mu)}, {"p", format_number(c.p)},
            {"branch", std::string(to_string(c.branch))}, {"n", std::to_string(c.n)}, {"radii", radii}};
}

/**
 * @brief Flat-space limit of the oscillator.
 *
 * With a = 2n + 1 ± k, E(R) - omega a = (k0 - omega R^2) a / R^2 - (a^2 + 1/4) / (2R^2)
 * exactly, and k0 - omega R^2 = (1/4) / (k0 + omega R^2), so R^2 (E(R) - E_flat)
 * tends to -(a^2 + 1/4)/2.
 */
inline std::vector<VerificationReport> check_contraction(const OscillatorContraction& c, const CheckOptions& opt = {}) {
    detail::require_increasing(c.radii);
    const ParameterMap params = describe(c);
    const double e_flat = oscillator::flat_energy(c.omega, c.k, c.branch, c.n);
    const double a = 2.0 * c.n + 1.0 + sign_of(c.branch) * c.k;
    const double limit = -(a * a + 0.25) / 2.0;
    double worst_limit = 0.0, worst_identity = 0.0;
    for (double R : c.radii) {
        const oscillator::OscillatorModel model(c.omega, R, c.k, c.branch);
        if (oscillator::bound_state_count(model) <= c.n)
            throw DomainError("check_contraction: radius " + format_number(R) + " has too few bound states");
        const double scaled_gap = R * R * (oscillator::energy_n(model, c.n) - e_flat);
        const double wr2 = c.omega * R * R;
        const double decomposition = 0.25 / (model.k0() + wr2) * a + limit;
        worst_limit = std::max(worst_limit, std::fabs(scaled_gap - limit) / std::fabs(limit));
        worst_identity = std::max(worst_identity, std::fabs(scaled_gap - decomposition) / std::fabs(limit));
    }
    std::vector<VerificationReport> out;
    out.push_back(make_report("contraction.oscillator.energy", worst_limit, kContractionLimitTol * opt.tol_scale,
                              "R^2 (E_n(R) - omega(2n+1±k)) against its limit -(a^2+1/4)/2", params));
    out.push_back(make_report("contraction.oscillator.identity", worst_identity,
                              kContractionIdentityTol * opt.tol_scale,
                              "direct energy gap against the exact cancellation-free decomposition", params));

    const double R = c.radii.back();
    const oscillator::OscillatorModel model(c.omega, R, c.k, c.branch);
    const double x_max = std::sqrt((60.0 + 4.0 * c.n) / c.omega);
    const auto shape = detail::compare_shapes(
        [&](double x) { return oscillator::wavefunction(model, c.n, x / R); },
        [&](double x) { return oscillator::flat_wavefunction(c.omega, c.k, c.branch, c.n, x); }, x_max);
    out.push_back(make_report("contraction.oscillator.shape", shape.distance, kContractionShapeTol * opt.tol_scale,
                              "L2 distance of unit-normalized Psi(x/R) and the flat state at the largest R", params));
    out.push_back(make_report("contraction.oscillator.amplitude", shape.amplitude - 1.0,
                              kContractionAmplitudeTol * opt.tol_scale,
                              "least-squares constant between Psi(x/R) and the flat state, minus 1", params));
    return out;
}

/// Flat-space limit of the Coulomb problem: E(R) - E_flat = mu/R - (n+nu)^2/(2R^2).
inline std::vector<VerificationReport> check_contraction(const CoulombContraction& c, const CheckOptions& opt = {}) {
    detail::require_increasing(c.radii);
    const ParameterMap params = describe(c);
    std::vector<double> gaps;
    double nu = 0.0;
    double worst_decomposition = 0.0;
    for (double R : c.radii) {
        const coulomb::CoulombModel model(c.mu, R, c.p, c.branch);
        if (coulomb::bound_state_count(model) <= c.n)
            throw DomainError("check_contraction: radius " + format_number(R) + " has too few bound states");
        nu = model.nu();
        const double e = coulomb::energy_n(model, c.n);
        const double e_flat = coulomb::flat_energy(c.mu, nu, c.n);
        gaps.push_back(std::fabs(e - e_flat));
        const double s = c.n + nu;
        worst_decomposition =
            std::max(worst_decomposition, std::fabs(e - e_flat - c.mu / R + s * s / (2.0 * R * R)) / std::fabs(e_flat));
    }
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        const double expected = c.radii[i + 1] / c.radii[i];
        worst_ratio = std::max(worst_ratio, std::fabs(gaps[i] / gaps[i + 1] / expected - 1.0));
    }
    std::vector<VerificationReport> out;
    out.push_back(make_report("contraction.coulomb.energy", worst_ratio, kContractionRatioTol * opt.tol_scale,
                              "ratio of |E_n(R) - E_flat| between consecutive radii against the radius ratio", params));
    out.push_back(make_report("contraction.coulomb.decomposition", worst_decomposition,
                              kDecompositionTol * opt.tol_scale,
                              "E_n(R) - E_flat - mu/R + (n+nu)^2/(2R^2), relative to |E_flat|", params));

    const double R = c.radii.back();
    const coulomb::CoulombModel model(c.mu, R, c.p, c.branch);
    const double x_max = (80.0 + 4.0 * c.n) * (c.n + nu) / (2.0 * c.mu);
    const auto shape = detail::compare_shapes([&](double x) { return coulomb::wavefunction(model, c.n, x / R); },
                                              [&](double x) { return coulomb::flat_wavefunction(c.mu, nu, c.n, x); },
                                              x_max);
    out.push_back(make_report("contraction.coulomb.shape", shape.distance, kContractionShapeTol * opt.tol_scale,
                              "L2 distance of unit-normalized Psi(x/R) and the flat state at the largest R", params));
    out.push_back(make_report("contraction.coulomb.amplitude", shape.amplitude - 1.0,
                              kContractionAmplitudeTol * opt.tol_scale,
                              "least-squares constant between Psi(x/R) and the flat state, minus 1", params));
    return out;
}

} // namespace h1::verify
