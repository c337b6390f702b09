#include "h1/coulomb.hpp"
#include "h1/oscillator.hpp"
#include "h1/verify/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace h1;
using namespace h1::coulomb;

namespace {

CoulombModel demo() { return CoulombModel(6.0, 1.0, 0.5, Branch::plus); }

double overlap(const CoulombModel& m, unsigned n, unsigned np) {
    auto f = [&](double s) { return 2.0 * s * wavefunction(m, n, s * s) * wavefunction(m, np, s * s); };
    return m.radius() * verify::integrate(f, 0.0, std::sqrt(60.0), 1e-12);
}

} // namespace

TEST(CoulombModel, DerivedQuantities) {
    const CoulombModel m = demo();
    EXPECT_DOUBLE_EQ(m.k(), 1.0);
    EXPECT_DOUBLE_EQ(m.nu(), 1.0);
    EXPECT_DOUBLE_EQ(m.coupling(), 6.0);
    EXPECT_DOUBLE_EQ(CoulombModel(6.0, 1.0, 0.25, Branch::plus).nu(), 0.75);
    EXPECT_DOUBLE_EQ(CoulombModel(6.0, 1.0, 0.25, Branch::minus).nu(), 0.25);
    EXPECT_TRUE(m.full_line());
    EXPECT_FALSE(CoulombModel(6.0, 1.0, 0.75, Branch::plus).full_line());
}

TEST(CoulombModel, Rejects) {
    EXPECT_THROW(CoulombModel(0.0, 1.0, 0.5, Branch::plus), ModelError);
    EXPECT_THROW(CoulombModel(1.0, 0.0, 0.5, Branch::plus), ModelError);
    EXPECT_THROW(CoulombModel(1.0, 1.0, -0.5, Branch::plus), ModelError);
    EXPECT_THROW(CoulombModel(1.0, 1.0, 0.3, Branch::minus), ModelError);
    EXPECT_THROW(CoulombModel(NAN, 1.0, 0.5, Branch::plus), ModelError);
}

TEST(CoulombPotential, Values) {
    const CoulombModel m = demo();
    EXPECT_NEAR(potential(m, 1.0), -6.0 * (1.0 / std::tanh(1.0) - 1.0), 1e-14);
    EXPECT_NEAR(potential(m, 1.0), -1.8782117129959879, 1e-13);
    EXPECT_LT(std::fabs(potential(m, 25.0)), 1e-15 * 6.0);
    EXPECT_DOUBLE_EQ(potential(m, -0.6), potential(m, 0.6));
    EXPECT_THROW(potential(m, 0.0), DomainError);

    const CoulombModel q(6.0, 2.0, 0.25, Branch::plus);
    const double s = std::sinh(0.9);
    EXPECT_NEAR(potential(q, 0.9), -3.0 * (1.0 / std::tanh(0.9) - 1.0) - 0.1875 / (8.0 * s * s), 1e-13);
}

TEST(CoulombPotential, ReducedForm) {
    const CoulombModel m(6.0, 1.5, 0.25, Branch::minus);
    const double R = m.radius();
    for (double t : {0.3, 1.0, 4.0})
        EXPECT_NEAR(reduced_potential(m, t), 2.0 * R * R * potential(m, t) - 2.0 * m.coupling(), 1e-11);
    EXPECT_DOUBLE_EQ(reduced_eigenvalue(demo(), -12.5), -37.0);
}

TEST(CoulombDuality, Coordinates) {
    EXPECT_EQ(duality_tau_of_alpha(0.0), 0.0);
    EXPECT_NEAR(duality_tau_of_alpha(1.0), 0.4337808305, 1e-10);
    EXPECT_NEAR(duality_tau_of_alpha(40.0), 40.0 - std::log(2.0), 1e-14);
    for (double a : {0.0, 0.01, 0.7, 3.0, 30.0})
        EXPECT_NEAR(duality_alpha_of_tau(duality_tau_of_alpha(a)), a, 1e-9 * std::max(1.0, a));
    EXPECT_THROW(duality_alpha_of_tau(-1.0), DomainError);
}

TEST(CoulombDuality, MapToOscillator) {
    const CoulombModel m = demo();
    const OscillatorImage img = map_to_oscillator(m, -12.5);
    EXPECT_DOUBLE_EQ(img.epsilon, -25.0);
    EXPECT_DOUBLE_EQ(img.k0, 7.0);
    EXPECT_DOUBLE_EQ(img.k, 1.0);
    EXPECT_DOUBLE_EQ(dual_k0(m, 0), 1.0 + sigma(m, 0));
    EXPECT_DOUBLE_EQ(map_to_oscillator(m, 6.0).k0 * map_to_oscillator(m, 6.0).k0, 12.0);
    EXPECT_THROW(map_to_oscillator(m, 100.0), DomainError);
}

TEST(CoulombDuality, SpectrumIdentityRandom) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> mu(0.5, 40.0), rad(0.2, 3.0), pp(0.05, 1.5);
    for (int trial = 0; trial < 200; ++trial) {
        const double p = pp(rng);
        const CoulombModel m(mu(rng), rad(rng), p, p <= 0.25 && trial % 2 ? Branch::minus : Branch::plus);
        for (unsigned n = 0; n < bound_state_count(m); ++n) {
            const OscillatorImage img = map_to_oscillator(m, energy_n(m, n));
            const double lhs = std::sqrt(-img.epsilon);
            const double rhs = img.k0 - (2.0 * n + 1.0 + m.signed_k());
            EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, img.k0));
            const double s = sigma(m, n);
            EXPECT_NEAR(img.epsilon, -(s - (n + m.nu())) * (s - (n + m.nu())),
                        1e-12 * std::max(1.0, std::fabs(img.epsilon)));
        }
    }
}

TEST(CoulombSpectrum, Counts) {
    EXPECT_EQ(bound_state_count(demo()), 2u);
    EXPECT_EQ(bound_state_count(CoulombModel(6.0, 1.0, 0.25, Branch::minus)), 3u);
    EXPECT_EQ(bound_state_count(CoulombModel(6.0, 1.0, 0.25, Branch::plus)), 2u);
    EXPECT_EQ(bound_state_count(CoulombModel(1.0, 1.0, 0.5, Branch::plus)), 0u);
    EXPECT_EQ(bound_state_count(CoulombModel(0.5, 1.0, 0.5, Branch::plus)), 0u);
    // mu R = (n + nu)^2 exactly is not bound.
    EXPECT_EQ(bound_state_count(CoulombModel(4.0, 1.0, 0.5, Branch::plus)), 1u);
}

TEST(CoulombSpectrum, CountMatchesEnumeration) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> mu(0.01, 80.0), rad(0.05, 4.0), pp(0.01, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double p = pp(rng);
        const CoulombModel m(mu(rng), rad(rng), p, p <= 0.25 && trial % 2 ? Branch::minus : Branch::plus);
        unsigned count = 0;
        while (m.coupling() > (count + m.nu()) * (count + m.nu()))
            ++count;
        EXPECT_EQ(bound_state_count(m), count);
    }
}

TEST(CoulombSpectrum, DemoEnergies) {
    const CoulombModel m = demo();
    EXPECT_DOUBLE_EQ(energy_n(m, 0), -12.5);
    EXPECT_DOUBLE_EQ(energy_n(m, 1), -0.5);
    EXPECT_DOUBLE_EQ(sigma(m, 0), 6.0);
    EXPECT_DOUBLE_EQ(sigma(m, 1), 3.0);
    EXPECT_THROW(energy_n(m, 2), IndexError);
    EXPECT_THROW(sigma(m, 2), IndexError);

    const auto sp = spectrum(m);
    ASSERT_EQ(sp.size(), 2u);
    EXPECT_DOUBLE_EQ(sp[0].nu, 1.0);
    EXPECT_DOUBLE_EQ(sp[1].sigma, 3.0);
    EXPECT_DOUBLE_EQ(sp[0].norm_constant, norm_constant_tau(m, 0));
}

TEST(CoulombSpectrum, CompletedSquareForm) {
    const CoulombModel m(6.0, 1.3, 0.25, Branch::minus);
    for (unsigned n = 0; n < bound_state_count(m); ++n) {
        const double d = sigma(m, n) - (n + m.nu());
        EXPECT_NEAR(energy_n(m, n), -d * d / (2.0 * 1.3 * 1.3), 1e-12 * std::fabs(energy_n(m, n)));
        if (n > 0) {
            EXPECT_GT(energy_n(m, n), energy_n(m, n - 1));
        }
    }
}

TEST(CoulombNorm, Nu1Reduction) {
    const CoulombModel m = demo();
    EXPECT_NEAR(norm_constant_tau(m, 0), std::sqrt(420.0), 1e-12);
    EXPECT_NEAR(norm_constant_tau(m, 0), 20.4939, 1e-4);
    // sqrt(2 sigma (sigma^2 - (n+1)^2) / R) at n = 1, sigma = 3
    EXPECT_NEAR(norm_constant_tau(m, 1), std::sqrt(2.0 * 3.0 * 5.0), 1e-12);
    const CoulombModel r2(3.0, 2.0, 0.5, Branch::plus);
    EXPECT_NEAR(norm_constant_tau(r2, 0), std::sqrt(2.0 * 6.0 * 35.0 / 2.0), 1e-12);
}

TEST(CoulombNorm, TauAndAlphaConstantsRelated) {
    for (const CoulombModel& m : {demo(), CoulombModel(6.0, 1.0, 0.25, Branch::plus),
                                  CoulombModel(6.0, 1.0, 0.25, Branch::minus), CoulombModel(20.0, 0.7, 1.1, Branch::plus)})
        for (unsigned n = 0; n < bound_state_count(m); ++n)
            EXPECT_NEAR(norm_constant_tau(m, n) / norm_constant_general(m, n), std::pow(2.0, m.nu()), 1e-12);
}

TEST(CoulombWavefunction, Orthonormality) {
    for (const CoulombModel& m : {demo(), CoulombModel(6.0, 1.0, 0.25, Branch::plus),
                                  CoulombModel(6.0, 1.0, 0.25, Branch::minus), CoulombModel(30.0, 1.0, 1.0, Branch::plus)})
        for (unsigned n = 0; n < std::min(bound_state_count(m), 4u); ++n)
            for (unsigned np = n; np < std::min(bound_state_count(m), 4u); ++np)
                EXPECT_NEAR(overlap(m, n, np), n == np ? 0.5 : 0.0, 1e-8) << "nu=" << m.nu() << " " << n << np;
}

TEST(CoulombWavefunction, GroundStateShape) {
    const CoulombModel m = demo();
    for (double t : {0.1, 0.5, 2.0})
        EXPECT_NEAR(wavefunction(m, 0, t), std::sqrt(420.0) * std::sinh(t) * std::exp(-6.0 * t), 1e-13);
    EXPECT_EQ(wavefunction(m, 0, 0.0), 0.0);
    EXPECT_THROW(wavefunction(m, 0, -0.5), DomainError);
}

TEST(CoulombWavefunction, DualityPointwise) {
    const CoulombModel m = demo();
    const double alpha = duality_alpha_of_tau(0.5);
    const double w = w_solution(m, 1, alpha) / std::sqrt(1.0 / std::tanh(alpha));
    EXPECT_NEAR(wavefunction(m, 1, 0.5) / w, 1.0, 1e-12);
    for (const CoulombModel& q : {CoulombModel(6.0, 1.0, 0.25, Branch::minus), CoulombModel(6.0, 1.0, 0.25, Branch::plus)})
        for (double a : {0.2, 1.0, 3.0}) {
            const double ratio = wavefunction(q, 0, duality_tau_of_alpha(a)) / (w_solution(q, 0, a) * std::sqrt(std::tanh(a)));
            EXPECT_NEAR(ratio, 1.0, 1e-12);
        }
    EXPECT_EQ(w_solution(m, 0, 0.0), 0.0);
    EXPECT_THROW(w_solution(m, 0, -1.0), DomainError);
}

TEST(CoulombWavefunction, ParityAndDegeneracy) {
    const CoulombModel m = demo();
    const auto grid = UniformGrid::spanning(-3.0, 3.0, 61, CoordinateLabel::tau);
    const GridFunction odd = wavefunction_tau(m, 1, grid, Parity::odd);
    const GridFunction even = wavefunction_tau(m, 1, grid, Parity::even);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const std::size_t j = grid.count - 1 - i;
        // Mirrored grid coordinates agree only to a few ulps.
        EXPECT_NEAR(odd.values[i], -odd.values[j], 1e-13);
        EXPECT_NEAR(even.values[i], even.values[j], 1e-13);
        EXPECT_EQ(wavefunction(m, 1, -grid[j], Parity::odd), -wavefunction(m, 1, grid[j], Parity::odd));
    }
    // Even and odd partners share one energy formula.
    EXPECT_EQ(bound_state(m, 1).energy, energy_n(m, 1));
    EXPECT_THROW(wavefunction_tau(m, 1, grid), DomainError);
    EXPECT_THROW(wavefunction_tau(CoulombModel(6.0, 1.0, 0.75, Branch::plus), 0, grid, Parity::even), DomainError);
    EXPECT_THROW(wavefunction_tau(m, 2, UniformGrid::spanning(0.0, 1.0, 5, CoordinateLabel::tau)), IndexError);
}

TEST(CoulombFlat, Energy) {
    EXPECT_DOUBLE_EQ(flat_energy(1.0, 1.0, 0), -0.5);
    EXPECT_NE(flat_energy(1.0, 0.25, 2), flat_energy(1.0, 0.75, 2));
    EXPECT_THROW(flat_energy(-1.0, 1.0, 0), ModelError);
    // Denominator is n + nu; for nu = 1 that is n + 1.
    EXPECT_DOUBLE_EQ(flat_energy(2.0, 1.0, 1), -0.5);
}

TEST(CoulombFlat, Decomposition) {
    for (const CoulombModel& m : {CoulombModel(1.0, 1e4, 0.5, Branch::plus), CoulombModel(1.0, 1e2, 0.25, Branch::minus)})
        for (unsigned n = 0; n < 3; ++n) {
            const double s = n + m.nu(), R = m.radius();
            const double gap = energy_n(m, n) - flat_energy(1.0, m.nu(), n) - 1.0 / R + s * s / (2.0 * R * R);
            EXPECT_NEAR(gap, 0.0, 1e-15);
        }
}

TEST(CoulombFlat, WavefunctionNormAndLimit) {
    EXPECT_EQ(flat_wavefunction(1.0, 1.0, 0, 0.0), 0.0);
    EXPECT_THROW(flat_wavefunction(1.0, 1.0, 0, -1.0), DomainError);
    EXPECT_DOUBLE_EQ(flat_wavefunction(1.0, 1.0, 1, -2.0, Parity::odd), -flat_wavefunction(1.0, 1.0, 1, 2.0));
    for (double nu : {0.25, 0.75, 1.0})
        for (unsigned n = 0; n < 3; ++n) {
            auto f = [&](double s) { return 2.0 * s * std::pow(flat_wavefunction(1.5, nu, n, s * s), 2); };
            EXPECT_NEAR(verify::integrate(f, 0.0, 12.0, 1e-13), 0.5, 1e-10) << nu << " " << n;
        }
    // Psi(x/R) -> flat state with unit constant.
    const CoulombModel m(1.0, 1e4, 0.5, Branch::plus);
    for (double x : {0.5, 1.0, 3.0})
        EXPECT_NEAR(wavefunction(m, 0, x / m.radius()) / flat_wavefunction(1.0, 1.0, 0, x), 1.0, 2e-3) << x;
}
