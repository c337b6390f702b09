#include "h1/oscillator.hpp"
#include "h1/special.hpp"
#include "h1/verify/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace h1;
using namespace h1::oscillator;

namespace {

const double kSqrt30 = std::sqrt(30.0);

OscillatorModel demo() { return OscillatorModel(kSqrt30, 1.0, 1.0, Branch::plus); }

double norm_integral(const OscillatorModel& m, unsigned n, unsigned np) {
    // tau = s^2 keeps the tau^{1/2 ± k} endpoint behaviour smooth.
    auto f = [&](double s) { return 2.0 * s * wavefunction(m, n, s * s) * wavefunction(m, np, s * s); };
    return m.radius() * verify::integrate(f, 0.0, std::sqrt(40.0), 1e-12);
}

} // namespace

TEST(OscillatorModel, K0) {
    EXPECT_DOUBLE_EQ(OscillatorModel(std::sqrt(2.0), 1.0, 1.0, Branch::plus).k0(), 1.5);
    EXPECT_DOUBLE_EQ(demo().k0(), 5.5);
    EXPECT_NEAR(OscillatorModel(1e-9, 1.0, 1.0, Branch::plus).k0(), 0.5, 1e-15);
    EXPECT_DOUBLE_EQ(k0_of(OscillatorModel(1.0, 2.0, 0.3, Branch::minus)), std::hypot(4.0, 0.5));
}

TEST(OscillatorModel, Rejects) {
    EXPECT_THROW(OscillatorModel(0.0, 1.0, 1.0, Branch::plus), ModelError);
    EXPECT_THROW(OscillatorModel(1.0, -1.0, 1.0, Branch::plus), ModelError);
    EXPECT_THROW(OscillatorModel(1.0, 1.0, 0.0, Branch::plus), ModelError);
    EXPECT_THROW(OscillatorModel(1.0, 1.0, 0.75, Branch::minus), ModelError);
    EXPECT_THROW(OscillatorModel(INFINITY, 1.0, 1.0, Branch::plus), ModelError);
    EXPECT_NO_THROW(OscillatorModel(1.0, 1.0, 0.5, Branch::minus));
}

TEST(OscillatorPotential, Values) {
    const OscillatorModel m = demo();
    const double c1 = std::cosh(1.0), s1 = std::sinh(1.0);
    EXPECT_NEAR(potential(m, 1.0), 0.5 * (-30.0 / (c1 * c1) + 0.75 / (s1 * s1)) + 15.0, 1e-13);
    EXPECT_NEAR(potential(m, 25.0), 15.0, 1e-15 * 15.0 + 1e-18);
    EXPECT_DOUBLE_EQ(potential(m, -0.8), potential(m, 0.8));
    EXPECT_THROW(potential(m, 0.0), DomainError);

    const OscillatorModel half(2.0, 1.0, 0.5, Branch::plus);
    EXPECT_NO_THROW(potential(half, 0.0));
    const double c = std::cosh(0.4);
    EXPECT_NEAR(potential(half, 0.4), 0.5 * (-4.0 / (c * c)) + 2.0, 1e-13);
}

TEST(OscillatorPotential, ReducedForm) {
    const OscillatorModel m = demo();
    for (double t : {0.2, 1.0, 3.5})
        EXPECT_NEAR(reduced_potential(m, t), 2.0 * potential(m, t) - 30.0, 1e-12);
}

TEST(OscillatorSpectrum, DemoValues) {
    const OscillatorModel m = demo();
    EXPECT_EQ(bound_state_count(m), 2u);
    EXPECT_DOUBLE_EQ(epsilon_n(m, 0), -12.25);
    EXPECT_DOUBLE_EQ(epsilon_n(m, 1), -2.25);
    EXPECT_DOUBLE_EQ(energy_n(m, 0), 8.875);
    EXPECT_DOUBLE_EQ(energy_n(m, 1), 13.875);
    EXPECT_THROW(epsilon_n(m, 2), IndexError);
    EXPECT_THROW(energy_n(m, 2), IndexError);
    EXPECT_THROW(norm_constant(m, 7), IndexError);

    const auto sp = spectrum(m);
    ASSERT_EQ(sp.size(), 2u);
    EXPECT_EQ(sp[1].n, 1u);
    EXPECT_DOUBLE_EQ(sp[1].energy, 13.875);
    EXPECT_EQ(sp[0].parity, Parity::half_line);
}

TEST(OscillatorSpectrum, CountBoundaries) {
    // k0 - k <= 1: no states.
    EXPECT_EQ(bound_state_count(OscillatorModel(std::sqrt(2.0), 1.0, 0.5, Branch::plus)), 0u);
    EXPECT_EQ(bound_state_count(OscillatorModel(1.0, 1.0, 1.0, Branch::plus)), 0u);
    // Just above the threshold: exactly one.
    for (double eps : {1e-9, 1e-4, 0.3}) {
        const double k0 = 1.5 + 2.0 * eps;
        const double omega = std::sqrt(k0 * k0 - 0.25);
        EXPECT_EQ(bound_state_count(OscillatorModel(omega, 1.0, 0.5, Branch::plus)), 1u) << eps;
    }
    // k0 - k - 1 an even integer: the top level would have eps = 0, not bound.
    const OscillatorModel edge(std::sqrt(35.75), 1.0, 1.0, Branch::plus); // k0 = 6
    EXPECT_DOUBLE_EQ(edge.k0(), 6.0);
    EXPECT_EQ(bound_state_count(edge), 2u);
    EXPECT_LT(epsilon_n(edge, 1), 0.0);
}

TEST(OscillatorSpectrum, CountMatchesEnumeration) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> om(0.05, 20.0), rad(0.2, 3.0), kk(0.01, 3.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double k = kk(rng);
        const Branch b = (k <= 0.5 && trial % 2) ? Branch::minus : Branch::plus;
        const OscillatorModel m(om(rng), rad(rng), k, b);
        unsigned count = 0;
        while (2.0 * count + 1.0 + m.signed_k() < m.k0())
            ++count;
        EXPECT_EQ(bound_state_count(m), count);
    }
}

TEST(OscillatorSpectrum, IdentityAndMonotonicity) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> om(0.5, 15.0), rad(0.3, 2.5), kk(0.05, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double k = kk(rng);
        const OscillatorModel m(om(rng), rad(rng), k, k <= 0.5 && trial % 3 == 0 ? Branch::minus : Branch::plus);
        const double R = m.radius(), w = m.omega();
        const unsigned count = bound_state_count(m);
        for (unsigned n = 0; n < count; ++n) {
            const double lhs = 2.0 * R * R * energy_n(m, n) - w * w * std::pow(R, 4);
            EXPECT_NEAR(lhs, epsilon_n(m, n), 1e-12 * std::max(1.0, w * w * std::pow(R, 4)));
            EXPECT_LT(epsilon_n(m, n), 0.0);
            if (n > 0) {
                EXPECT_GT(epsilon_n(m, n), epsilon_n(m, n - 1));
                EXPECT_GT(energy_n(m, n), energy_n(m, n - 1));
            }
        }
    }
}

TEST(OscillatorNorm, RadiusScaling) {
    // Same k0 (fixed omega R^2) with R doubled.
    const OscillatorModel a(kSqrt30, 1.0, 1.0, Branch::plus);
    const OscillatorModel b(kSqrt30 / 4.0, 2.0, 1.0, Branch::plus);
    ASSERT_DOUBLE_EQ(a.k0(), b.k0());
    for (unsigned n = 0; n < 2; ++n)
        EXPECT_NEAR(norm_constant(b, n) / norm_constant(a, n), 1.0 / std::sqrt(2.0), 1e-14);
}

TEST(OscillatorNorm, QuadratureOfUnnormalizedDensity) {
    const OscillatorModel m = demo();
    auto raw = [](double t) { return std::pow(std::sinh(t), 1.5) * std::pow(std::cosh(t), -5.0); };
    const double I = verify::integrate([&](double s) { return 2.0 * s * std::pow(raw(s * s), 2); }, 0.0,
                                       std::sqrt(40.0), 1e-14);
    EXPECT_NEAR(norm_constant(m, 0), std::sqrt(0.5 / I), 1e-10);
}

TEST(OscillatorWavefunction, Orthonormality) {
    const OscillatorModel models[] = {demo(), OscillatorModel(9.0, 1.2, 0.3, Branch::minus),
                                      OscillatorModel(4.0, 1.5, 2.2, Branch::plus)};
    for (const auto& m : models) {
        const unsigned count = std::min(bound_state_count(m), 5u);
        ASSERT_GT(count, 1u);
        for (unsigned n = 0; n < count; ++n)
            for (unsigned np = n; np < count; ++np)
                EXPECT_NEAR(norm_integral(m, n, np), n == np ? 0.5 : 0.0, 1e-8) << n << "," << np;
    }
}

TEST(OscillatorWavefunction, PointValues) {
    const OscillatorModel m = demo();
    EXPECT_EQ(wavefunction(m, 0, 0.0), 0.0);
    const double t = 0.7;
    const double n0 = norm_constant(m, 0);
    EXPECT_NEAR(wavefunction(m, 0, t), n0 * std::pow(std::sinh(t), 1.5) * std::pow(std::cosh(t), -5.0), 1e-14);

    // n = 1: 2F1(-1, 4.5; 2; x) = 1 - 9x/4 exactly.
    namespace ex = special::exact;
    const double th2 = std::tanh(t) * std::tanh(t);
    const double poly = ex::hyp2f1_terminating(1, ex::Rational(9, 2), ex::Rational(2), ex::Rational(1)).to_double();
    EXPECT_DOUBLE_EQ(poly, 1.0 - 9.0 / 4.0);
    const double want = norm_constant(m, 1) * std::pow(std::sinh(t), 1.5) * std::pow(std::cosh(t), -3.0) *
                        (1.0 - 2.25 * th2);
    EXPECT_NEAR(wavefunction(m, 1, t), want, 1e-13 * std::fabs(want));
    EXPECT_THROW(wavefunction(m, 0, -0.1), DomainError);
    EXPECT_THROW(wavefunction(m, 0, 0.5, Parity::even), DomainError);
}

TEST(OscillatorWavefunction, GridEvaluation) {
    const OscillatorModel m = demo();
    const auto g = eval_wavefunction(m, 1, UniformGrid::spanning(0.0, 3.0, 31, CoordinateLabel::tau));
    ASSERT_EQ(g.size(), 31u);
    EXPECT_EQ(g.coordinate_label, CoordinateLabel::tau);
    EXPECT_DOUBLE_EQ(g.values[10], wavefunction(m, 1, g.coordinate(10)));
    EXPECT_THROW(eval_wavefunction(m, 2, UniformGrid::spanning(0.0, 1.0, 5, CoordinateLabel::tau)), IndexError);
    EXPECT_THROW(eval_wavefunction(m, 0, UniformGrid::spanning(-1.0, 1.0, 5, CoordinateLabel::tau)), DomainError);
}

TEST(OscillatorWavefunction, FullLineParity) {
    const OscillatorModel m(6.0, 1.0, 0.25, Branch::plus);
    for (double t : {0.1, 0.9, 2.4}) {
        EXPECT_DOUBLE_EQ(wavefunction(m, 1, -t, Parity::even), wavefunction(m, 1, t, Parity::even));
        EXPECT_DOUBLE_EQ(wavefunction(m, 1, -t, Parity::odd), -wavefunction(m, 1, t, Parity::odd));
    }
}

TEST(OscillatorWavefunction, LargeK0StaysFinite) {
    const OscillatorModel m(1.0, 1e3, 1.0, Branch::plus); // k0 ~ 1e6
    const double t = 1e-3;
    const double v = wavefunction(m, 0, t);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 0.0);
    EXPECT_EQ(wavefunction(m, 0, 5.0), 0.0); // underflows cleanly
}

TEST(OscillatorFlat, Energy) {
    EXPECT_DOUBLE_EQ(flat_energy(1.0, 0.5, Branch::plus, 0), 1.5);
    EXPECT_DOUBLE_EQ(flat_energy(2.5, 0.3, Branch::minus, 4) - flat_energy(2.5, 0.3, Branch::minus, 3), 5.0);
    EXPECT_THROW(flat_energy(1.0, 0.8, Branch::minus, 0), ModelError);
}

TEST(OscillatorFlat, Wavefunction) {
    EXPECT_EQ(flat_wavefunction(1.0, 1.0, Branch::plus, 0, 0.0), 0.0);
    EXPECT_THROW(flat_wavefunction(1.0, 1.0, Branch::plus, 0, -1.0), DomainError);
    for (unsigned n = 0; n < 3; ++n) {
        auto f = [&](double s) { return 2.0 * s * std::pow(flat_wavefunction(1.3, 0.7, Branch::plus, n, s * s), 2); };
        EXPECT_NEAR(verify::integrate(f, 0.0, 4.0, 1e-13), 0.5, 1e-10) << n;
    }
    const double x = 0.8;
    const double g0 = std::sqrt(std::sqrt(2.0) * 1.0 / std::pow(std::tgamma(2.0), 1)) *
                      std::pow(std::sqrt(2.0) * x, 1.5) * std::exp(-x * x);
    EXPECT_NEAR(flat_wavefunction(2.0, 1.0, Branch::plus, 0, x), g0, 1e-14);
}

TEST(OscillatorContraction, EnergyApproachesFlat) {
    // R^2 (E(R) - E_flat) stays bounded and converges.
    double prev = 0.0;
    for (double R : {1e2, 1e3, 1e4}) {
        const OscillatorModel m(1.0, R, 1.0, Branch::plus);
        const double scaled = R * R * (energy_n(m, 0) - flat_energy(1.0, 1.0, Branch::plus, 0));
        EXPECT_LT(std::fabs(scaled), 5.0);
        prev = scaled;
    }
    EXPECT_NEAR(prev, -(4.0 + 0.25) / 2.0, 1e-3);
}

TEST(OscillatorContraction, PointwiseLimit) {
    const double R = 1e3;
    const OscillatorModel m(1.0, R, 1.0, Branch::plus);
    for (double x : {0.3, 1.0, 2.0}) {
        const double flat = flat_wavefunction(1.0, 1.0, Branch::plus, 0, x);
        EXPECT_NEAR(wavefunction(m, 0, x / R) / flat, 1.0, 1e-4) << x;
    }
}
