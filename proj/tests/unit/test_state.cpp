#include <gtest/gtest.h>

#include <cmath>

#include "chaplygin/errors.hpp"
#include "chaplygin/state.hpp"
#include "generators.hpp"

using namespace chaplygin;

TEST(Pressure, Examples)
{
    EXPECT_DOUBLE_EQ(pressure(1.0), -1.0);
    EXPECT_DOUBLE_EQ(pressure(2.0), -0.5);
    EXPECT_THROW(pressure(0.0), DomainError);
    EXPECT_THROW(pressure(-1.0), DomainError);
    EXPECT_THROW(pressure(1e-301), DomainError);
    EXPECT_THROW(pressure(std::nan("")), DomainError);
    EXPECT_NO_THROW(pressure(1e-300));
}

TEST(InternalEnergy, Examples)
{
    EXPECT_DOUBLE_EQ(internal_energy(1.0), 0.5);
    EXPECT_DOUBLE_EQ(internal_energy(2.0), 0.125);
}

TEST(InternalEnergy, CentralDifferenceMatchesPressureLaw)
{
    const double rho = 3.0;
    const double h = 1e-5;
    const double de = (internal_energy(rho + h) - internal_energy(rho - h)) / (2.0 * h);
    EXPECT_LE(std::abs(pressure(rho) - rho * rho * de), 1e-6);
}

TEST(EnergyDensity, Examples)
{
    EXPECT_DOUBLE_EQ(energy_density(State2D(1.0, 0.0, 0.0)), 0.5);
    EXPECT_DOUBLE_EQ(energy_density(State2D(1.0, 0.0, 2.0)), 2.5);
    EXPECT_DOUBLE_EQ(energy_density(State2D(4.0, 0.0, 0.0)), 0.125);
}

TEST(EnergyFlux, Examples)
{
    EXPECT_DOUBLE_EQ(energy_flux_x2(State2D(1.0, 0.0, 0.0)), 0.0);
    EXPECT_DOUBLE_EQ(energy_flux_x2(State2D(1.0, 0.0, 2.0)), 3.0);
    EXPECT_DOUBLE_EQ(energy_flux_x2(State2D(1.0, 0.0, -2.0)), -3.0);
}

TEST(Eigenvalues, Examples)
{
    const auto a = eigenvalues(State2D(1.0, 0.0, 0.0));
    EXPECT_DOUBLE_EQ(a[0], -1.0);
    EXPECT_DOUBLE_EQ(a[1], 0.0);
    EXPECT_DOUBLE_EQ(a[2], 1.0);
    const auto b = eigenvalues(State2D(2.0, 0.0, 1.0));
    EXPECT_DOUBLE_EQ(b[0], 0.5);
    EXPECT_DOUBLE_EQ(b[1], 1.0);
    EXPECT_DOUBLE_EQ(b[2], 1.5);
}

TEST(OnWaveCurve, SamePointIsOnEveryCurve)
{
    const State2D anchor(1.0, 0.0, 0.0);
    EXPECT_EQ(on_wave_curve(anchor, 1.0, 0.0, WaveFamily::One), 0.0);
    EXPECT_EQ(on_wave_curve(anchor, 1.0, 0.0, WaveFamily::Three), 0.0);
}

TEST(OnWaveCurve, FamilyOneKeepsVMinusInverseDensity)
{
    const State2D anchor(1.0, 0.0, 0.0);
    // 0 - 1 = -0.5 - 0.5
    EXPECT_NEAR(on_wave_curve(anchor, 2.0, -0.5, WaveFamily::One), 0.0, 1e-15);
    EXPECT_NEAR(on_wave_curve(anchor, 2.0, 0.5, WaveFamily::One), 1.0, 1e-15);
}

TEST(OnWaveCurve, FamilyThreeKeepsVPlusInverseDensity)
{
    const State2D anchor(1.0, 0.0, 0.0);
    // 0 + 1 = 0.5 + 0.5
    EXPECT_NEAR(on_wave_curve(anchor, 2.0, 0.5, WaveFamily::Three), 0.0, 1e-15);
    EXPECT_NEAR(on_wave_curve(anchor, 2.0, -0.5, WaveFamily::Three), -1.0, 1e-15);
}

TEST(OnWaveCurve, RejectsContactFamily)
{
    EXPECT_THROW(on_wave_curve(State2D(1.0, 0.0, 0.0), 1.0, 0.0, WaveFamily::Two), DomainError);
}

TEST(ChaplyginP, VanishesOffDiagonal)
{
    EXPECT_NEAR(chaplygin_P(1.0, 2.0), 0.0, 1e-15);
    EXPECT_NEAR(chaplygin_P(0.5, 3.0), 0.0, 1e-14);
    EXPECT_THROW(chaplygin_P(2.0, 2.0), DomainError);
}

TEST(State2D, RejectsInvalidInput)
{
    EXPECT_THROW(State2D(0.0, 0.0, 0.0), DomainError);
    EXPECT_THROW(State2D(1.0, INFINITY, 0.0), DomainError);
    EXPECT_THROW(State2D(1.0, 0.0, std::nan("")), DomainError);
}

TEST(RiemannData, MirrorIsAnInvolution)
{
    const RiemannData d{State2D(2.0, 0.3, 1.7), State2D(1.0, -1.0, -0.4)};
    const RiemannData m = mirror(d);
    EXPECT_EQ(m.left, State2D(1.0, -1.0, 0.4));
    EXPECT_EQ(m.right, State2D(2.0, 0.3, -1.7));
    EXPECT_EQ(mirror(m), d);
}

TEST(StateProperties, PressureLawAndMonotonicity)
{
    testgen::Gen g(101);
    for (int i = 0; i < 10000; ++i) {
        const double rho = g.log_uniform(1e-3, 1e3);
        EXPECT_GT(pressure_derivative(rho), 0.0);
        const double p = pressure(rho);
        EXPECT_LE(std::abs(p - rho * rho * internal_energy_derivative(rho)), 1e-10 * std::abs(p));
    }
}

TEST(StateProperties, ChaplyginPIdenticallyZero)
{
    testgen::Gen g(102);
    for (int i = 0; i < 10000; ++i) {
        const double r = g.log_uniform(1e-3, 1e3);
        const double s = g.log_uniform(1e-3, 1e3);
        if (r == s) {
            continue;
        }
        const double bound = 1e-12 * std::max({1.0, 1.0 / (r * r), 1.0 / (s * s)});
        EXPECT_LE(std::abs(chaplygin_P(r, s)), bound) << "r=" << r << " s=" << s;
    }
}

TEST(StateProperties, EigenvaluesStrictlyOrdered)
{
    testgen::Gen g(103);
    for (int i = 0; i < 10000; ++i) {
        const auto l = eigenvalues(State2D(g.log_uniform(1e-3, 1e3), g.uniform(-5, 5), g.uniform(-5, 5)));
        EXPECT_LT(l[0], l[1]);
        EXPECT_LT(l[1], l[2]);
    }
}
