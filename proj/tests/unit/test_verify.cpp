#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "chaplygin/delta_shock.hpp"
#include "chaplygin/errors.hpp"
#include "chaplygin/riemann1d.hpp"
#include "chaplygin/subsolution.hpp"
#include "chaplygin/verify.hpp"
#include "generators.hpp"

using namespace chaplygin;

namespace {

const RiemannData kSymmetric{State2D(1.0, 0.0, 2.0), State2D(1.0, 0.0, -2.0)};
const RiemannData kUnequal{State2D(2.0, 0.0, 1.0), State2D(1.0, 0.0, -1.0)};
const RiemannData kWindow{State2D(1.0, 0.0, 0.75), State2D(1.0, 0.0, -0.75)};

PiecewiseFanField classical_field(const RiemannData& d) { return field_from_classical(solve_classical(d), d); }

} // namespace

// ------------------------------------------------------------------ sectors

TEST(Sector, ClassicalFluxesAreEulerFluxes)
{
    const State2D s(2.0, 0.7, -1.3);
    const Sector k = Sector::classical(s);
    EXPECT_DOUBLE_EQ(k.momentum1_flux(), 2.0 * 0.7 * -1.3);
    EXPECT_NEAR(k.momentum2_flux(), 2.0 * 1.69 - 0.5, 1e-14);
    EXPECT_NEAR(k.energy(), energy_density(s), 1e-14);
    EXPECT_NEAR(k.energy_flux(), energy_flux_x2(s), 1e-14);
}

TEST(Sector, BoostOfClassicalStaysClassical)
{
    const State2D s(0.4, 1.5, -0.2);
    const Velocity c{-0.3, 2.1};
    const Sector a = Sector::classical(s).boosted(c);
    const Sector b = Sector::classical(s.boosted(c));
    EXPECT_NEAR(a.C, b.C, 1e-14);
    EXPECT_NEAR(a.U.gamma, b.U.gamma, 1e-14);
    EXPECT_NEAR(a.U.delta, b.U.delta, 1e-14);
}

TEST(PiecewiseFanField, ValidateLayout)
{
    PiecewiseFanField f;
    f.speeds = {0.0, -1.0};
    f.sectors = {Sector{}, Sector{}, Sector{}};
    EXPECT_THROW(f.validate(), InputError);
    f.speeds = {0.0};
    EXPECT_THROW(f.validate(), InputError);
}

TEST(InterfaceDissipation, Examples)
{
    for (const ContactWave& w : solve_classical(kWindow).waves) {
        EXPECT_LE(std::abs(interface_dissipation(Sector::classical(w.left), Sector::classical(w.right), w.speed)),
                  1e-10);
    }
    const FanSubsolution half = construct(kSymmetric, {3.0, Epsilon2Policy::half_bound()});
    const auto d = interface_dissipations(field_from_subsolution(half));
    EXPECT_NEAR(d[0], 4.0 / 3.0, 1e-12);
    EXPECT_EQ(d[1], 0.0);
    EXPECT_NEAR(d[2], 4.0 / 3.0, 1e-12);
    const FanSubsolution eq = construct(kSymmetric, {3.0, Epsilon2Policy::equality_branch()});
    for (double x : interface_dissipations(field_from_subsolution(eq))) {
        EXPECT_NEAR(x, 0.0, 1e-12);
    }
    EXPECT_NEAR(field_from_subsolution(half).sectors[1].energy(), 25.0 / 6.0, 1e-12);
}

// ------------------------------------------------------------------- oracle

TEST(Oracle, SymmetricExample)
{
    const OracleResult r = oracle_interface_system(kSymmetric, 3.0, 7);
    ASSERT_TRUE(r.converged) << r.message;
    EXPECT_NEAR(r.nu_minus, -1.0, 1e-10);
    EXPECT_NEAR(r.nu_plus, 1.0, 1e-10);
    EXPECT_NEAR(r.beta, 0.0, 1e-10);
    EXPECT_NEAR(r.epsilon1, 16.0 / 9.0, 1e-10);
}

TEST(Oracle, UnequalExampleMatchesClosedForms)
{
    const OracleResult r = oracle_interface_system(kUnequal, 5.0, 11);
    ASSERT_TRUE(r.converged) << r.message;
    const InterfaceSpeeds nu = interface_speeds(kUnequal, 5.0);
    EXPECT_NEAR(r.nu_minus, nu.nu_minus, 1e-8);
    EXPECT_NEAR(r.nu_plus, nu.nu_plus, 1e-8);
    EXPECT_NEAR(r.beta, beta(kUnequal, 5.0), 1e-8);
    EXPECT_NEAR(r.epsilon1, epsilon1(kUnequal, 5.0), 1e-8);
}

TEST(Oracle, DegenerateMiddleDensityIsReported)
{
    // rho1 = max(rho): the left continuity equation loses nu-.
    const OracleResult r = oracle_interface_system(kUnequal, 2.0, 3);
    if (r.converged) {
        EXPECT_TRUE(std::isfinite(r.epsilon1));
    } else {
        EXPECT_FALSE(r.message.empty());
    }
}

TEST(Oracle, MatchesClosedFormsOnRandomData)
{
    testgen::Gen g(501);
    for (int i = 0; i < 200; ++i) {
        const RiemannData d = i % 2 ? testgen::random_delta(g) : testgen::random_window(g);
        const double rho1 = testgen::random_rho1(g, d);
        const OracleResult r = oracle_interface_system(d, rho1, g.bits());
        ASSERT_TRUE(r.converged) << r.message;
        const InterfaceSpeeds nu = interface_speeds(d, rho1);
        EXPECT_NEAR(r.nu_minus, nu.nu_minus, 1e-8);
        EXPECT_NEAR(r.nu_plus, nu.nu_plus, 1e-8);
        EXPECT_NEAR(r.beta, beta(d, rho1), 1e-8);
        EXPECT_NEAR(r.epsilon1, epsilon1(d, rho1), 1e-8);
    }
}

// --------------------------------------------------------------- quadrature

TEST(WeakResidual, ConstantFieldVanishes)
{
    PiecewiseFanField f;
    f.sectors = {Sector::classical(State2D(1.3, 0.2, -0.7))};
    EXPECT_LE(weak_residual(f), 1e-14);
}

TEST(WeakResidual, ClassicalFan)
{
    EXPECT_LE(weak_residual(classical_field(kWindow)), 1e-8);
    const RiemannData slip{State2D(2.0, 1.0, 0.3), State2D(0.5, -2.0, -1.1)};
    EXPECT_LE(weak_residual(classical_field(slip)), 1e-8);
}

TEST(WeakResidual, ConstructedSubsolution)
{
    for (const RiemannData& d : {kSymmetric, kUnequal, kWindow}) {
        const FanSubsolution s = construct(d);
        EXPECT_LE(weak_residual(field_from_subsolution(s, FieldFrame::Lab)), 1e-8);
        EXPECT_LE(weak_residual(field_from_subsolution(s)), 1e-8);
    }
}

TEST(WeakResidual, NonSolutionIsDetected)
{
    PiecewiseFanField f;
    f.speeds = {0.0};
    f.sectors = {Sector::classical(State2D(1.0, 0.0, 0.0)), Sector::classical(State2D(1.0, 0.0, 1.0))};
    EXPECT_GT(weak_residual(f), 1e-2);
}

TEST(WeakResidual, TamperingIsDetected)
{
    const RiemannData d{State2D(1.0, 0.5, 2.0), State2D(1.0, -0.7, -2.0)};
    const PiecewiseFanField base = field_from_subsolution(construct(d));
    for (std::size_t k = 1; k <= 2; ++k) {
        for (int field = 0; field < 6; ++field) {
            PiecewiseFanField f = base;
            Sector& s = f.sectors[k];
            double* values[] = {&s.rho, &s.v1, &s.v2, &s.U.gamma, &s.U.delta, &s.C};
            *values[field] += 1e-3;
            EXPECT_GT(weak_residual(f), 1e-5) << "sector " << k << " component " << field;
        }
    }
}

TEST(WeakResidual, ExactLineIntegralReduction)
{
    // W = sum_k (nu_k [u] - [f]) int phi(t, nu_k t) dt for any box
    PiecewiseFanField f;
    f.speeds = {-0.5, 0.8};
    f.sectors = {Sector::classical(State2D(1.0, 0.0, 0.0)), Sector::classical(State2D(2.0, 1.0, 0.3)),
                 Sector::classical(State2D(0.7, -1.0, 1.0))};
    for (const TestBox& box : test_boxes(f.speeds, 12, 99)) {
        const auto w = weak_functionals(f, box);
        double expected = 0.0;
        for (std::size_t k = 0; k < 2; ++k) {
            expected += jump_residuals(f.sectors[k], f.sectors[k + 1], f.speeds[k])[0] *
                        line_integral(box, f.speeds[k]);
        }
        EXPECT_NEAR(w[0], expected, 1e-12);
    }
}

TEST(EnergyWeak, MatchesInterfaceDissipation)
{
    const FanSubsolution s = construct(kWindow, {3.0, Epsilon2Policy::fraction(0.5)});
    const EnergyWeakReport r = energy_weak_check(field_from_subsolution(s));
    EXPECT_LE(r.max_deviation, 1e-10);
    EXPECT_GE(r.min_functional, -1e-12);
    const EnergyWeakReport c = energy_weak_check(classical_field(kWindow));
    EXPECT_LE(c.max_deviation, 1e-10);
    EXPECT_LE(std::abs(c.min_functional), 1e-10);
}

TEST(DeltaWeak, ConcentrationBalancesJumps)
{
    for (const RiemannData& d : {kSymmetric, kUnequal}) {
        EXPECT_LE(delta_weak_residual(d, solve_delta(d)), 1e-8);
    }
    DeltaShockSolution wrong = solve_delta(kUnequal);
    wrong.omega_slope *= 1.01;
    EXPECT_GT(delta_weak_residual(kUnequal, wrong), 1e-5);
}

// -------------------------------------------------------------- dissipation

TEST(DissipationRate, ClassicalWindowFan)
{
    const PiecewiseFanField f = classical_field(kWindow);
    for (double L : {1.0, 10.0, 100.0}) {
        EXPECT_NEAR(dissipation_rate(f, 1.0, L), -0.65625 * L, 1e-12 * L);
    }
    EXPECT_THROW(dissipation_rate(f, 10.0, 1.0), DomainError);
    EXPECT_THROW(dissipation_rate(f, 0.0, 1.0), DomainError);
}

TEST(DissipationRate, SymmetricSubsolutions)
{
    const FanSubsolution half = construct(kSymmetric, {3.0, Epsilon2Policy::fraction(0.5)});
    EXPECT_NEAR(dissipation_rate(field_from_subsolution(half), 1.0, 10.0), 120.0 - 160.0 / 3.0, 1e-10);
    const FanSubsolution eq = construct(kSymmetric, {3.0, Epsilon2Policy::equality_branch()});
    EXPECT_NEAR(dissipation_rate(field_from_subsolution(eq), 1.0, 10.0), 120.0, 1e-10);
}

TEST(DissipationRate, LinearInL)
{
    const PiecewiseFanField f = field_from_subsolution(construct(kUnequal));
    const double ref = dissipation_rate(f, 1.0, 5.0) / 5.0;
    for (double L : {7.0, 31.0, 400.0}) {
        EXPECT_NEAR(dissipation_rate(f, 1.0, L) / L, ref, 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST(CompareAdmissibility, WindowFractionHalfDominatesClassical)
{
    const FanSubsolution s = construct(kWindow, {3.0, Epsilon2Policy::fraction(0.5)});
    const std::vector<RateWindow> windows{{1.0, 1.0}, {1.0, 10.0}, {1.0, 100.0}};
    const DissipationReport r = compare_admissibility(kWindow, s, windows);
    EXPECT_TRUE(r.classical_dominated);
    EXPECT_EQ(r.verdict(), "classical_dominated");
    for (double d : r.classical_d) {
        EXPECT_LE(std::abs(d), 1e-12);
    }
    EXPECT_GT(r.subsolution_d.front(), 0.0);
    EXPECT_GT(r.subsolution_d.back(), 0.0);
    for (const RateComparison& c : r.rates) {
        EXPECT_NEAR(c.difference, c.predicted, 1e-10 * c.window.L);
        EXPECT_LT(c.difference, 0.0);
    }
}

TEST(CompareAdmissibility, EqualityBranchIsNotDominated)
{
    const FanSubsolution s = construct(kSymmetric, {3.0, Epsilon2Policy::equality_branch()});
    const RiemannData window_like{State2D(1.0, 0.0, 0.75), State2D(1.0, 0.0, -0.75)};
    const FanSubsolution w = construct(window_like, {3.0, Epsilon2Policy::fraction(0.5)});
    const std::vector<RateWindow> windows{{1.0, 10.0}};
    const DissipationReport r =
        compare_admissibility(field_from_subsolution(s), field_from_subsolution(s), windows);
    EXPECT_FALSE(r.classical_dominated);
    EXPECT_TRUE(r.equality);
    EXPECT_EQ(r.verdict(), "equality");
    EXPECT_THROW(compare_admissibility(classical_field(window_like), field_from_subsolution(s), windows),
                 InputError);
    EXPECT_NO_THROW(compare_admissibility(classical_field(window_like), field_from_subsolution(w), windows));
}

TEST(CompareAdmissibility, DeltaDataRouteToDeltaMargin)
{
    const FanSubsolution s = construct(kSymmetric);
    const std::vector<RateWindow> windows{{1.0, 10.0}};
    const DissipationReport r = compare_admissibility(kSymmetric, s, windows);
    ASSERT_TRUE(r.delta_margin.has_value());
    EXPECT_TRUE(r.rates.empty());
    EXPECT_EQ(r.verdict(), "delta_shock_admissible");
}
