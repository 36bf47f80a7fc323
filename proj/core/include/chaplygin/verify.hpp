#pragma once

// Independent certification: a root-finding oracle for the subsolution
// closed forms, quadrature of the weak formulations, and the energy
// dissipation comparators for fan fields.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chaplygin/delta_shock.hpp"
#include "chaplygin/fan_field.hpp"
#include "chaplygin/state.hpp"
#include "chaplygin/subsolution.hpp"

namespace chaplygin {

// ---------------------------------------------------------------- oracle

struct OracleOptions {
    int restarts = 20;
    int max_iterations = 200;
    double damping = 0.5;
    /// Stop when |F| <= tolerance * scale, scale the size of the data fluxes.
    double tolerance = 1e-12;
};

struct OracleResult {
    bool converged = false;
    double nu_minus = 0.0;
    double nu_plus = 0.0;
    double beta = 0.0;
    double epsilon1 = 0.0;
    double residual_norm = 0.0;
    int starts_used = 0;
    std::string message;
};

/// Solves the four interface equations
///   nu-(rho- - rho1) = rho- v-2 - rho1 beta
///   nu-(rho- v-2 - rho1 beta) = rho- v-2^2 - rho1 (beta^2 + eps1) + p(rho-) - p(rho1)
/// and their right-interface counterparts for (nu-, nu+, beta, eps1) by damped
/// Newton iteration with a divided-difference Jacobian from seeded random
/// starts. Only roots with nu- < nu+ are accepted. Never throws for numeric
/// failure; check `converged`.
OracleResult oracle_interface_system(const RiemannData& data, double rho1, std::uint64_t seed,
                                     const OracleOptions& opts = {});

// ------------------------------------------------------------ quadrature

/// Support [t0 - ht, t0 + ht] x [x0 - hx, x0 + hx] of the test function
/// phi = (1 - s_t^2)^4 (1 - s_x^2)^4; the part with t < 0 is dropped and the
/// initial data enter through the t = 0 boundary term.
struct TestBox {
    double t0 = 0.0;
    double x0 = 0.0;
    double ht = 1.0;
    double hx = 1.0;
};

/// Seeded boxes centred on interfaces and on the origin.
std::vector<TestBox> test_boxes(const std::vector<double>& speeds, std::size_t count, std::uint64_t seed);

/// Weak functionals for mass, momentum-1, momentum-2 and energy:
///   W = int int (u phi_t + f phi_x) dx dt + int u(0, x) phi(0, x) dx.
/// For a piecewise-constant fan W = sum_k (nu_k [u]_k - [f]_k) int phi(t, nu_k t) dt.
std::array<double, 4> weak_functionals(const PiecewiseFanField& field, const TestBox& box);

/// int phi(t, s t) dt over the box.
double line_integral(const TestBox& box, double speed);

/// int int |phi_t| + |phi_x|, used to normalise residuals.
double gradient_norm(const TestBox& box);

struct WeakResidualReport {
    double max_residual = 0.0; ///< over continuity and both momentum equations
    std::array<double, 3> per_equation{};
    std::size_t boxes = 0;
};

inline constexpr std::uint64_t kDefaultBoxSeed = 20240611;

WeakResidualReport weak_residual_report(const PiecewiseFanField& field, std::size_t family_size = 50,
                                        std::uint64_t seed = kDefaultBoxSeed);
double weak_residual(const PiecewiseFanField& field, std::size_t family_size = 50,
                     std::uint64_t seed = kDefaultBoxSeed);

struct EnergyWeakReport {
    /// max |W_energy - sum_k d_k int phi(t, nu_k t) dt| / |grad phi|_1
    double max_deviation = 0.0;
    /// min W_energy / |grad phi|_1; >= 0 for an admissible field.
    double min_functional = 0.0;
};

EnergyWeakReport energy_weak_check(const PiecewiseFanField& field, std::size_t family_size = 50,
                                   std::uint64_t seed = kDefaultBoxSeed);

/// Quadrature of the delta-shock weak formulation, concentration terms
/// omega(t) (phi_t + sigma phi_x) along x = sigma t included. Returns the
/// normalised maximum over continuity and both momentum equations.
double delta_weak_residual(const RiemannData& data, const DeltaShockSolution& ds,
                           std::size_t family_size = 50, std::uint64_t seed = kDefaultBoxSeed);

// ------------------------------------------------------------ dissipation

/// D_L = d+/dt of the energy in [-L, L]^2 for a fan field:
///   2L (q(far left) - q(far right)) - 2L sum_k d_k.
/// Throws DomainError unless t > 0, L > 0 and max |nu| t < L.
double dissipation_rate(const PiecewiseFanField& field, double t, double L);

std::vector<double> interface_dissipations(const PiecewiseFanField& field);

struct RateWindow {
    double t = 1.0;
    double L = 10.0;
};

struct RateComparison {
    RateWindow window;
    double classical = 0.0;
    double subsolution = 0.0;
    double difference = 0.0; ///< subsolution - classical
    double predicted = 0.0;  ///< -2L sum d(sub)
};

struct DissipationReport {
    std::vector<double> classical_d;
    std::vector<double> subsolution_d;
    double classical_sum = 0.0;
    double subsolution_sum = 0.0;
    std::vector<RateComparison> rates;

    /// Every outer interface of the subsolution dissipates strictly.
    bool classical_dominated = false;
    /// Subsolution dissipation vanishes within tolerance.
    bool equality = false;

    /// Set instead of the fields above for delta-shock data.
    std::optional<DeltaEnergyMargin> delta_margin;

    std::string verdict() const;
};

/// Both fields must share their far states (InputError otherwise).
DissipationReport compare_admissibility(const PiecewiseFanField& classical, const PiecewiseFanField& sub,
                                        std::span<const RateWindow> windows);

/// Builds both fields from the data in the certification frame of `sub`.
/// Delta-shock data have no classical fan: the delta-shock energy margin is
/// reported instead.
DissipationReport compare_admissibility(const RiemannData& data, const FanSubsolution& sub,
                                        std::span<const RateWindow> windows);

} // namespace chaplygin
