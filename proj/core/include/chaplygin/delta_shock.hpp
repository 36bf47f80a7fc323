#pragma once

// Delta-shock solutions of the x2-directed Riemann problem.
//
// For v_{-2} - v_{+2} >= 1/rho_- + 1/rho_+ the density carries a Dirac mass
// omega(t) = omega_slope * t travelling on x2 = sigma t, with v = (xi, sigma)
// on the shock. The three generalized Rankine-Hugoniot balance laws are
//
//   omega'         = sigma [rho]    - [rho v2]
//   (omega xi)'    = sigma [rho v1] - [rho v1 v2]
//   (omega sigma)' = sigma [rho v2] - [rho v2^2 - 1/rho]
//
// with 1/rho := 0 on the shock itself. Because omega is linear in t each law
// reduces to an algebraic identity.

#include <array>

#include "chaplygin/state.hpp"

namespace chaplygin {

struct DeltaShockSolution {
    double omega_slope = 0.0;
    double sigma = 0.0;
    double xi = 0.0;
};

/// Closed-form delta-shock. Throws RegimeError outside the delta regime.
DeltaShockSolution solve_delta(const RiemannData& data);

/// Residuals of the three generalized Rankine-Hugoniot laws.
std::array<double, 3> generalized_rh_residual(const RiemannData& data, const DeltaShockSolution& ds);

struct ShiftedDelta {
    RiemannData data;
    DeltaShockSolution shock;
};

/// Boost by c: velocities + c, sigma + c2, xi + c1, omega unchanged.
ShiftedDelta galilean_shift(const RiemannData& data, const DeltaShockSolution& ds, Velocity c);

/// Energy-inequality certificate for a delta-shock, evaluated in the frame
/// sigma = xi = 0 (`frame` holds the boosted data).
struct DeltaEnergyMargin {
    RiemannData frame;
    /// rho+ v+1 v+2 - rho- v-1 v-2 (must vanish)
    double transverse_momentum_identity = 0.0;
    /// rho+ v+2^2 - rho- v-2^2 - 1/rho+ + 1/rho- (must vanish)
    double normal_momentum_identity = 0.0;
    /// -(energy flux balance across the shock); the energy inequality holds iff >= 0
    double cubic_margin = 0.0;
    /// Contribution of the v2-only terms to cubic_margin.
    double normal_part = 0.0;
    /// Contribution of the rho v1^2 v2 terms to cubic_margin.
    double transverse_part = 0.0;
    /// -1/rho+ - v+2 (>= 0 required)
    double right_endpoint = 0.0;
    /// v-2 - 1/rho- (>= 0 required)
    double left_endpoint = 0.0;

    bool holds(double tol) const;
};

/// Throws RegimeError outside the delta regime.
DeltaEnergyMargin delta_energy_margin(const RiemannData& data, const DeltaShockSolution& ds);

} // namespace chaplygin
