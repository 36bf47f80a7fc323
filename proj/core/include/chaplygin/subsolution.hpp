#pragma once

// Admissible fan subsolutions for delta-shock data and for two-contact data
// inside the window max(1/rho-, 1/rho+) < u < 1/rho- + 1/rho+.
//
// The fan has three interfaces nu- < nu0 < nu+ and two middle sectors with
// equal density rho1, v_i = (alpha_i, beta), U_i = [[gamma_i, delta_i],
// [delta_i, -gamma_i]] and energy bound C_i. With alpha1 = v-1, alpha2 = v+1,
// delta_i = alpha_i beta and nu0 = beta the interface conditions reduce to
// four equations in (nu-, nu+, beta, eps1) parametrised by rho1, where
//
//   eps1 = C1/2 - gamma1 - beta^2,     eps2 = C1 - v-1^2 - beta^2 - eps1
//
// are the slacks of the subsolution matrix inequality. The energy inequality
// is checked in the frame where beta = 0; constructions are carried out
// there and boosted back, with the boost recorded in frame_velocity.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chaplygin/fan_field.hpp"
#include "chaplygin/state.hpp"

namespace chaplygin {

struct NotationBundle {
    double R = 0.0; ///< rho- - rho+
    double A = 0.0; ///< rho- v-2 - rho+ v+2
    double u = 0.0; ///< v-2 - v+2
    double B = 0.0; ///< rho- rho+ u^2 - R^2 / (rho- rho+)
};

NotationBundle notation(const RiemannData& data);

/// True when |R| is small enough that the equal-density formulas are used.
bool equal_densities(const RiemannData& data);

struct InterfaceSpeeds {
    double nu_minus = 0.0;
    double nu_plus = 0.0;
};

// The closed forms below require delta-shock or window data (RegimeError
// otherwise) and rho1 > max(rho-, rho+) (DomainError otherwise).
InterfaceSpeeds interface_speeds(const RiemannData& data, double rho1);
double beta(const RiemannData& data, double rho1);

/// eps1 from the left-interface momentum balance.
double epsilon1_left_form(const RiemannData& data, double rho1);
/// eps1 from the right-interface momentum balance.
double epsilon1_right_form(const RiemannData& data, double rho1);
/// eps1 with the form selected by sign(R); the equal-density form when R = 0.
double epsilon1(const RiemannData& data, double rho1);

/// Upper end of the middle-density range with eps1 > 0; +infinity for
/// delta-shock data. Throws RegimeError outside both regimes.
double rho_max(const RiemannData& data);

/// Largest admissible eps2 in the frame beta = 0:
///   eps1 * min((rho1 - rho-)/rho- - 1, (rho1 - rho+)/rho+ - 1).
/// `data_shifted` must already be normalised (DomainError otherwise).
/// Throws InfeasibleError if the bound is not positive.
double epsilon2_bound(const RiemannData& data_shifted, double rho1, double eps1);

/// Open interval (2 max(rho-, rho+), rho_max) of feasible middle densities.
struct FeasibleWindow {
    double lower = 0.0;
    double upper = 0.0;
    bool empty() const { return !(lower < upper); }
    bool contains(double rho1) const { return lower < rho1 && rho1 < upper; }
};

FeasibleWindow feasible_window(const RiemannData& data);

/// 2.5 max(rho-, rho+), or the window midpoint if that exceeds rho_max.
double default_rho1(const RiemannData& data);

class Epsilon2Policy {
public:
    enum class Kind { HalfBound, EqualityBranch, Fraction };

    static Epsilon2Policy half_bound() { return Epsilon2Policy(Kind::HalfBound, 0.5); }
    static Epsilon2Policy equality_branch() { return Epsilon2Policy(Kind::EqualityBranch, 0.0); }
    /// Throws DomainError unless 0 < f < 1.
    static Epsilon2Policy fraction(double f);

    Kind kind() const { return kind_; }
    double fraction_value() const { return fraction_; }
    std::string name() const;

private:
    Epsilon2Policy(Kind k, double f) : kind_(k), fraction_(f) {}
    Kind kind_;
    double fraction_;
};

struct ConstructionOptions {
    std::optional<double> rho1;
    Epsilon2Policy epsilon2 = Epsilon2Policy::half_bound();
};

struct MiddleSector {
    double rho = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    TracelessSym2 U;
    double C = 0.0;

    Sector as_sector() const { return Sector::relaxed(rho, alpha, beta, U, C); }
};

struct FanSubsolution {
    double nu_minus = 0.0;
    double nu0 = 0.0;
    double nu_plus = 0.0;
    MiddleSector state1;
    MiddleSector state2;
    /// Outer states P- and P+.
    RiemannData outer;
    /// x2-velocity of the frame in which the energy inequality is certified.
    double frame_velocity = 0.0;

    /// Slacks in the certification frame (informational; recomputed by verify_fan).
    double epsilon1 = 0.0;
    double epsilon2 = 0.0;
};

/// Builds an admissible fan subsolution.
///   RegimeError     - data neither delta-shock nor inside the window
///   InfeasibleError - empty window, or rho1 outside it
///   InputError      - EqualityBranch requested with rho- != rho+
FanSubsolution construct(const RiemannData& data, const ConstructionOptions& opts = {});

/// Boost by c. Interfaces move by c2, velocities by c, U and C transform as
/// second moments; frame_velocity moves by c2.
FanSubsolution galilean_shift(const FanSubsolution& sub, Velocity c);

/// Reflection x2 -> -x2.
FanSubsolution mirror(const FanSubsolution& sub);

enum class FieldFrame { Lab, Certification };

PiecewiseFanField field_from_subsolution(const FanSubsolution& sub,
                                         FieldFrame frame = FieldFrame::Certification);

struct InterfaceResiduals {
    double continuity = 0.0;
    double momentum1 = 0.0;
    double momentum2 = 0.0;
    double max_abs() const;
};

struct VerificationReport {
    /// Left (nu-), middle (nu0), right (nu+) interfaces.
    std::array<InterfaceResiduals, 3> residuals{};
    std::array<double, 2> trace_margin{};
    std::array<double, 2> determinant_margin{};
    /// Energy dissipation d on each interface, certification frame.
    std::array<double, 3> admissibility{};
    /// Same quantity evaluated in the lab frame (diagnostic only).
    std::array<double, 3> lab_admissibility{};
    bool order_ok = false;
    bool densities_positive = false;
    bool energy_bounds_positive = false;
    bool outer_states_match = false;

    double residual_tolerance = 0.0;
    double admissibility_tolerance = 0.0;
    double max_residual = 0.0;

    std::vector<std::string> failures;

    bool admissible() const { return failures.empty(); }
};

VerificationReport verify_fan(const RiemannData& data, const FanSubsolution& sub);

} // namespace chaplygin
