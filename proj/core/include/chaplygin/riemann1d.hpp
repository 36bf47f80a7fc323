#pragma once

// Classical self-similar solutions of the x2-directed Riemann problem.
//
// All three characteristic fields of the Chaplygin system are linearly
// degenerate, so a classical solution is a fan of at most three contact
// discontinuities. When v_{-2} - v_{+2} >= 1/rho_- + 1/rho_+ no such fan
// exists and the solution is a delta-shock (see delta_shock.hpp).

#include <array>
#include <string_view>
#include <vector>

#include "chaplygin/state.hpp"

namespace chaplygin {

enum class RegimeKind { Constant, SingleContact, TwoContacts, DeltaShock };

std::string_view to_string(RegimeKind kind);

struct RegimeTag {
    RegimeKind kind = RegimeKind::Constant;
    /// Family of the lone wave; only meaningful for SingleContact.
    WaveFamily family = WaveFamily::Two;
    /// max(1/rho_-, 1/rho_+) < u < 1/rho_- + 1/rho_+. Implies TwoContacts.
    bool thm2_window = false;

    /// u = v_{-2} - v_{+2}
    double u = 0.0;
    /// 1/rho_- + 1/rho_+
    double delta_threshold = 0.0;
    /// max(1/rho_-, 1/rho_+)
    double window_lower = 0.0;
};

RegimeTag classify(const RiemannData& data);

/// Middle state (rho_m, v_m2) of the two-contact solution.
struct MiddleState {
    double rho = 0.0;
    double v2 = 0.0;
};

/// Requires classify(data).kind == TwoContacts, otherwise throws RegimeError.
MiddleState middle_state(const RiemannData& data);

struct ContactWave {
    double speed = 0.0;
    WaveFamily family = WaveFamily::Two;
    State2D left;
    State2D right;
};

struct ClassicalSolution1D {
    /// Ordered by strictly increasing speed; adjacent waves share a state.
    std::vector<ContactWave> waves;
};

/// Builds the contact fan. Throws RegimeError for delta-shock data.
ClassicalSolution1D solve_classical(const RiemannData& data);

/// State of the fan at (t, x2). Exactly on a wave the right state is returned.
State2D sample_profile(const ClassicalSolution1D& sol, const RiemannData& data, double t, double x2);

/// Rankine-Hugoniot residuals of a jump at `speed`:
///   ( s[rho] - [rho v2],  s[rho v1] - [rho v1 v2],  s[rho v2] - [rho v2^2 - 1/rho] ).
std::array<double, 3> check_rh_jump(const State2D& left, const State2D& right, double speed);

/// speed [eta] - [q]; vanishes across every classical contact.
double energy_jump(const State2D& left, const State2D& right, double speed);

} // namespace chaplygin
