#include "chaplygin/riemann1d.hpp"

#include <algorithm>
#include <cmath>

#include "chaplygin/errors.hpp"

namespace chaplygin {
namespace {

// Curve-membership tolerance, scaled by the magnitudes entering the residual.
double curve_tolerance(const RiemannData& data)
{
    const auto scale = [](const State2D& s) { return 1.0 + std::abs(s.v2()) + 1.0 / s.rho(); };
    return 1e-9 * std::max(scale(data.left), scale(data.right));
}

} // namespace

std::string_view to_string(RegimeKind kind)
{
    switch (kind) {
    case RegimeKind::Constant:
        return "constant";
    case RegimeKind::SingleContact:
        return "single_contact";
    case RegimeKind::TwoContacts:
        return "two_contacts";
    case RegimeKind::DeltaShock:
        return "delta_shock";
    }
    return "unknown";
}

RegimeTag classify(const RiemannData& data)
{
    const State2D& l = data.left;
    const State2D& r = data.right;

    RegimeTag tag;
    tag.u = l.v2() - r.v2();
    tag.delta_threshold = 1.0 / l.rho() + 1.0 / r.rho();
    tag.window_lower = std::max(1.0 / l.rho(), 1.0 / r.rho());

    const double tol = curve_tolerance(data);
    const bool on1 = std::abs(on_wave_curve(l, r.rho(), r.v2(), WaveFamily::One)) <= tol;
    const bool on3 = std::abs(on_wave_curve(l, r.rho(), r.v2(), WaveFamily::Three)) <= tol;

    if (on1 && on3) {
        // Same (rho, v2); only the slip velocity may jump.
        if (std::abs(r.v1() - l.v1()) <= tol) {
            tag.kind = RegimeKind::Constant;
        } else {
            tag.kind = RegimeKind::SingleContact;
            tag.family = WaveFamily::Two;
        }
    } else if (on1 || on3) {
        tag.kind = RegimeKind::SingleContact;
        tag.family = on1 ? WaveFamily::One : WaveFamily::Three;
    } else if (tag.u >= tag.delta_threshold) {
        tag.kind = RegimeKind::DeltaShock;
    } else {
        tag.kind = RegimeKind::TwoContacts;
        tag.thm2_window = tag.window_lower < tag.u && tag.u < tag.delta_threshold;
    }
    return tag;
}

MiddleState middle_state(const RiemannData& data)
{
    const RegimeTag tag = classify(data);
    if (tag.kind != RegimeKind::TwoContacts) {
        throw RegimeError(std::string(to_string(tag.kind)),
                          "middle_state: data is not in the two-contact regime");
    }
    const State2D& l = data.left;
    const State2D& r = data.right;
    const double inv_rho_m = 0.5 * (r.v2() - l.v2()) + 0.5 * (1.0 / r.rho() + 1.0 / l.rho());
    const double v_m2 = 0.5 * (r.v2() + l.v2()) + 0.5 * (1.0 / r.rho() - 1.0 / l.rho());
    return {1.0 / inv_rho_m, v_m2};
}

ClassicalSolution1D solve_classical(const RiemannData& data)
{
    const RegimeTag tag = classify(data);
    const State2D& l = data.left;
    const State2D& r = data.right;
    const bool slip = l.v1() != r.v1();

    ClassicalSolution1D sol;
    switch (tag.kind) {
    case RegimeKind::Constant:
        break;

    case RegimeKind::SingleContact:
        if (tag.family == WaveFamily::Two) {
            sol.waves.push_back({l.v2(), WaveFamily::Two, l, r});
        } else if (tag.family == WaveFamily::One) {
            // 1-contact carries (rho, v2); the slip wave then sits at the new v2.
            if (slip) {
                const State2D mid(r.rho(), l.v1(), r.v2());
                sol.waves.push_back({l.v2() - 1.0 / l.rho(), WaveFamily::One, l, mid});
                sol.waves.push_back({r.v2(), WaveFamily::Two, mid, r});
            } else {
                sol.waves.push_back({l.v2() - 1.0 / l.rho(), WaveFamily::One, l, r});
            }
        } else {
            if (slip) {
                const State2D mid(l.rho(), r.v1(), l.v2());
                sol.waves.push_back({l.v2(), WaveFamily::Two, l, mid});
                sol.waves.push_back({r.v2() + 1.0 / r.rho(), WaveFamily::Three, mid, r});
            } else {
                sol.waves.push_back({r.v2() + 1.0 / r.rho(), WaveFamily::Three, l, r});
            }
        }
        break;

    case RegimeKind::TwoContacts: {
        const MiddleState m = middle_state(data);
        const State2D mid_left(m.rho, l.v1(), m.v2);
        const State2D mid_right(m.rho, r.v1(), m.v2);
        sol.waves.push_back({l.v2() - 1.0 / l.rho(), WaveFamily::One, l, mid_left});
        if (slip) {
            sol.waves.push_back({m.v2, WaveFamily::Two, mid_left, mid_right});
        }
        sol.waves.push_back({r.v2() + 1.0 / r.rho(), WaveFamily::Three, slip ? mid_right : mid_left, r});
        break;
    }

    case RegimeKind::DeltaShock:
        throw RegimeError("delta_shock",
                          "solve_classical: no contact fan exists for these data; use solve_delta");
    }
    return sol;
}

State2D sample_profile(const ClassicalSolution1D& sol, const RiemannData& data, double t, double x2)
{
    if (!(t > 0.0)) {
        throw DomainError("sample_profile: t must be positive");
    }
    if (sol.waves.empty()) {
        return data.left;
    }
    const double xi = x2 / t;
    State2D state = sol.waves.front().left;
    for (const ContactWave& w : sol.waves) {
        if (xi >= w.speed) {
            state = w.right;
        } else {
            break;
        }
    }
    return state;
}

std::array<double, 3> check_rh_jump(const State2D& left, const State2D& right, double speed)
{
    const auto jump = [&](auto&& q) { return q(right) - q(left); };
    const double d_rho = jump([](const State2D& s) { return s.rho(); });
    const double d_m1 = jump([](const State2D& s) { return s.rho() * s.v1(); });
    const double d_m2 = jump([](const State2D& s) { return s.rho() * s.v2(); });
    const double d_f1 = jump([](const State2D& s) { return s.rho() * s.v1() * s.v2(); });
    const double d_f2 = jump([](const State2D& s) { return s.rho() * s.v2() * s.v2() - 1.0 / s.rho(); });
    return {speed * d_rho - d_m2, speed * d_m1 - d_f1, speed * d_m2 - d_f2};
}

double energy_jump(const State2D& left, const State2D& right, double speed)
{
    return speed * (energy_density(right) - energy_density(left)) -
           (energy_flux_x2(right) - energy_flux_x2(left));
}

} // namespace chaplygin
