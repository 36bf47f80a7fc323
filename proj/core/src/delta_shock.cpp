#include "chaplygin/delta_shock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chaplygin/errors.hpp"
#include "chaplygin/riemann1d.hpp"

namespace chaplygin {
namespace {

void require_delta_regime(const RiemannData& data, const char* who)
{
    const RegimeTag tag = classify(data);
    if (tag.kind != RegimeKind::DeltaShock) {
        throw RegimeError(std::string(to_string(tag.kind)),
                          std::string(who) + ": data is not in the delta-shock regime");
    }
}

} // namespace

DeltaShockSolution solve_delta(const RiemannData& data)
{
    require_delta_regime(data, "solve_delta");

    const double rl = data.left.rho();
    const double rr = data.right.rho();
    const double ul = data.left.v2();
    const double ur = data.right.v2();
    const double R = rl - rr;
    const double A = rl * ul - rr * ur;
    const double u = ul - ur;

    DeltaShockSolution ds;
    if (std::abs(R) <= 1e-10 * std::max(rl, rr)) {
        ds.omega_slope = A;
        ds.sigma = 0.5 * (ur + ul);
        ds.xi = 0.5 * (data.right.v1() + data.left.v1());
        return ds;
    }

    const double B = rl * rr * u * u - R * R / (rl * rr);
    const double sqrtB = std::sqrt(B);
    ds.omega_slope = sqrtB;

    // sigma = (A - sqrt(B)) / R. When A >= 0 the numerator cancels, so use the
    // conjugate form, with A^2 - B = R (rho- v-2^2 - rho+ v+2^2 + 1/rho+ - 1/rho-).
    if (A >= 0.0) {
        const double G = rl * ul * ul - rr * ur * ur + 1.0 / rr - 1.0 / rl;
        ds.sigma = G / (A + sqrtB);
    } else {
        ds.sigma = (A - sqrtB) / R;
    }

    // The second balance law gives xi as a convex combination of v-1 and v+1
    // with weights rho+(sigma - v+2) and rho-(v-2 - sigma), which sum to omega'.
    const double w_right = rr * (ds.sigma - ur);
    const double w_left = rl * (ul - ds.sigma);
    ds.xi = (w_right * data.right.v1() + w_left * data.left.v1()) / (w_right + w_left);
    return ds;
}

std::array<double, 3> generalized_rh_residual(const RiemannData& data, const DeltaShockSolution& ds)
{
    const State2D& l = data.left;
    const State2D& r = data.right;
    const double d_rho = r.rho() - l.rho();
    const double d_m1 = r.rho() * r.v1() - l.rho() * l.v1();
    const double d_m2 = r.rho() * r.v2() - l.rho() * l.v2();
    const double d_f1 = r.rho() * r.v1() * r.v2() - l.rho() * l.v1() * l.v2();
    const double d_f2 = (r.rho() * r.v2() * r.v2() - 1.0 / r.rho()) -
                        (l.rho() * l.v2() * l.v2() - 1.0 / l.rho());
    const double w = ds.omega_slope;
    return {w - (ds.sigma * d_rho - d_m2),
            w * ds.xi - (ds.sigma * d_m1 - d_f1),
            w * ds.sigma - (ds.sigma * d_m2 - d_f2)};
}

ShiftedDelta galilean_shift(const RiemannData& data, const DeltaShockSolution& ds, Velocity c)
{
    return {galilean_shift(data, c), {ds.omega_slope, ds.sigma + c.v2, ds.xi + c.v1}};
}

bool DeltaEnergyMargin::holds(double tol) const
{
    return std::abs(transverse_momentum_identity) <= tol && std::abs(normal_momentum_identity) <= tol &&
           cubic_margin >= -tol && right_endpoint >= -tol && left_endpoint >= -tol;
}

DeltaEnergyMargin delta_energy_margin(const RiemannData& data, const DeltaShockSolution& ds)
{
    require_delta_regime(data, "delta_energy_margin");

    DeltaEnergyMargin m{galilean_shift(data, Velocity{-ds.xi, -ds.sigma}), {}, {}, {}, {}, {}, {}, {}};
    const State2D& l = m.frame.left;
    const State2D& r = m.frame.right;

    m.transverse_momentum_identity = r.rho() * r.v1() * r.v2() - l.rho() * l.v1() * l.v2();
    m.normal_momentum_identity =
        r.rho() * r.v2() * r.v2() - l.rho() * l.v2() * l.v2() - 1.0 / r.rho() + 1.0 / l.rho();

    const double normal_flux = r.rho() * r.v2() * r.v2() * r.v2() - l.rho() * l.v2() * l.v2() * l.v2() -
                               r.v2() / r.rho() + l.v2() / l.rho();
    const double transverse_flux =
        r.rho() * r.v1() * r.v1() * r.v2() - l.rho() * l.v1() * l.v1() * l.v2();
    m.normal_part = -normal_flux;
    m.transverse_part = -transverse_flux;
    m.cubic_margin = -(normal_flux + transverse_flux);

    m.right_endpoint = -1.0 / r.rho() - r.v2();
    m.left_endpoint = l.v2() - 1.0 / l.rho();
    return m;
}

} // namespace chaplygin
