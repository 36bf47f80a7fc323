#include "chaplygin/fan_field.hpp"

#include <string>

#include "chaplygin/errors.hpp"
#include "chaplygin/riemann1d.hpp"

namespace chaplygin {

Sector Sector::classical(const State2D& s)
{
    const double a = s.v1();
    const double b = s.v2();
    return {s.rho(), a, b, {0.5 * (a * a - b * b), a * b}, a * a + b * b};
}

Sector Sector::relaxed(double rho, double alpha, double beta, TracelessSym2 U, double C)
{
    require_density(rho, "Sector");
    return {rho, alpha, beta, U, C};
}

double Sector::momentum2_flux() const
{
    return -rho * U.gamma + pressure(rho) + 0.5 * rho * C;
}

double Sector::energy() const
{
    return rho * internal_energy(rho) + 0.5 * rho * C;
}

double Sector::energy_flux() const
{
    return (energy() + pressure(rho)) * v2;
}

Sector Sector::boosted(Velocity c) const
{
    const double C_new = C + 2.0 * (v1 * c.v1 + v2 * c.v2) + c.v1 * c.v1 + c.v2 * c.v2;
    const double m11 = U.gamma + 0.5 * C + 2.0 * v1 * c.v1 + c.v1 * c.v1;
    const double m12 = U.delta + v1 * c.v2 + v2 * c.v1 + c.v1 * c.v2;
    return {rho, v1 + c.v1, v2 + c.v2, {m11 - 0.5 * C_new, m12}, C_new};
}

void PiecewiseFanField::validate() const
{
    if (sectors.size() != speeds.size() + 1) {
        throw InputError("PiecewiseFanField: need exactly one more sector than interfaces");
    }
    for (std::size_t k = 1; k < speeds.size(); ++k) {
        if (!(speeds[k - 1] < speeds[k])) {
            throw InputError("PiecewiseFanField: interface speeds must increase strictly");
        }
    }
    for (const Sector& s : sectors) {
        require_density(s.rho, "PiecewiseFanField");
    }
}

PiecewiseFanField PiecewiseFanField::boosted(Velocity c) const
{
    PiecewiseFanField out{kind, speeds, {}};
    for (double& s : out.speeds) {
        s += c.v2;
    }
    out.sectors.reserve(sectors.size());
    for (const Sector& s : sectors) {
        out.sectors.push_back(s.boosted(c));
    }
    return out;
}

PiecewiseFanField field_from_classical(const ClassicalSolution1D& sol, const RiemannData& data)
{
    PiecewiseFanField f;
    f.kind = FieldKind::Classical;
    if (sol.waves.empty()) {
        f.sectors.push_back(Sector::classical(data.left));
        return f;
    }
    f.sectors.push_back(Sector::classical(data.left));
    for (std::size_t k = 0; k < sol.waves.size(); ++k) {
        f.speeds.push_back(sol.waves[k].speed);
        f.sectors.push_back(k + 1 == sol.waves.size() ? Sector::classical(data.right)
                                                      : Sector::classical(sol.waves[k].right));
    }
    f.validate();
    return f;
}

std::array<double, 3> jump_residuals(const Sector& left, const Sector& right, double speed)
{
    return {speed * (right.mass() - left.mass()) - (right.mass_flux() - left.mass_flux()),
            speed * (right.momentum1() - left.momentum1()) -
                (right.momentum1_flux() - left.momentum1_flux()),
            speed * (right.momentum2() - left.momentum2()) -
                (right.momentum2_flux() - left.momentum2_flux())};
}

double interface_dissipation(const Sector& left, const Sector& right, double speed)
{
    // s[eta] - [(eta + p) v2], regrouped so that a jump moving with the
    // common normal velocity of equal-density sectors gives exactly zero.
    return (speed - right.v2) * right.energy() - (speed - left.v2) * left.energy() -
           (pressure(right.rho) * right.v2 - pressure(left.rho) * left.v2);
}

} // namespace chaplygin
