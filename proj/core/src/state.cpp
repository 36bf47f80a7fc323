#include "chaplygin/state.hpp"

#include <cmath>
#include <string>

#include "chaplygin/errors.hpp"

namespace chaplygin {

void require_density(double rho, const char* what)
{
    if (!std::isfinite(rho) || rho < kMinDensity) {
        throw DomainError(std::string(what) + ": density must be positive and finite, got " +
                          std::to_string(rho));
    }
}

State2D::State2D(double rho, double v1, double v2) : rho_(rho), v1_(v1), v2_(v2)
{
    require_density(rho, "State2D");
    if (!std::isfinite(v1) || !std::isfinite(v2)) {
        throw DomainError("State2D: velocity components must be finite");
    }
}

RiemannData galilean_shift(const RiemannData& data, Velocity c)
{
    return {data.left.boosted(c), data.right.boosted(c)};
}

RiemannData mirror(const RiemannData& data)
{
    return {State2D(data.right.rho(), data.right.v1(), -data.right.v2()),
            State2D(data.left.rho(), data.left.v1(), -data.left.v2())};
}

double pressure(double rho)
{
    require_density(rho, "pressure");
    return -1.0 / rho;
}

double internal_energy(double rho)
{
    require_density(rho, "internal_energy");
    return 0.5 / (rho * rho);
}

double internal_energy_derivative(double rho)
{
    require_density(rho, "internal_energy_derivative");
    return -1.0 / (rho * rho * rho);
}

double pressure_derivative(double rho)
{
    require_density(rho, "pressure_derivative");
    return 1.0 / (rho * rho);
}

double energy_density(const State2D& s)
{
    const double rho = s.rho();
    return rho * internal_energy(rho) + 0.5 * rho * (s.v1() * s.v1() + s.v2() * s.v2());
}

double energy_flux_x2(const State2D& s)
{
    return (energy_density(s) + pressure(s.rho())) * s.v2();
}

std::array<double, 3> eigenvalues(const State2D& s)
{
    const double c = 1.0 / s.rho();
    return {s.v2() - c, s.v2(), s.v2() + c};
}

double on_wave_curve(const State2D& anchor, double probe_rho, double probe_v2, WaveFamily family)
{
    require_density(probe_rho, "on_wave_curve");
    const double dv = probe_v2 - anchor.v2();
    const double dinv = 1.0 / probe_rho - 1.0 / anchor.rho();
    switch (family) {
    case WaveFamily::One:
        return dv - dinv;
    case WaveFamily::Three:
        return dv + dinv;
    case WaveFamily::Two:
        break;
    }
    throw DomainError("on_wave_curve: only families 1 and 3 carry a density jump");
}

double chaplygin_P(double r, double s)
{
    require_density(r, "chaplygin_P");
    require_density(s, "chaplygin_P");
    if (r == s) {
        throw DomainError("chaplygin_P: arguments must differ");
    }
    return pressure(r) + pressure(s) -
           2.0 * r * s * (internal_energy(r) - internal_energy(s)) / (r - s);
}

} // namespace chaplygin
