#pragma once

// Constant gas states, Riemann data and the Chaplygin constitutive relations
//
//     p(rho) = -1/rho,   e(rho) = 1/(2 rho^2),   p = rho^2 e'(rho).
//
// Everything here is a pure function of its arguments.

#include <array>

namespace chaplygin {

/// Densities below this value are treated as zero and rejected.
inline constexpr double kMinDensity = 1e-300;

/// A velocity (or Galilean boost) in the (x1, x2) plane.
struct Velocity {
    double v1 = 0.0;
    double v2 = 0.0;

    friend Velocity operator+(Velocity a, Velocity b) { return {a.v1 + b.v1, a.v2 + b.v2}; }
    friend Velocity operator-(Velocity a) { return {-a.v1, -a.v2}; }
    friend bool operator==(const Velocity&, const Velocity&) = default;
};

/// A constant gas state. The density is validated on construction, so every
/// State2D in circulation has rho > 0 and finite components.
class State2D {
public:
    State2D(double rho, double v1, double v2);
    State2D(double rho, Velocity v) : State2D(rho, v.v1, v.v2) {}

    double rho() const noexcept { return rho_; }
    double v1() const noexcept { return v1_; }
    double v2() const noexcept { return v2_; }
    Velocity velocity() const noexcept { return {v1_, v2_}; }

    /// Same density, velocity shifted by c.
    State2D boosted(Velocity c) const { return {rho_, v1_ + c.v1, v2_ + c.v2}; }

    friend bool operator==(const State2D&, const State2D&) = default;

private:
    double rho_;
    double v1_;
    double v2_;
};

/// Riemann initial data: `left` for x2 < 0, `right` for x2 > 0.
struct RiemannData {
    State2D left;
    State2D right;

    friend bool operator==(const RiemannData&, const RiemannData&) = default;
};

/// Both states boosted by c.
RiemannData galilean_shift(const RiemannData& data, Velocity c);

/// Reflection x2 -> -x2: the states swap sides and every v2 changes sign.
RiemannData mirror(const RiemannData& data);

double pressure(double rho);
double internal_energy(double rho);
/// Analytic derivative of internal_energy.
double internal_energy_derivative(double rho);
/// Analytic derivative of pressure (the squared sound speed).
double pressure_derivative(double rho);

/// Total energy density  rho e(rho) + rho |v|^2 / 2.
double energy_density(const State2D& s);
/// x2-component of the energy flux  (eta + p) v2.
double energy_flux_x2(const State2D& s);

/// Characteristic speeds (v2 - 1/rho, v2, v2 + 1/rho) of the x2-directed system.
std::array<double, 3> eigenvalues(const State2D& s);

enum class WaveFamily { One = 1, Two = 2, Three = 3 };

/// Residual of wave-curve membership for the 1- or 3-family through `anchor`:
///   family 1:  (v2 - 1/rho) - (v2a - 1/rho_a)
///   family 3:  (v2 + 1/rho) - (v2a + 1/rho_a)
/// Zero iff (probe_rho, probe_v2) is connected to the anchor by one contact.
double on_wave_curve(const State2D& anchor, double probe_rho, double probe_v2, WaveFamily family);

/// P(r, s) = p(r) + p(s) - 2 r s (e(r) - e(s)) / (r - s), evaluated literally.
/// Vanishes identically for the Chaplygin law. Throws DomainError when r == s.
double chaplygin_P(double r, double s);

/// Throws DomainError unless rho is finite and >= kMinDensity.
void require_density(double rho, const char* what);

} // namespace chaplygin
