#pragma once

// Piecewise-constant self-similar fields on the (t, x2) half plane.
//
// Classical contact fans and fan subsolutions share one representation: each
// sector carries (rho, v, U, C) where U is the traceless part of the
// Reynolds-type tensor and rho C / 2 the kinetic energy density. A classical
// state has U = v (x) v - |v|^2/2 I and C = |v|^2, which turns the relaxed
// fluxes below into the ordinary Euler fluxes:
//
//   mass        rho                     | rho v2
//   momentum-1  rho v1                  | rho U12
//   momentum-2  rho v2                  | -rho U11 + p(rho) + rho C/2
//   energy      rho e + rho C/2         | (rho e + p + rho C/2) v2

#include <array>
#include <vector>

#include "chaplygin/state.hpp"

namespace chaplygin {

/// Traceless symmetric 2x2 matrix [[gamma, delta], [delta, -gamma]].
struct TracelessSym2 {
    double gamma = 0.0;
    double delta = 0.0;
};

struct Sector {
    double rho = 1.0;
    double v1 = 0.0;
    double v2 = 0.0;
    TracelessSym2 U;
    double C = 0.0;

    static Sector classical(const State2D& s);
    static Sector relaxed(double rho, double alpha, double beta, TracelessSym2 U, double C);

    double mass() const { return rho; }
    double mass_flux() const { return rho * v2; }
    double momentum1() const { return rho * v1; }
    double momentum1_flux() const { return rho * U.delta; }
    double momentum2() const { return rho * v2; }
    double momentum2_flux() const;
    double energy() const;
    double energy_flux() const;

    /// Galilean boost; the tensor transforms as U + C/2 I -> (U + C/2 I) + v(x)c + c(x)v + c(x)c.
    Sector boosted(Velocity c) const;
};

enum class FieldKind { Classical, Subsolution };

struct PiecewiseFanField {
    FieldKind kind = FieldKind::Classical;
    /// Strictly increasing interface speeds.
    std::vector<double> speeds;
    /// speeds.size() + 1 sectors, ordered in x2.
    std::vector<Sector> sectors;

    /// Throws InputError if the layout invariants are violated.
    void validate() const;

    const Sector& far_left() const { return sectors.front(); }
    const Sector& far_right() const { return sectors.back(); }
    PiecewiseFanField boosted(Velocity c) const;
};

struct ClassicalSolution1D;

PiecewiseFanField field_from_classical(const ClassicalSolution1D& sol, const RiemannData& data);

/// Mass, momentum-1 and momentum-2 jump residuals  s[u] - [f]  across an interface.
std::array<double, 3> jump_residuals(const Sector& left, const Sector& right, double speed);

/// Energy dissipation line density  d = s[eta] - [q]  across an interface,
/// evaluated in relative-velocity form. d >= 0 for admissible jumps and d is
/// the density of the entropy production measure on that line.
double interface_dissipation(const Sector& left, const Sector& right, double speed);

} // namespace chaplygin
