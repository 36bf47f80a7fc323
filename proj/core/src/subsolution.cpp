#include "chaplygin/subsolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chaplygin/errors.hpp"
#include "chaplygin/riemann1d.hpp"

namespace chaplygin {
namespace {

void require_construction_regime(const RiemannData& data, const char* who)
{
    const RegimeTag tag = classify(data);
    if (tag.kind == RegimeKind::DeltaShock || tag.thm2_window) {
        return;
    }
    throw RegimeError(std::string(to_string(tag.kind)),
                      std::string(who) +
                          ": requires delta-shock data or max(1/rho-,1/rho+) < u < 1/rho- + 1/rho+");
}

void require_middle_density(const RiemannData& data, double rho1, const char* who)
{
    require_construction_regime(data, who);
    const double lower = std::max(data.left.rho(), data.right.rho());
    if (!std::isfinite(rho1) || !(rho1 > lower)) {
        throw DomainError(std::string(who) + ": rho1 must exceed max(rho-, rho+)");
    }
}

// Root of eps1 for rho- > rho+ (the mirror image covers rho- < rho+).
double rho_max_ordered(double rl, double rr, double u)
{
    const double R = rl - rr;
    const double num = 2.0 * rl * rr * u + 2.0 * R;
    const double den = 2.0 * rr * u + R * (rl + rr) / (rl * rr) - rl * rr * u * u;
    return num / den;
}

MiddleSector mirror_sector(const MiddleSector& s)
{
    return {s.rho, s.alpha, -s.beta, {s.U.gamma, -s.U.delta}, s.C};
}

MiddleSector from_sector(const Sector& s)
{
    return {s.rho, s.v1, s.v2, s.U, s.C};
}

// Construction for rho- >= rho+ in the frame beta = 0, boosted back.
FanSubsolution construct_ordered(const RiemannData& data, double rho1, const Epsilon2Policy& policy)
{
    const double b = beta(data, rho1);
    const RiemannData shifted = galilean_shift(data, Velocity{0.0, -b});

    const InterfaceSpeeds speeds = interface_speeds(shifted, rho1);
    const double eps1 = epsilon1(shifted, rho1);
    if (!(eps1 > 0.0)) {
        throw InfeasibleError("construct: eps1 is not positive at rho1 = " + std::to_string(rho1));
    }
    const double bound = epsilon2_bound(shifted, rho1, eps1);

    double eps2 = 0.0;
    switch (policy.kind()) {
    case Epsilon2Policy::Kind::HalfBound:
    case Epsilon2Policy::Kind::Fraction:
        eps2 = policy.fraction_value() * bound;
        break;
    case Epsilon2Policy::Kind::EqualityBranch: {
        const double rl = shifted.left.rho();
        eps2 = eps1 * (rho1 - 2.0 * rl) / rl;
        break;
    }
    }

    const auto middle = [&](double alpha) {
        const double C = alpha * alpha + eps1 + eps2;
        return MiddleSector{rho1, alpha, 0.0, {0.5 * C - eps1, 0.0}, C};
    };

    FanSubsolution sub{
        .nu_minus = speeds.nu_minus,
        .nu0 = 0.0,
        .nu_plus = speeds.nu_plus,
        .state1 = middle(shifted.left.v1()),
        .state2 = middle(shifted.right.v1()),
        .outer = shifted,
        .frame_velocity = 0.0,
        .epsilon1 = eps1,
        .epsilon2 = eps2,
    };
    FanSubsolution out = galilean_shift(sub, Velocity{0.0, b});
    out.outer = data;
    return out;
}

} // namespace

NotationBundle notation(const RiemannData& data)
{
    const double rl = data.left.rho();
    const double rr = data.right.rho();
    NotationBundle n;
    n.R = rl - rr;
    n.A = rl * data.left.v2() - rr * data.right.v2();
    n.u = data.left.v2() - data.right.v2();
    n.B = rl * rr * n.u * n.u - n.R * n.R / (rl * rr);
    return n;
}

bool equal_densities(const RiemannData& data)
{
    const double rl = data.left.rho();
    const double rr = data.right.rho();
    return std::abs(rl - rr) <= 1e-10 * std::max(rl, rr);
}

InterfaceSpeeds interface_speeds(const RiemannData& data, double rho1)
{
    require_middle_density(data, rho1, "interface_speeds");
    const double rl = data.left.rho();
    const double rr = data.right.rho();
    const double ul = data.left.v2();
    const double ur = data.right.v2();
    const NotationBundle n = notation(data);

    if (equal_densities(data)) {
        const double mean = 0.5 * (ul + ur);
        const double half = rl * n.u / (2.0 * (rho1 - rl));
        return {mean - half, mean + half};
    }

    const double sqrtB = std::sqrt(n.B);
    const double s = std::sqrt((rho1 - rr) / (rho1 - rl));
    if (n.A >= 0.0) {
        // nu = (A - sqrt(B) s^{+-1}) / R after multiplying by the conjugate;
        // A^2 - B = R G removes the 1/R.
        const double G = rl * ul * ul - rr * ur * ur + 1.0 / rr - 1.0 / rl;
        return {(G - n.B / (rho1 - rl)) / (n.A + sqrtB * s),
                (G + n.B / (rho1 - rr)) / (n.A + sqrtB / s)};
    }
    return {(n.A - sqrtB * s) / n.R, (n.A - sqrtB / s) / n.R};
}

double beta(const RiemannData& data, double rho1)
{
    const InterfaceSpeeds nu = interface_speeds(data, rho1);
    if (equal_densities(data)) {
        return 0.5 * (data.left.v2() + data.right.v2());
    }
    // left-interface continuity: nu-(rho- - rho1) = rho- v-2 - rho1 beta
    const double rl = data.left.rho();
    return (rl * data.left.v2() + nu.nu_minus * (rho1 - rl)) / rho1;
}

double epsilon1_left_form(const RiemannData& data, double rho1)
{
    const InterfaceSpeeds nu = interface_speeds(data, rho1);
    const double rl = data.left.rho();
    const double gap = data.left.v2() - nu.nu_minus;
    return gap * gap * rl * (rho1 - rl) / (rho1 * rho1) - (rho1 - rl) / (rho1 * rho1 * rl);
}

double epsilon1_right_form(const RiemannData& data, double rho1)
{
    const InterfaceSpeeds nu = interface_speeds(data, rho1);
    const double rr = data.right.rho();
    const double gap = nu.nu_plus - data.right.v2();
    return gap * gap * rr * (rho1 - rr) / (rho1 * rho1) - (rho1 - rr) / (rho1 * rho1 * rr);
}

double epsilon1(const RiemannData& data, double rho1)
{
    require_middle_density(data, rho1, "epsilon1");
    if (equal_densities(data)) {
        const double rl = data.left.rho();
        const double u = data.left.v2() - data.right.v2();
        return rl * u * u / (4.0 * (rho1 - rl)) + 1.0 / (rho1 * rho1) - 1.0 / (rho1 * rl);
    }
    return data.left.rho() > data.right.rho() ? epsilon1_left_form(data, rho1)
                                              : epsilon1_right_form(data, rho1);
}

double rho_max(const RiemannData& data)
{
    const RegimeTag tag = classify(data);
    if (tag.kind == RegimeKind::DeltaShock) {
        return std::numeric_limits<double>::infinity();
    }
    if (!tag.thm2_window) {
        throw RegimeError(std::string(to_string(tag.kind)),
                          "rho_max: requires delta-shock data or data inside the two-contact window");
    }
    const double rl = data.left.rho();
    const double rr = data.right.rho();
    if (equal_densities(data)) {
        return 2.0 * rl / (2.0 - rl * tag.u);
    }
    return rl > rr ? rho_max_ordered(rl, rr, tag.u) : rho_max_ordered(rr, rl, tag.u);
}

double epsilon2_bound(const RiemannData& data_shifted, double rho1, double eps1)
{
    const double b = beta(data_shifted, rho1);
    const double scale = 1.0 + std::abs(data_shifted.left.v2()) + std::abs(data_shifted.right.v2());
    if (std::abs(b) > 1e-9 * scale) {
        throw DomainError("epsilon2_bound: data must be normalised to beta = 0 (beta = " +
                          std::to_string(b) + ")");
    }
    const double rl = data_shifted.left.rho();
    const double rr = data_shifted.right.rho();
    const double factor = std::min((rho1 - rl) / rl - 1.0, (rho1 - rr) / rr - 1.0);
    const double bound = eps1 * factor;
    if (!(eps1 > 0.0) || !(bound > 0.0)) {
        throw InfeasibleError("epsilon2_bound: no positive eps2 for rho1 = " + std::to_string(rho1) +
                              " (need rho1 > 2 max(rho-, rho+) and eps1 > 0)");
    }
    return bound;
}

FeasibleWindow feasible_window(const RiemannData& data)
{
    return {2.0 * std::max(data.left.rho(), data.right.rho()), rho_max(data)};
}

double default_rho1(const RiemannData& data)
{
    const FeasibleWindow w = feasible_window(data);
    const double candidate = 1.25 * w.lower;
    if (candidate < w.upper) {
        return candidate;
    }
    return 0.5 * (w.lower + w.upper);
}

Epsilon2Policy Epsilon2Policy::fraction(double f)
{
    if (!(f > 0.0 && f < 1.0)) {
        throw DomainError("Epsilon2Policy: fraction must lie in (0, 1)");
    }
    return Epsilon2Policy(Kind::Fraction, f);
}

std::string Epsilon2Policy::name() const
{
    switch (kind_) {
    case Kind::HalfBound:
        return "half";
    case Kind::EqualityBranch:
        return "equality";
    case Kind::Fraction:
        return "fraction:" + std::to_string(fraction_);
    }
    return "unknown";
}

FanSubsolution construct(const RiemannData& data, const ConstructionOptions& opts)
{
    require_construction_regime(data, "construct");
    if (opts.epsilon2.kind() == Epsilon2Policy::Kind::EqualityBranch && !equal_densities(data)) {
        throw InputError("construct: the equality branch requires rho- = rho+");
    }
    const FeasibleWindow window = feasible_window(data);
    if (window.empty()) {
        throw InfeasibleError("construct: empty window (2 max(rho-, rho+), rho_max)");
    }
    const double rho1 = opts.rho1.value_or(default_rho1(data));
    if (!window.contains(rho1)) {
        throw InfeasibleError("construct: rho1 = " + std::to_string(rho1) + " outside (" +
                              std::to_string(window.lower) + ", " + std::to_string(window.upper) + ")");
    }
    if (!equal_densities(data) && data.left.rho() < data.right.rho()) {
        return mirror(construct_ordered(mirror(data), rho1, opts.epsilon2));
    }
    return construct_ordered(data, rho1, opts.epsilon2);
}

FanSubsolution galilean_shift(const FanSubsolution& sub, Velocity c)
{
    FanSubsolution out = sub;
    out.nu_minus += c.v2;
    out.nu0 += c.v2;
    out.nu_plus += c.v2;
    out.state1 = from_sector(sub.state1.as_sector().boosted(c));
    out.state2 = from_sector(sub.state2.as_sector().boosted(c));
    out.outer = galilean_shift(sub.outer, c);
    out.frame_velocity += c.v2;
    return out;
}

FanSubsolution mirror(const FanSubsolution& sub)
{
    FanSubsolution out = sub;
    out.nu_minus = -sub.nu_plus;
    out.nu0 = -sub.nu0;
    out.nu_plus = -sub.nu_minus;
    out.state1 = mirror_sector(sub.state2);
    out.state2 = mirror_sector(sub.state1);
    out.outer = mirror(sub.outer);
    out.frame_velocity = -sub.frame_velocity;
    return out;
}

PiecewiseFanField field_from_subsolution(const FanSubsolution& sub, FieldFrame frame)
{
    PiecewiseFanField f;
    f.kind = FieldKind::Subsolution;
    f.speeds = {sub.nu_minus, sub.nu0, sub.nu_plus};
    f.sectors = {Sector::classical(sub.outer.left), sub.state1.as_sector(), sub.state2.as_sector(),
                 Sector::classical(sub.outer.right)};
    f.validate();
    if (frame == FieldFrame::Certification && sub.frame_velocity != 0.0) {
        return f.boosted(Velocity{0.0, -sub.frame_velocity});
    }
    return f;
}

double InterfaceResiduals::max_abs() const
{
    return std::max({std::abs(continuity), std::abs(momentum1), std::abs(momentum2)});
}

VerificationReport verify_fan(const RiemannData& data, const FanSubsolution& sub)
{
    VerificationReport rep;
    static constexpr std::array<const char*, 3> kInterface = {"left", "middle", "right"};

    const auto same = [](double a, double b) {
        return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    const auto same_state = [&](const State2D& a, const State2D& b) {
        return same(a.rho(), b.rho()) && same(a.v1(), b.v1()) && same(a.v2(), b.v2());
    };
    rep.outer_states_match = same_state(data.left, sub.outer.left) && same_state(data.right, sub.outer.right);
    if (!rep.outer_states_match) {
        rep.failures.emplace_back("outer states differ from the Riemann data");
    }

    rep.densities_positive = std::isfinite(sub.state1.rho) && std::isfinite(sub.state2.rho) &&
                             sub.state1.rho >= kMinDensity && sub.state2.rho >= kMinDensity;
    rep.energy_bounds_positive = sub.state1.C > 0.0 && sub.state2.C > 0.0;
    if (!rep.densities_positive) {
        rep.failures.emplace_back("middle densities must be positive");
        return rep;
    }
    if (!rep.energy_bounds_positive) {
        rep.failures.emplace_back("energy bounds C1, C2 must be positive");
    }

    rep.order_ok = sub.nu_minus < sub.nu0 && sub.nu0 < sub.nu_plus;
    if (!rep.order_ok) {
        rep.failures.emplace_back("interface order nu- < nu0 < nu+ violated");
        return rep;
    }

    const PiecewiseFanField lab = field_from_subsolution(sub, FieldFrame::Lab);
    const PiecewiseFanField cert = field_from_subsolution(sub, FieldFrame::Certification);

    const NotationBundle n = notation(data);
    rep.residual_tolerance =
        1e-9 * std::max({1.0, std::abs(n.A), std::abs(n.B), std::abs(sub.state1.C), std::abs(sub.state2.C)});

    double adm_scale = 1.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto r = jump_residuals(lab.sectors[k], lab.sectors[k + 1], lab.speeds[k]);
        rep.residuals[k] = {r[0], r[1], r[2]};
        rep.max_residual = std::max(rep.max_residual, rep.residuals[k].max_abs());
        const char* names[3] = {"continuity", "x1-momentum", "x2-momentum"};
        for (std::size_t e = 0; e < 3; ++e) {
            if (!(std::abs(r[e]) <= rep.residual_tolerance)) {
                rep.failures.push_back(std::string(kInterface[k]) + " interface " + names[e] + " residual");
            }
        }

        const Sector& l = cert.sectors[k];
        const Sector& rr = cert.sectors[k + 1];
        const double s = cert.speeds[k];
        rep.admissibility[k] = interface_dissipation(l, rr, s);
        rep.lab_admissibility[k] = interface_dissipation(lab.sectors[k], lab.sectors[k + 1], lab.speeds[k]);
        adm_scale = std::max({adm_scale, std::abs(s) * (std::abs(l.energy()) + std::abs(rr.energy())),
                              std::abs(l.energy_flux()) + std::abs(rr.energy_flux())});
    }

    const std::array<const MiddleSector*, 2> mids = {&sub.state1, &sub.state2};
    for (std::size_t i = 0; i < 2; ++i) {
        const MiddleSector& m = *mids[i];
        rep.trace_margin[i] = m.C - m.alpha * m.alpha - m.beta * m.beta;
        const double off = m.U.delta - m.alpha * m.beta;
        rep.determinant_margin[i] = (0.5 * m.C - m.alpha * m.alpha + m.U.gamma) *
                                        (0.5 * m.C - m.beta * m.beta - m.U.gamma) -
                                    off * off;
        if (!(rep.trace_margin[i] > 0.0)) {
            rep.failures.push_back("trace condition fails in sector " + std::to_string(i + 1));
        }
        if (!(rep.determinant_margin[i] > 0.0)) {
            rep.failures.push_back("determinant condition fails in sector " + std::to_string(i + 1));
        }
    }

    rep.admissibility_tolerance = 1e-12 * adm_scale;
    for (std::size_t k = 0; k < 3; ++k) {
        if (!(rep.admissibility[k] >= -rep.admissibility_tolerance)) {
            rep.failures.push_back(std::string("energy inequality fails on the ") + kInterface[k] +
                                   " interface");
        }
    }
    return rep;
}

} // namespace chaplygin
