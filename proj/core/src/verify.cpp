#include "chaplygin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chaplygin/errors.hpp"
#include "chaplygin/riemann1d.hpp"

namespace chaplygin {
namespace {

bool same_sector(const Sector& a, const Sector& b)
{
    const auto close = [](double x, double y) {
        return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
    };
    return close(a.rho, b.rho) && close(a.v1, b.v1) && close(a.v2, b.v2) && close(a.C, b.C);
}

double dissipation_scale(const PiecewiseFanField& field)
{
    double scale = 1.0;
    for (std::size_t k = 0; k < field.speeds.size(); ++k) {
        const Sector& l = field.sectors[k];
        const Sector& r = field.sectors[k + 1];
        scale = std::max({scale, std::abs(field.speeds[k]) * (std::abs(l.energy()) + std::abs(r.energy())),
                          std::abs(l.energy_flux()) + std::abs(r.energy_flux())});
    }
    return scale;
}

} // namespace

WeakResidualReport weak_residual_report(const PiecewiseFanField& field, std::size_t family_size,
                                        std::uint64_t seed)
{
    field.validate();
    WeakResidualReport rep;
    for (const TestBox& box : test_boxes(field.speeds, family_size, seed)) {
        const std::array<double, 4> w = weak_functionals(field, box);
        const double norm = gradient_norm(box);
        for (std::size_t e = 0; e < 3; ++e) {
            rep.per_equation[e] = std::max(rep.per_equation[e], std::abs(w[e]) / norm);
        }
        ++rep.boxes;
    }
    rep.max_residual = *std::max_element(rep.per_equation.begin(), rep.per_equation.end());
    return rep;
}

double weak_residual(const PiecewiseFanField& field, std::size_t family_size, std::uint64_t seed)
{
    return weak_residual_report(field, family_size, seed).max_residual;
}

EnergyWeakReport energy_weak_check(const PiecewiseFanField& field, std::size_t family_size, std::uint64_t seed)
{
    field.validate();
    const std::vector<double> d = interface_dissipations(field);
    EnergyWeakReport rep;
    rep.min_functional = std::numeric_limits<double>::infinity();
    for (const TestBox& box : test_boxes(field.speeds, family_size, seed)) {
        const double w = weak_functionals(field, box)[3];
        double expected = 0.0;
        for (std::size_t k = 0; k < d.size(); ++k) {
            expected += d[k] * line_integral(box, field.speeds[k]);
        }
        const double norm = gradient_norm(box);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(w - expected) / norm);
        rep.min_functional = std::min(rep.min_functional, w / norm);
    }
    return rep;
}

std::vector<double> interface_dissipations(const PiecewiseFanField& field)
{
    std::vector<double> d;
    d.reserve(field.speeds.size());
    for (std::size_t k = 0; k < field.speeds.size(); ++k) {
        d.push_back(interface_dissipation(field.sectors[k], field.sectors[k + 1], field.speeds[k]));
    }
    return d;
}

double dissipation_rate(const PiecewiseFanField& field, double t, double L)
{
    field.validate();
    if (!(t > 0.0) || !(L > 0.0)) {
        throw DomainError("dissipation_rate: need t > 0 and L > 0");
    }
    for (double s : field.speeds) {
        if (!(std::abs(s) * t < L)) {
            throw DomainError("dissipation_rate: interface at speed " + std::to_string(s) +
                              " leaves [-L, L] by time t");
        }
    }
    double sum = 0.0;
    for (double d : interface_dissipations(field)) {
        sum += d;
    }
    return 2.0 * L * (field.far_left().energy_flux() - field.far_right().energy_flux()) - 2.0 * L * sum;
}

std::string DissipationReport::verdict() const
{
    if (delta_margin) {
        return delta_margin->holds(1e-10) ? "delta_shock_admissible" : "delta_shock_not_admissible";
    }
    if (classical_dominated) {
        return "classical_dominated";
    }
    if (equality) {
        return "equality";
    }
    return "not_dominated";
}

DissipationReport compare_admissibility(const PiecewiseFanField& classical, const PiecewiseFanField& sub,
                                        std::span<const RateWindow> windows)
{
    classical.validate();
    sub.validate();
    if (!same_sector(classical.far_left(), sub.far_left()) || !same_sector(classical.far_right(), sub.far_right())) {
        throw InputError("compare_admissibility: fields do not share their far states");
    }

    DissipationReport rep;
    rep.classical_d = interface_dissipations(classical);
    rep.subsolution_d = interface_dissipations(sub);
    for (double d : rep.classical_d) {
        rep.classical_sum += d;
    }
    for (double d : rep.subsolution_d) {
        rep.subsolution_sum += d;
    }

    const double tol = 1e-12 * dissipation_scale(sub);
    rep.classical_dominated = rep.subsolution_d.size() >= 2 && rep.subsolution_d.front() > tol &&
                              rep.subsolution_d.back() > tol &&
                              std::all_of(rep.subsolution_d.begin(), rep.subsolution_d.end(),
                                          [&](double d) { return d >= -tol; });
    rep.equality = std::all_of(rep.subsolution_d.begin(), rep.subsolution_d.end(),
                               [&](double d) { return std::abs(d) <= tol; });

    for (const RateWindow& w : windows) {
        RateComparison c;
        c.window = w;
        c.classical = dissipation_rate(classical, w.t, w.L);
        c.subsolution = dissipation_rate(sub, w.t, w.L);
        c.difference = c.subsolution - c.classical;
        c.predicted = -2.0 * w.L * rep.subsolution_sum;
        rep.rates.push_back(c);
    }
    return rep;
}

DissipationReport compare_admissibility(const RiemannData& data, const FanSubsolution& sub,
                                        std::span<const RateWindow> windows)
{
    if (classify(data).kind == RegimeKind::DeltaShock) {
        DissipationReport rep;
        rep.delta_margin = delta_energy_margin(data, solve_delta(data));
        return rep;
    }
    const Velocity to_certification{0.0, -sub.frame_velocity};
    const PiecewiseFanField classical =
        field_from_classical(solve_classical(data), data).boosted(to_certification);
    return compare_admissibility(classical, field_from_subsolution(sub, FieldFrame::Certification), windows);
}

} // namespace chaplygin
