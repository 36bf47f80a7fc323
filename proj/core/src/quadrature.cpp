#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss.hpp>

#include "chaplygin/verify.hpp"

namespace chaplygin {
namespace {

using Rule = boost::math::quadrature::gauss<double, 32>;

// Calls f(x, w) for the nodes and weights of the rule mapped to [a, b].
template <class F>
void gauss_panel(double a, double b, F&& f)
{
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    for (std::size_t i = 0; i < x.size(); ++i) {
        f(c + h * x[i], h * w[i]);
        if (x[i] != 0.0) {
            f(c - h * x[i], h * w[i]);
        }
    }
}

double bump(double s)
{
    if (std::abs(s) >= 1.0) {
        return 0.0;
    }
    const double q = 1.0 - s * s;
    return q * q * q * q;
}

double bump_derivative(double s)
{
    if (std::abs(s) >= 1.0) {
        return 0.0;
    }
    const double q = 1.0 - s * s;
    return -8.0 * s * q * q * q;
}

struct Phi {
    const TestBox& box;

    double st(double t) const { return (t - box.t0) / box.ht; }
    double sx(double x) const { return (x - box.x0) / box.hx; }
    double value(double t, double x) const { return bump(st(t)) * bump(sx(x)); }
    double dt(double t, double x) const { return bump_derivative(st(t)) / box.ht * bump(sx(x)); }
    double dx(double t, double x) const { return bump(st(t)) * bump_derivative(sx(x)) / box.hx; }
};

double t_begin(const TestBox& box) { return std::max(0.0, box.t0 - box.ht); }
double t_end(const TestBox& box) { return box.t0 + box.ht; }

// Sorted breakpoints of [a, b] with the interior points of `cuts` inserted.
std::vector<double> panels(double a, double b, std::vector<double> cuts)
{
    std::vector<double> p{a, b};
    for (double c : cuts) {
        if (std::isfinite(c) && c > a && c < b) {
            p.push_back(c);
        }
    }
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

// Times at which the line x = s t enters or leaves the box.
std::vector<double> crossing_times(const TestBox& box, double s)
{
    if (s == 0.0) {
        return {};
    }
    return {(box.x0 - box.hx) / s, (box.x0 + box.hx) / s};
}

struct Densities {
    std::array<double, 4> u;
    std::array<double, 4> f;
};

Densities densities(const Sector& s)
{
    return {{s.mass(), s.momentum1(), s.momentum2(), s.energy()},
            {s.mass_flux(), s.momentum1_flux(), s.momentum2_flux(), s.energy_flux()}};
}

} // namespace

std::vector<TestBox> test_boxes(const std::vector<double>& speeds, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double spread = 1.0;
    for (double s : speeds) {
        spread = std::max(spread, std::abs(s));
    }

    std::vector<TestBox> boxes;
    boxes.reserve(count);
    const std::size_t kinds = speeds.size() + 1;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t kind = k % kinds;
        TestBox b;
        if (kind == speeds.size()) {
            // around the origin, where all interfaces meet the initial line
            b.ht = 0.5 + unit(rng);
            b.t0 = (unit(rng) - 0.5) * b.ht;
            b.hx = (0.5 + unit(rng)) * spread;
            b.x0 = (unit(rng) - 0.5) * 0.5 * b.hx;
        } else {
            const double t_star = 0.25 + 1.75 * unit(rng);
            b.ht = t_star * (0.3 + 0.6 * unit(rng));
            b.t0 = t_star + 0.25 * (unit(rng) - 0.5) * b.ht;
            b.hx = (0.2 + 0.8 * unit(rng)) * spread * t_star;
            b.x0 = speeds[kind] * t_star + 0.5 * (unit(rng) - 0.5) * b.hx;
        }
        boxes.push_back(b);
    }
    return boxes;
}

std::array<double, 4> weak_functionals(const PiecewiseFanField& field, const TestBox& box)
{
    const Phi phi{box};
    std::vector<Densities> values;
    values.reserve(field.sectors.size());
    for (const Sector& s : field.sectors) {
        values.push_back(densities(s));
    }

    std::array<double, 4> w{};
    const double ta = t_begin(box);
    const double tb = t_end(box);
    const double xa = box.x0 - box.hx;
    const double xb = box.x0 + box.hx;

    std::vector<double> t_cuts;
    for (double s : field.speeds) {
        for (double c : crossing_times(box, s)) {
            t_cuts.push_back(c);
        }
    }

    const auto interior = [&](double t, double wt) {
        std::vector<double> x_cuts;
        x_cuts.reserve(field.speeds.size());
        for (double s : field.speeds) {
            x_cuts.push_back(s * t);
        }
        const std::vector<double> xp = panels(xa, xb, x_cuts);
        for (std::size_t i = 0; i + 1 < xp.size(); ++i) {
            const double mid = 0.5 * (xp[i] + xp[i + 1]);
            const auto sector = static_cast<std::size_t>(
                std::count_if(field.speeds.begin(), field.speeds.end(), [&](double s) { return s * t < mid; }));
            const Densities& d = values[sector];
            double int_dt = 0.0;
            double int_dx = 0.0;
            gauss_panel(xp[i], xp[i + 1], [&](double x, double wx) {
                int_dt += wx * phi.dt(t, x);
                int_dx += wx * phi.dx(t, x);
            });
            for (std::size_t e = 0; e < 4; ++e) {
                w[e] += wt * (d.u[e] * int_dt + d.f[e] * int_dx);
            }
        }
    };

    const std::vector<double> tp = panels(ta, tb, t_cuts);
    for (std::size_t i = 0; i + 1 < tp.size(); ++i) {
        gauss_panel(tp[i], tp[i + 1], interior);
    }

    if (box.t0 - box.ht < 0.0) {
        const std::vector<double> xp = panels(xa, xb, {0.0});
        for (std::size_t i = 0; i + 1 < xp.size(); ++i) {
            const Densities& d = xp[i + 1] <= 0.0 ? values.front() : values.back();
            double integral = 0.0;
            gauss_panel(xp[i], xp[i + 1], [&](double x, double wx) { integral += wx * phi.value(0.0, x); });
            for (std::size_t e = 0; e < 4; ++e) {
                w[e] += d.u[e] * integral;
            }
        }
    }
    return w;
}

double line_integral(const TestBox& box, double speed)
{
    const Phi phi{box};
    const std::vector<double> tp = panels(t_begin(box), t_end(box), crossing_times(box, speed));
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < tp.size(); ++i) {
        gauss_panel(tp[i], tp[i + 1], [&](double t, double wt) { sum += wt * phi.value(t, speed * t); });
    }
    return sum;
}

double gradient_norm(const TestBox& box)
{
    const auto one_d = [](double a, double b, double centre, double h, bool derivative) {
        double sum = 0.0;
        const std::vector<double> p = panels(a, b, {centre});
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            gauss_panel(p[i], p[i + 1], [&](double y, double wy) {
                const double s = (y - centre) / h;
                sum += wy * (derivative ? std::abs(bump_derivative(s)) / h : bump(s));
            });
        }
        return sum;
    };
    const double ta = t_begin(box);
    const double tb = t_end(box);
    const double xa = box.x0 - box.hx;
    const double xb = box.x0 + box.hx;
    return one_d(ta, tb, box.t0, box.ht, true) * one_d(xa, xb, box.x0, box.hx, false) +
           one_d(ta, tb, box.t0, box.ht, false) * one_d(xa, xb, box.x0, box.hx, true);
}

double delta_weak_residual(const RiemannData& data, const DeltaShockSolution& ds, std::size_t family_size,
                           std::uint64_t seed)
{
    PiecewiseFanField field;
    field.kind = FieldKind::Classical;
    field.speeds = {ds.sigma};
    field.sectors = {Sector::classical(data.left), Sector::classical(data.right)};
    field.validate();

    const std::array<double, 3> carried = {1.0, ds.xi, ds.sigma};
    double worst = 0.0;
    for (const TestBox& box : test_boxes(field.speeds, family_size, seed)) {
        const std::array<double, 4> w = weak_functionals(field, box);
        const Phi phi{box};
        // int omega(t) (phi_t + sigma phi_x)(t, sigma t) dt, omega = omega' t
        double concentration = 0.0;
        const std::vector<double> tp = panels(t_begin(box), t_end(box), crossing_times(box, ds.sigma));
        for (std::size_t i = 0; i + 1 < tp.size(); ++i) {
            gauss_panel(tp[i], tp[i + 1], [&](double t, double wt) {
                const double x = ds.sigma * t;
                concentration += wt * ds.omega_slope * t * (phi.dt(t, x) + ds.sigma * phi.dx(t, x));
            });
        }
        const double norm = gradient_norm(box);
        for (std::size_t e = 0; e < 3; ++e) {
            worst = std::max(worst, std::abs(w[e] + carried[e] * concentration) / norm);
        }
    }
    return worst;
}

} // namespace chaplygin
