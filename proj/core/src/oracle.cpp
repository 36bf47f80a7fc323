#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "chaplygin/state.hpp"
#include "chaplygin/verify.hpp"

namespace chaplygin {
namespace {

using Vec4 = Eigen::Vector4d;

struct ReducedSystem {
    double rl, ul, rr, ur, rho1;

    // Unknowns x = (nu-, nu+, beta, eps1).
    Vec4 operator()(const Vec4& x) const
    {
        const double nm = x[0];
        const double np = x[1];
        const double b = x[2];
        const double e1 = x[3];
        const double mid_flux = rho1 * (b * b + e1) + pressure(rho1);
        Vec4 f;
        f[0] = nm * (rl - rho1) - (rl * ul - rho1 * b);
        f[1] = nm * (rl * ul - rho1 * b) - (rl * ul * ul + pressure(rl) - mid_flux);
        f[2] = np * (rho1 - rr) - (rho1 * b - rr * ur);
        f[3] = np * (rho1 * b - rr * ur) - (mid_flux - rr * ur * ur - pressure(rr));
        return f;
    }
};

Eigen::Matrix4d divided_difference_jacobian(const ReducedSystem& sys, const Vec4& x, const Vec4& fx)
{
    Eigen::Matrix4d J;
    for (int j = 0; j < 4; ++j) {
        const double h = 1e-7 * std::max(1.0, std::abs(x[j]));
        Vec4 xp = x;
        xp[j] += h;
        J.col(j) = (sys(xp) - fx) / h;
    }
    return J;
}

} // namespace

OracleResult oracle_interface_system(const RiemannData& data, double rho1, std::uint64_t seed,
                                     const OracleOptions& opts)
{
    OracleResult out;
    if (!std::isfinite(rho1) || rho1 <= 0.0) {
        out.message = "rho1 must be positive";
        return out;
    }
    const ReducedSystem sys{data.left.rho(), data.left.v2(), data.right.rho(), data.right.v2(), rho1};

    const double speed_scale =
        1.0 + std::max(std::abs(sys.ul), std::abs(sys.ur)) + 1.0 / std::min(sys.rl, sys.rr);
    const double scale = std::max({1.0, sys.rl * sys.ul * sys.ul, sys.rr * sys.ur * sys.ur, 1.0 / sys.rl,
                                   1.0 / sys.rr, 1.0 / rho1, rho1 * speed_scale * speed_scale});
    const double stop = opts.tolerance * scale;
    const double centre = 0.5 * (sys.ul + sys.ur);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double best = std::numeric_limits<double>::infinity();

    for (int start = 0; start < opts.restarts; ++start) {
        out.starts_used = start + 1;
        Vec4 x;
        x[0] = centre - speed_scale * (0.05 + 2.0 * unit(rng));
        x[1] = centre + speed_scale * (0.05 + 2.0 * unit(rng));
        x[2] = centre + speed_scale * (unit(rng) - 0.5);
        x[3] = speed_scale * speed_scale * unit(rng);

        Vec4 fx = sys(x);
        double norm = fx.norm();
        for (int it = 0; it < opts.max_iterations && norm > stop; ++it) {
            const Eigen::Matrix4d J = divided_difference_jacobian(sys, x, fx);
            const Vec4 step = J.fullPivLu().solve(-fx);
            if (!step.allFinite()) {
                break;
            }
            double lambda = 1.0;
            Vec4 trial = x + step;
            Vec4 ft = sys(trial);
            while (!(ft.norm() < norm) && lambda > 1e-10) {
                lambda *= opts.damping;
                trial = x + lambda * step;
                ft = sys(trial);
            }
            if (!(ft.norm() < norm)) {
                break;
            }
            x = trial;
            fx = ft;
            norm = ft.norm();
        }

        if (norm <= stop && x[0] < x[1]) {
            out.converged = true;
            out.nu_minus = x[0];
            out.nu_plus = x[1];
            out.beta = x[2];
            out.epsilon1 = x[3];
            out.residual_norm = norm;
            out.message = "converged";
            return out;
        }
        best = std::min(best, norm);
    }
    out.residual_norm = best;
    out.message = "no root with nu- < nu+ after " + std::to_string(opts.restarts) + " starts";
    return out;
}

} // namespace chaplygin
