#pragma once

// Seeded random Riemann data for property tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "chaplygin/riemann1d.hpp"
#include "chaplygin/state.hpp"
#include "chaplygin/subsolution.hpp"

namespace chaplygin::testgen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
    bool coin() { return uniform(0.0, 1.0) < 0.5; }
    std::uint64_t bits() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

/// Data with the given densities, normal velocity jump u, centre c2 and
/// transverse velocities.
inline RiemannData make_data(double rl, double rr, double u, double c2, double v1l, double v1r)
{
    return {State2D(rl, v1l, c2 + 0.5 * u), State2D(rr, v1r, c2 - 0.5 * u)};
}

/// u >= 1/rho- + 1/rho+; densities in (0.1, 10), u up to 5x the threshold.
inline RiemannData random_delta(Gen& g)
{
    const double rl = g.log_uniform(0.1, 10.0);
    const double rr = g.log_uniform(0.1, 10.0);
    const double u = (1.0 / rl + 1.0 / rr) * g.uniform(1.0, 5.0);
    return make_data(rl, rr, u, g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0));
}

/// max(1/rho-, 1/rho+) < u < 1/rho- + 1/rho+.
inline RiemannData random_window(Gen& g)
{
    const double rl = g.log_uniform(0.1, 10.0);
    const double rr = g.log_uniform(0.1, 10.0);
    const double lo = std::max(1.0 / rl, 1.0 / rr);
    const double hi = 1.0 / rl + 1.0 / rr;
    const double u = lo + (hi - lo) * g.uniform(0.01, 0.99);
    return make_data(rl, rr, u, g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0));
}

/// Same as random_delta but with rho- = rho+.
inline RiemannData random_equal_density_delta(Gen& g)
{
    const double r = g.log_uniform(0.1, 10.0);
    const double u = (2.0 / r) * g.uniform(1.0, 5.0);
    return make_data(r, r, u, g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0));
}

/// u strictly below the delta threshold (may be negative).
inline RiemannData random_two_contacts(Gen& g)
{
    const double rl = g.log_uniform(0.1, 10.0);
    const double rr = g.log_uniform(0.1, 10.0);
    const double hi = 1.0 / rl + 1.0 / rr;
    const double u = g.uniform(-3.0 * hi, 0.999 * hi);
    return make_data(rl, rr, u, g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0));
}

/// rho1 strictly inside the feasible window, away from its ends.
inline double random_rho1(Gen& g, const RiemannData& data)
{
    const FeasibleWindow w = feasible_window(data);
    const double upper = std::min(w.upper, 10.0 * w.lower);
    return w.lower + (upper - w.lower) * g.uniform(0.02, 0.98);
}

} // namespace chaplygin::testgen
