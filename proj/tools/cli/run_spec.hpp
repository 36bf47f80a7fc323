#pragma once

// Parsed command line / run file for the chaplygin tool.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaplygin/state.hpp"
#include "chaplygin/subsolution.hpp"
#include "chaplygin/verify.hpp"

namespace chaplygin::cli {

enum class Format { Json, Csv };
enum class Command { Classify, Solve, Delta, Subsolve, Verify, Dissipation, Sweep };

std::string_view to_string(Command c);

struct ProfileSpec {
    double t = 1.0;
    int n = 400;
};

struct RunSpec {
    Command command = Command::Classify;

    std::optional<double> rho_minus;
    std::optional<Velocity> v_minus;
    std::optional<double> rho_plus;
    std::optional<Velocity> v_plus;

    std::optional<double> rho1;
    std::string eps2 = "half";
    double t = 1.0;
    std::vector<double> L{10.0};
    std::optional<ProfileSpec> profile;
    std::optional<double> rho1_min;
    std::optional<double> rho1_max;
    int steps = 10;
    std::uint64_t seed = kDefaultBoxSeed;
    std::size_t boxes = 50;
    std::optional<std::string> input;
    Format format = Format::Json;

    bool has_data() const { return rho_minus && v_minus && rho_plus && v_plus; }
    /// Throws InputError naming the missing flags.
    RiemannData data() const;
    ConstructionOptions construction() const;
};

/// Locale-independent, correctly rounded parse of a whole string.
double parse_number(std::string_view text, std::string_view what);
/// "a,b"
Velocity parse_velocity(std::string_view text, std::string_view what);
/// "half" | "equality" | "fraction:f"
Epsilon2Policy parse_epsilon2(std::string_view text);
/// "t=1:n=400"
ProfileSpec parse_profile(std::string_view text);
Format parse_format(std::string_view text);

} // namespace chaplygin::cli
