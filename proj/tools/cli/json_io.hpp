#pragma once

// JSON encoding of data, solutions and reports. Numbers are written in the
// shortest form that reads back to the same double.

#include <json.hpp>

#include "chaplygin/delta_shock.hpp"
#include "chaplygin/riemann1d.hpp"
#include "chaplygin/state.hpp"
#include "chaplygin/subsolution.hpp"
#include "chaplygin/verify.hpp"

namespace chaplygin::cli {

using Json = nlohmann::json;

Json to_json(const RiemannData& data);
Json to_json(const State2D& s);
Json to_json(const RegimeTag& tag);
Json to_json(const ClassicalSolution1D& sol);
Json to_json(const DeltaShockSolution& ds);
Json to_json(const DeltaEnergyMargin& m);
Json to_json(const FanSubsolution& sub);
Json to_json(const VerificationReport& r);
Json to_json(const DissipationReport& r);

/// Inverse of to_json(RiemannData); throws InputError on malformed input.
RiemannData data_from_json(const Json& j);
/// Inverse of to_json(FanSubsolution); throws InputError on malformed input.
FanSubsolution subsolution_from_json(const Json& j);

/// Infinite values are written as null.
Json number_or_null(double x);

} // namespace chaplygin::cli
