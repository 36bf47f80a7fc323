#include "json_io.hpp"

#include <cmath>
#include <string>

#include "chaplygin/errors.hpp"

namespace chaplygin::cli {
namespace {

double number(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
        throw InputError(std::string("subsolution file: missing numeric field '") + key + "'");
    }
    return j.at(key).get<double>();
}

const Json& object(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_object()) {
        throw InputError(std::string("subsolution file: missing object '") + key + "'");
    }
    return j.at(key);
}

Velocity velocity(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 2 ||
        !j.at(key)[0].is_number() || !j.at(key)[1].is_number()) {
        throw InputError(std::string("missing velocity pair '") + key + "'");
    }
    return {j.at(key)[0].get<double>(), j.at(key)[1].get<double>()};
}

Json to_json(const MiddleSector& m)
{
    return {{"rho", m.rho}, {"alpha", m.alpha}, {"beta", m.beta},
            {"gamma", m.U.gamma}, {"delta", m.U.delta}, {"C", m.C}};
}

MiddleSector middle_from_json(const Json& j)
{
    return {number(j, "rho"), number(j, "alpha"), number(j, "beta"), {number(j, "gamma"), number(j, "delta")},
            number(j, "C")};
}

Json triple(const std::array<double, 3>& a) { return Json::array({a[0], a[1], a[2]}); }

} // namespace

Json number_or_null(double x)
{
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

Json to_json(const State2D& s)
{
    return {{"rho", s.rho()}, {"v1", s.v1()}, {"v2", s.v2()}};
}

Json to_json(const RiemannData& d)
{
    return {{"rho_minus", d.left.rho()},
            {"v_minus", {d.left.v1(), d.left.v2()}},
            {"rho_plus", d.right.rho()},
            {"v_plus", {d.right.v1(), d.right.v2()}}};
}

RiemannData data_from_json(const Json& j)
{
    try {
        return {State2D(number(j, "rho_minus"), velocity(j, "v_minus")),
                State2D(number(j, "rho_plus"), velocity(j, "v_plus"))};
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
}

Json to_json(const RegimeTag& tag)
{
    Json j{{"regime", std::string(to_string(tag.kind))},
           {"thm2_window", tag.thm2_window},
           {"u", tag.u},
           {"delta_threshold", tag.delta_threshold},
           {"window_lower", tag.window_lower},
           {"family", nullptr}};
    if (tag.kind == RegimeKind::SingleContact) {
        j["family"] = static_cast<int>(tag.family);
    }
    return j;
}

Json to_json(const ClassicalSolution1D& sol)
{
    Json waves = Json::array();
    for (const ContactWave& w : sol.waves) {
        waves.push_back({{"speed", w.speed},
                         {"family", static_cast<int>(w.family)},
                         {"left", to_json(w.left)},
                         {"right", to_json(w.right)}});
    }
    return {{"waves", waves}};
}

Json to_json(const DeltaShockSolution& ds)
{
    return {{"omega_slope", ds.omega_slope}, {"sigma", ds.sigma}, {"xi", ds.xi}};
}

Json to_json(const DeltaEnergyMargin& m)
{
    return {{"frame", to_json(m.frame)},
            {"transverse_momentum_identity", m.transverse_momentum_identity},
            {"normal_momentum_identity", m.normal_momentum_identity},
            {"cubic_margin", m.cubic_margin},
            {"normal_part", m.normal_part},
            {"transverse_part", m.transverse_part},
            {"right_endpoint", m.right_endpoint},
            {"left_endpoint", m.left_endpoint},
            {"holds", m.holds(1e-10)}};
}

Json to_json(const FanSubsolution& s)
{
    return {{"nu_minus", s.nu_minus},
            {"nu0", s.nu0},
            {"nu_plus", s.nu_plus},
            {"state1", to_json(s.state1)},
            {"state2", to_json(s.state2)},
            {"outer", to_json(s.outer)},
            {"frame_velocity", s.frame_velocity},
            {"epsilon1", s.epsilon1},
            {"epsilon2", s.epsilon2}};
}

FanSubsolution subsolution_from_json(const Json& j)
{
    return FanSubsolution{
        .nu_minus = number(j, "nu_minus"),
        .nu0 = number(j, "nu0"),
        .nu_plus = number(j, "nu_plus"),
        .state1 = middle_from_json(object(j, "state1")),
        .state2 = middle_from_json(object(j, "state2")),
        .outer = data_from_json(object(j, "outer")),
        .frame_velocity = number(j, "frame_velocity"),
        .epsilon1 = number(j, "epsilon1"),
        .epsilon2 = number(j, "epsilon2"),
    };
}

Json to_json(const VerificationReport& r)
{
    Json residuals = Json::array();
    for (const InterfaceResiduals& x : r.residuals) {
        residuals.push_back({{"continuity", x.continuity}, {"momentum1", x.momentum1}, {"momentum2", x.momentum2}});
    }
    return {{"verdict", r.admissible() ? "ADMISSIBLE" : "NOT_ADMISSIBLE"},
            {"residuals", residuals},
            {"max_residual", r.max_residual},
            {"residual_tolerance", r.residual_tolerance},
            {"trace_margin", {r.trace_margin[0], r.trace_margin[1]}},
            {"determinant_margin", {r.determinant_margin[0], r.determinant_margin[1]}},
            {"admissibility", triple(r.admissibility)},
            {"lab_admissibility", triple(r.lab_admissibility)},
            {"admissibility_tolerance", r.admissibility_tolerance},
            {"order_ok", r.order_ok},
            {"densities_positive", r.densities_positive},
            {"energy_bounds_positive", r.energy_bounds_positive},
            {"outer_states_match", r.outer_states_match},
            {"failures", r.failures}};
}

Json to_json(const DissipationReport& r)
{
    Json j{{"verdict", r.verdict()}};
    if (r.delta_margin) {
        j["delta_margin"] = to_json(*r.delta_margin);
        return j;
    }
    Json rates = Json::array();
    for (const RateComparison& c : r.rates) {
        rates.push_back({{"t", c.window.t},
                         {"L", c.window.L},
                         {"classical", c.classical},
                         {"subsolution", c.subsolution},
                         {"difference", c.difference},
                         {"predicted", c.predicted}});
    }
    j["classical_d"] = r.classical_d;
    j["subsolution_d"] = r.subsolution_d;
    j["classical_sum"] = r.classical_sum;
    j["subsolution_sum"] = r.subsolution_sum;
    j["classical_dominated"] = r.classical_dominated;
    j["equality"] = r.equality;
    j["rates"] = rates;
    return j;
}

} // namespace chaplygin::cli
