#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "chaplygin/errors.hpp"
#include "json_io.hpp"

#ifndef CHAPLYGIN_VERSION
#define CHAPLYGIN_VERSION "0.0.0"
#endif

namespace chaplygin::cli {
namespace {

constexpr double kCheckTolerance = 1e-10;

std::string csv_number(double x)
{
    if (!std::isfinite(x)) {
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& out) const
    {
        const auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "," : "") << cells[i];
            }
            out << '\n';
        };
        line(header);
        for (const auto& r : rows) {
            line(r);
        }
    }
};

Json input_json(const RunSpec& spec)
{
    Json j{{"command", std::string(to_string(spec.command))}};
    if (spec.has_data()) {
        j.update(to_json(spec.data()));
    }
    j["eps2"] = spec.eps2;
    j["rho1"] = spec.rho1 ? Json(*spec.rho1) : Json(nullptr);
    j["t"] = spec.t;
    j["L"] = spec.L;
    j["seed"] = spec.seed;
    j["boxes"] = spec.boxes;
    if (spec.profile) {
        j["profile"] = {{"t", spec.profile->t}, {"n", spec.profile->n}};
    }
    if (spec.command == Command::Sweep) {
        j["rho1_min"] = spec.rho1_min ? Json(*spec.rho1_min) : Json(nullptr);
        j["rho1_max"] = spec.rho1_max ? Json(*spec.rho1_max) : Json(nullptr);
        j["steps"] = spec.steps;
    }
    if (spec.input) {
        j["input_file"] = *spec.input;
    }
    return j;
}

void emit(std::ostream& out, const RunSpec& spec, Json result, Json report)
{
    const Json doc{{"input", input_json(spec)},
                   {"result", std::move(result)},
                   {"report", std::move(report)},
                   {"version", CHAPLYGIN_VERSION}};
    out << doc.dump(2) << '\n';
}

double max_abs(const std::array<double, 3>& a)
{
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

// Subsolution from --input (a subsolve report or a bare subsolution object)
// together with the Riemann data it is checked against.
std::pair<RiemannData, FanSubsolution> load_subsolution(const RunSpec& spec)
{
    const Json doc = read_json_file(*spec.input);
    const Json* sub = &doc;
    if (doc.contains("result") && doc["result"].contains("subsolution")) {
        sub = &doc["result"]["subsolution"];
    }
    FanSubsolution s = subsolution_from_json(*sub);
    if (spec.has_data()) {
        return {spec.data(), s};
    }
    if (doc.contains("input") && doc["input"].contains("rho_minus")) {
        return {data_from_json(doc["input"]), s};
    }
    return {s.outer, s};
}

// ------------------------------------------------------------------ commands

int cmd_classify(const RunSpec& spec, std::ostream& out)
{
    const RegimeTag tag = classify(spec.data());
    if (spec.format == Format::Csv) {
        CsvTable t{{"regime", "thm2_window", "u", "delta_threshold", "window_lower"},
                   {{std::string(to_string(tag.kind)), tag.thm2_window ? "true" : "false", csv_number(tag.u),
                     csv_number(tag.delta_threshold), csv_number(tag.window_lower)}}};
        t.write(out);
    } else {
        emit(out, spec, to_json(tag), nullptr);
    }
    return kOk;
}

int cmd_solve(const RunSpec& spec, std::ostream& out)
{
    const RiemannData data = spec.data();
    const ClassicalSolution1D sol = solve_classical(data);

    double rh = 0.0;
    double energy = 0.0;
    for (const ContactWave& w : sol.waves) {
        rh = std::max(rh, max_abs(check_rh_jump(w.left, w.right, w.speed)));
        energy = std::max(energy, std::abs(energy_jump(w.left, w.right, w.speed)));
    }
    const double weak = weak_residual(field_from_classical(sol, data), spec.boxes, spec.seed);
    const bool ok = rh <= kCheckTolerance && energy <= kCheckTolerance && weak <= 1e-8;

    std::vector<double> xs;
    if (spec.profile) {
        double reach = 0.0;
        for (const ContactWave& w : sol.waves) {
            reach = std::max(reach, std::abs(w.speed));
        }
        const double half = spec.profile->t * (reach + 1.0);
        for (int i = 0; i < spec.profile->n; ++i) {
            xs.push_back(-half + 2.0 * half * i / (spec.profile->n - 1));
        }
    }

    if (spec.format == Format::Csv) {
        CsvTable t;
        if (spec.profile) {
            t.header = {"x2", "rho", "v1", "v2"};
            for (double x : xs) {
                const State2D s = sample_profile(sol, data, spec.profile->t, x);
                t.rows.push_back({csv_number(x), csv_number(s.rho()), csv_number(s.v1()), csv_number(s.v2())});
            }
        } else {
            t.header = {"speed", "family", "rho_left", "v1_left", "v2_left", "rho_right", "v1_right", "v2_right"};
            for (const ContactWave& w : sol.waves) {
                t.rows.push_back({csv_number(w.speed), std::to_string(static_cast<int>(w.family)),
                                  csv_number(w.left.rho()), csv_number(w.left.v1()), csv_number(w.left.v2()),
                                  csv_number(w.right.rho()), csv_number(w.right.v1()), csv_number(w.right.v2())});
            }
        }
        t.write(out);
    } else {
        Json result = to_json(sol);
        result["regime"] = std::string(to_string(classify(data).kind));
        if (spec.profile) {
            Json p{{"t", spec.profile->t}};
            std::vector<double> rho, v1, v2;
            for (double x : xs) {
                const State2D s = sample_profile(sol, data, spec.profile->t, x);
                rho.push_back(s.rho());
                v1.push_back(s.v1());
                v2.push_back(s.v2());
            }
            p["x2"] = xs;
            p["rho"] = rho;
            p["v1"] = v1;
            p["v2"] = v2;
            result["profile"] = p;
        }
        emit(out, spec, result,
             {{"max_rh_residual", rh}, {"max_energy_jump", energy}, {"weak_residual", weak},
              {"verdict", ok ? "VERIFIED" : "FAILED"}});
    }
    return ok ? kOk : kVerificationFailed;
}

Json delta_report(const RiemannData& data, const DeltaShockSolution& ds, const RunSpec& spec, bool& ok)
{
    const auto residual = generalized_rh_residual(data, ds);
    const DeltaEnergyMargin margin = delta_energy_margin(data, ds);
    const double weak = delta_weak_residual(data, ds, spec.boxes, spec.seed);
    ok = max_abs(residual) <= kCheckTolerance && margin.holds(kCheckTolerance) && weak <= 1e-8;
    return {{"generalized_rh_residual", {residual[0], residual[1], residual[2]}},
            {"energy_margin", to_json(margin)},
            {"weak_residual", weak},
            {"verdict", ok ? "ADMISSIBLE" : "NOT_ADMISSIBLE"}};
}

int cmd_delta(const RunSpec& spec, std::ostream& out)
{
    const RiemannData data = spec.data();
    const DeltaShockSolution ds = solve_delta(data);
    bool ok = false;
    const Json report = delta_report(data, ds, spec, ok);
    if (spec.format == Format::Csv) {
        CsvTable t{{"omega_slope", "sigma", "xi", "cubic_margin", "verdict"},
                   {{csv_number(ds.omega_slope), csv_number(ds.sigma), csv_number(ds.xi),
                     csv_number(report["energy_margin"]["cubic_margin"].get<double>()),
                     report["verdict"].get<std::string>()}}};
        t.write(out);
    } else {
        emit(out, spec, to_json(ds), report);
    }
    return ok ? kOk : kVerificationFailed;
}

Json fan_report(const RiemannData& data, const FanSubsolution& sub, const RunSpec& spec, bool& ok)
{
    const VerificationReport r = verify_fan(data, sub);
    Json report = to_json(r);
    double weak = std::numeric_limits<double>::infinity();
    try {
        weak = weak_residual(field_from_subsolution(sub, FieldFrame::Lab), spec.boxes, spec.seed);
    } catch (const std::exception&) {
        // invalid layouts are already named in the failures list
    }
    report["weak_residual"] = number_or_null(weak);
    ok = r.admissible() && weak <= 1e-8;
    if (r.admissible() && !ok) {
        report["failures"].push_back("weak residual above 1e-8");
        report["verdict"] = "NOT_ADMISSIBLE";
    }
    return report;
}

void fan_csv(const FanSubsolution& s, const std::string& verdict, std::ostream& out)
{
    CsvTable t{{"nu_minus", "nu0", "nu_plus", "rho1", "alpha1", "alpha2", "beta", "gamma1", "gamma2", "delta1",
                "delta2", "C1", "C2", "epsilon1", "epsilon2", "frame_velocity", "verdict"},
               {{csv_number(s.nu_minus), csv_number(s.nu0), csv_number(s.nu_plus), csv_number(s.state1.rho),
                 csv_number(s.state1.alpha), csv_number(s.state2.alpha), csv_number(s.state1.beta),
                 csv_number(s.state1.U.gamma), csv_number(s.state2.U.gamma), csv_number(s.state1.U.delta),
                 csv_number(s.state2.U.delta), csv_number(s.state1.C), csv_number(s.state2.C),
                 csv_number(s.epsilon1), csv_number(s.epsilon2), csv_number(s.frame_velocity), verdict}}};
    t.write(out);
}

int cmd_subsolve(const RunSpec& spec, std::ostream& out)
{
    const RiemannData data = spec.data();
    const ConstructionOptions opts = spec.construction();
    const FanSubsolution sub = construct(data, opts);

    bool ok = false;
    Json report = fan_report(data, sub, spec, ok);

    const double rho1 = sub.state1.rho;
    const OracleResult oracle = oracle_interface_system(data, rho1, spec.seed);
    Json oj{{"converged", oracle.converged}, {"message", oracle.message}};
    if (oracle.converged) {
        const InterfaceSpeeds nu = interface_speeds(data, rho1);
        const double dev = std::max({std::abs(oracle.nu_minus - nu.nu_minus), std::abs(oracle.nu_plus - nu.nu_plus),
                                     std::abs(oracle.beta - beta(data, rho1)),
                                     std::abs(oracle.epsilon1 - epsilon1(data, rho1))});
        oj["max_deviation"] = dev;
    }
    report["oracle"] = oj;

    if (spec.format == Format::Csv) {
        fan_csv(sub, report["verdict"].get<std::string>(), out);
    } else {
        const FeasibleWindow w = feasible_window(data);
        Json result{{"subsolution", to_json(sub)},
                    {"rho1", rho1},
                    {"eps2_policy", opts.epsilon2.name()},
                    {"window", {{"lower", w.lower},
                                {"upper", number_or_null(w.upper)},
                                {"upper_infinite", std::isinf(w.upper)}}}};
        emit(out, spec, result, report);
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_verify(const RunSpec& spec, std::ostream& out, std::ostream& err)
{
    Json result;
    Json report;
    bool ok = false;
    if (spec.input) {
        const auto [data, sub] = load_subsolution(spec);
        report = fan_report(data, sub, spec, ok);
        result = {{"kind", "fan_subsolution"}, {"subsolution", to_json(sub)}, {"data", to_json(data)}};
    } else {
        const RiemannData data = spec.data();
        if (classify(data).kind == RegimeKind::DeltaShock) {
            const DeltaShockSolution ds = solve_delta(data);
            report = delta_report(data, ds, spec, ok);
            result = {{"kind", "delta_shock"}, {"solution", to_json(ds)}};
        } else {
            const ClassicalSolution1D sol = solve_classical(data);
            double rh = 0.0;
            double energy = 0.0;
            for (const ContactWave& w : sol.waves) {
                rh = std::max(rh, max_abs(check_rh_jump(w.left, w.right, w.speed)));
                energy = std::max(energy, std::abs(energy_jump(w.left, w.right, w.speed)));
            }
            const double weak = weak_residual(field_from_classical(sol, data), spec.boxes, spec.seed);
            ok = rh <= kCheckTolerance && energy <= kCheckTolerance && weak <= 1e-8;
            report = {{"max_rh_residual", rh}, {"max_energy_jump", energy}, {"weak_residual", weak},
                      {"verdict", ok ? "ADMISSIBLE" : "NOT_ADMISSIBLE"}};
            result = {{"kind", "classical"}, {"solution", to_json(sol)}};
        }
    }
    if (!ok && report.contains("failures")) {
        for (const auto& f : report["failures"]) {
            err << "verify: " << f.get<std::string>() << '\n';
        }
    }
    if (spec.format == Format::Csv) {
        CsvTable t{{"kind", "verdict"}, {{result["kind"].get<std::string>(), report["verdict"].get<std::string>()}}};
        t.write(out);
    } else {
        emit(out, spec, result, report);
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_dissipation(const RunSpec& spec, std::ostream& out)
{
    std::optional<std::pair<RiemannData, FanSubsolution>> loaded;
    if (spec.input) {
        loaded = load_subsolution(spec);
    }
    const RiemannData data = loaded ? loaded->first : spec.data();
    const FanSubsolution sub = loaded ? loaded->second : construct(data, spec.construction());

    std::vector<RateWindow> windows;
    for (double L : spec.L) {
        windows.push_back({spec.t, L});
    }
    const DissipationReport r = compare_admissibility(data, sub, windows);

    if (spec.format == Format::Csv) {
        if (r.delta_margin) {
            const DeltaEnergyMargin& m = *r.delta_margin;
            CsvTable{{"cubic_margin", "left_endpoint", "right_endpoint", "verdict"},
                     {{csv_number(m.cubic_margin), csv_number(m.left_endpoint), csv_number(m.right_endpoint),
                       r.verdict()}}}
                .write(out);
            return kOk;
        }
        CsvTable t{{"t", "L", "classical", "subsolution", "difference", "predicted", "verdict"}, {}};
        for (const RateComparison& c : r.rates) {
            t.rows.push_back({csv_number(c.window.t), csv_number(c.window.L), csv_number(c.classical),
                              csv_number(c.subsolution), csv_number(c.difference), csv_number(c.predicted),
                              r.verdict()});
        }
        t.write(out);
    } else {
        emit(out, spec, to_json(r), {{"frame_velocity", sub.frame_velocity}});
    }
    return kOk;
}

int cmd_sweep(const RunSpec& spec, std::ostream& out)
{
    const RiemannData data = spec.data();
    if (!spec.rho1_min || !spec.rho1_max) {
        throw InputError("sweep needs --rho1-min and --rho1-max");
    }
    if (spec.steps < 1 || !(*spec.rho1_min <= *spec.rho1_max)) {
        throw InputError("sweep needs --steps >= 1 and --rho1-min <= --rho1-max");
    }
    const FeasibleWindow window = feasible_window(data); // throws RegimeError outside both regimes
    const ConstructionOptions base = spec.construction();

    std::vector<std::map<std::string, Json>> rows;
    for (int i = 0; i < spec.steps; ++i) {
        const double rho1 = spec.steps == 1 ? *spec.rho1_min
                                            : *spec.rho1_min + (*spec.rho1_max - *spec.rho1_min) * i / (spec.steps - 1);
        std::map<std::string, Json> row{{"rho1", rho1},
                                        {"in_window", window.contains(rho1)},
                                        {"epsilon1", nullptr},
                                        {"nu_minus", nullptr},
                                        {"nu_plus", nullptr},
                                        {"beta", nullptr},
                                        {"epsilon2_bound", nullptr},
                                        {"feasible", false},
                                        {"verdict", "infeasible"}};
        try {
            const InterfaceSpeeds nu = interface_speeds(data, rho1);
            const double b = beta(data, rho1);
            const double e1 = epsilon1(data, rho1);
            row["nu_minus"] = nu.nu_minus;
            row["nu_plus"] = nu.nu_plus;
            row["beta"] = b;
            row["epsilon1"] = e1;
            const RiemannData shifted = galilean_shift(data, {0.0, -b});
            row["epsilon2_bound"] = epsilon2_bound(shifted, rho1, epsilon1(shifted, rho1));
            row["feasible"] = window.contains(rho1);
        } catch (const DomainError&) {
        } catch (const InfeasibleError&) {
        }
        if (row["feasible"].get<bool>()) {
            ConstructionOptions opts = base;
            opts.rho1 = rho1;
            try {
                row["verdict"] = verify_fan(data, construct(data, opts)).admissible() ? "ADMISSIBLE" : "NOT_ADMISSIBLE";
            } catch (const InputError& e) {
                row["verdict"] = std::string("error: ") + e.what();
            }
        }
        rows.push_back(std::move(row));
    }

    if (spec.format == Format::Csv) {
        CsvTable t{{"rho1", "in_window", "epsilon1", "nu_minus", "nu_plus", "beta", "epsilon2_bound", "feasible",
                    "verdict"},
                   {}};
        for (auto& row : rows) {
            std::vector<std::string> cells;
            for (const std::string& key : t.header) {
                const Json& v = row[key];
                if (v.is_null()) {
                    cells.emplace_back("");
                } else if (v.is_boolean()) {
                    cells.emplace_back(v.get<bool>() ? "true" : "false");
                } else if (v.is_number()) {
                    cells.push_back(csv_number(v.get<double>()));
                } else {
                    cells.push_back(v.get<std::string>());
                }
            }
            t.rows.push_back(std::move(cells));
        }
        t.write(out);
    } else {
        Json arr = Json::array();
        for (auto& row : rows) {
            arr.push_back(Json(row));
        }
        emit(out, spec, {{"rows", arr},
                         {"window", {{"lower", window.lower},
                                     {"upper", number_or_null(window.upper)},
                                     {"upper_infinite", std::isinf(window.upper)}}}},
             nullptr);
    }
    return kOk;
}

std::string usage(const CLI::App& app)
{
    return app.get_formatter()->make_help(&app, "chaplygin", CLI::AppFormatMode::Normal);
}

} // namespace

int execute(const RunSpec& spec, std::ostream& out, std::ostream& err)
{
    try {
        switch (spec.command) {
        case Command::Classify:
            return cmd_classify(spec, out);
        case Command::Solve:
            return cmd_solve(spec, out);
        case Command::Delta:
            return cmd_delta(spec, out);
        case Command::Subsolve:
            return cmd_subsolve(spec, out);
        case Command::Verify:
            return cmd_verify(spec, out, err);
        case Command::Dissipation:
            return cmd_dissipation(spec, out);
        case Command::Sweep:
            return cmd_sweep(spec, out);
        }
    } catch (const RegimeError& e) {
        err << "regime error [" << e.regime() << "]: " << e.what() << '\n';
        return kRegime;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kRegime;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Riemann problems for the two-dimensional isentropic Chaplygin gas", "chaplygin"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--run", "", "Run file with one 'key = value' per line");
    app.allow_config_extras(CLI::config_extras_mode::error);
    // Values such as "0,2" are passed whole; the comma is not a list separator.
    app.get_config_formatter_base()->arrayDelimiter(';');

    std::map<std::string, std::string> text;
    const auto value = [&](const std::string& name, const std::string& help) {
        return app.add_option("--" + name, text[name], help);
    };
    value("rho-minus", "Density left of the jump");
    value("v-minus", "Velocity 'v1,v2' left of the jump");
    value("rho-plus", "Density right of the jump");
    value("v-plus", "Velocity 'v1,v2' right of the jump");
    value("rho1", "Middle density of the fan subsolution");
    value("eps2", "half | equality | fraction:f")->default_str("half");
    value("t", "Time for dissipation rates")->default_str("1");
    value("L", "Box half-widths, comma separated")->default_str("10");
    value("profile", "Profile sampling t=<time>:n=<count> (solve)");
    value("rho1-min", "Lower end of the rho1 sweep");
    value("rho1-max", "Upper end of the rho1 sweep");
    value("steps", "Number of sweep rows")->default_str("10");
    value("seed", "Seed for quadrature boxes and oracle starts");
    value("boxes", "Number of weak-form test functions")->default_str("50");
    value("input", "Subsolution JSON file (verify, dissipation)");
    value("format", "json | csv")->envname("CHAPLYGIN_FORMAT")->default_str("json");

    const std::vector<std::pair<Command, const char*>> commands{
        {Command::Classify, "Classify the Riemann data"},
        {Command::Solve, "Classical contact-discontinuity fan"},
        {Command::Delta, "Delta-shock solution and its energy margin"},
        {Command::Subsolve, "Construct and verify an admissible fan subsolution"},
        {Command::Verify, "Verify a subsolution file, or the solution for the data"},
        {Command::Dissipation, "Compare energy dissipation of subsolution and classical fan"},
        {Command::Sweep, "Tabulate the construction over a rho1 grid"}};
    std::map<const CLI::App*, Command> by_app;
    for (const auto& [cmd, help] : commands) {
        by_app[app.add_subcommand(std::string(to_string(cmd)), help)] = cmd;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << usage(app);
        return kUsage;
    }

    RunSpec spec;
    try {
        for (const auto& [sub, cmd] : by_app) {
            if (sub->parsed()) {
                spec.command = cmd;
            }
        }
        const auto given = [&](const std::string& name) { return app.count("--" + name) > 0 || !text[name].empty(); };
        if (given("rho-minus")) spec.rho_minus = parse_number(text["rho-minus"], "--rho-minus");
        if (given("v-minus")) spec.v_minus = parse_velocity(text["v-minus"], "--v-minus");
        if (given("rho-plus")) spec.rho_plus = parse_number(text["rho-plus"], "--rho-plus");
        if (given("v-plus")) spec.v_plus = parse_velocity(text["v-plus"], "--v-plus");
        if (given("rho1")) spec.rho1 = parse_number(text["rho1"], "--rho1");
        if (given("eps2")) spec.eps2 = text["eps2"];
        parse_epsilon2(spec.eps2);
        if (given("t")) spec.t = parse_number(text["t"], "--t");
        if (given("L")) {
            spec.L.clear();
            std::stringstream ss(text["L"]);
            for (std::string item; std::getline(ss, item, ',');) {
                spec.L.push_back(parse_number(item, "--L"));
            }
        }
        if (given("profile")) spec.profile = parse_profile(text["profile"]);
        if (given("rho1-min")) spec.rho1_min = parse_number(text["rho1-min"], "--rho1-min");
        if (given("rho1-max")) spec.rho1_max = parse_number(text["rho1-max"], "--rho1-max");
        if (given("steps")) {
            const double s = parse_number(text["steps"], "--steps");
            if (s != std::floor(s) || s < 1 || s > 1e6) {
                throw InputError("--steps must be an integer in [1, 1e6]");
            }
            spec.steps = static_cast<int>(s);
        }
        if (given("seed")) {
            const std::string& s = text["seed"];
            const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), spec.seed);
            if (ec != std::errc() || p != s.data() + s.size()) {
                throw InputError("--seed must be a non-negative integer");
            }
        }
        if (given("boxes")) {
            const double b = parse_number(text["boxes"], "--boxes");
            if (b != std::floor(b) || b < 1 || b > 1e6) {
                throw InputError("--boxes must be an integer in [1, 1e6]");
            }
            spec.boxes = static_cast<std::size_t>(b);
        }
        if (given("input")) spec.input = text["input"];
        if (given("format")) spec.format = parse_format(text["format"]);

        const bool needs_data = !(spec.input && (spec.command == Command::Verify || spec.command == Command::Dissipation));
        if (needs_data) {
            spec.data();
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n\n" << usage(app);
        return kUsage;
    }
    return execute(spec, out, err);
}

} // namespace chaplygin::cli
