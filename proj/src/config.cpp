#include "machzero/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "machzero/errors.hpp"

namespace machzero {

using nlohmann::json;

namespace {

double number(const json& j, const std::string& path)
{
    if (!j.is_number())
        throw ValidationError(path, "expected a number");
    return j.get<double>();
}

void read(const json& j, const char* key, double& out, const std::string& prefix = "")
{
    if (j.contains(key))
        out = number(j.at(key), prefix + key);
}

std::vector<double> numbers(const json& j, const std::string& path)
{
    if (!j.is_array())
        throw ValidationError(path, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

GammaLaw law(const json& j, const std::string& path)
{
    if (!j.is_object())
        throw ValidationError(path, "expected an object with k and gamma");
    for (const char* key : {"k", "gamma"})
        if (!j.contains(key))
            throw ValidationError(path + "." + key, "missing");
    const double k = number(j.at("k"), path + ".k");
    const double gamma = number(j.at("gamma"), path + ".gamma");
    try {
        return GammaLaw{k, gamma};
    } catch (const Error& e) {
        throw ValidationError(path, e.what());
    }
}

Field profile(const json& j)
{
    if (!j.is_object())
        throw ValidationError("initial", "expected an object with breaks and values");
    Field f;
    if (j.contains("breaks"))
        f.breaks = numbers(j.at("breaks"), "initial.breaks");
    if (!j.contains("values") || !j.at("values").is_array())
        throw ValidationError("initial.values", "expected an array of {p, v}");
    const json& vals = j.at("values");
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const std::string path = "initial.values[" + std::to_string(i) + "]";
        if (!vals[i].is_object() || !vals[i].contains("p") || !vals[i].contains("v"))
            throw ValidationError(path, "expected {p, v}");
        f.values.push_back(State{number(vals[i].at("p"), path + ".p"), number(vals[i].at("v"), path + ".v")});
    }
    return f;
}

} // namespace

Scenario scenario_from_json(const json& j, std::optional<double> kappa)
{
    if (!j.is_object())
        throw ValidationError("", "scenario must be a JSON object");
    static const char* known[] = {"m",   "p_o",        "gas",  "liquid_base", "p_bar", "kappa", "initial", "t_end",
                                  "eps", "wtv_budget", "seed", "snapshot_times", "trace_points"};
    for (const auto& item : j.items()) {
        if (std::find(std::begin(known), std::end(known), item.key()) == std::end(known))
            throw ValidationError(item.key(), "unknown key");
    }

    Scenario s;
    read(j, "m", s.m);
    read(j, "p_o", s.p_o);
    s.p_bar = s.p_o;
    read(j, "p_bar", s.p_bar);
    if (j.contains("gas"))
        s.gas = law(j.at("gas"), "gas");
    if (j.contains("liquid_base"))
        s.liquid_base = law(j.at("liquid_base"), "liquid_base");
    s.kappa = std::numeric_limits<double>::quiet_NaN();
    if (kappa)
        s.kappa = *kappa;
    else if (j.contains("kappa"))
        s.kappa = number(j.at("kappa"), "kappa");
    if (j.contains("initial"))
        s.initial = profile(j.at("initial"));
    else
        s.initial = Field::constant(State{s.p_o, 0.0});
    read(j, "t_end", s.t_end);
    read(j, "eps", s.eps);
    read(j, "wtv_budget", s.wtv_budget);
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            throw ValidationError("seed", "expected a non-negative integer");
        s.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("snapshot_times"))
        s.snapshot_times = numbers(j.at("snapshot_times"), "snapshot_times");
    if (j.contains("trace_points"))
        s.trace_points = numbers(j.at("trace_points"), "trace_points");

    if (std::isnan(s.kappa))
        throw ValidationError("kappa", "missing (give it in the scenario or with --kappa)");
    for (std::size_t i = 0; i < s.snapshot_times.size(); ++i)
        if (s.snapshot_times[i] < 0.0 || s.snapshot_times[i] > s.t_end)
            throw ValidationError("snapshot_times[" + std::to_string(i) + "]", "must lie in [0, t_end]");
    s.validate();
    return s;
}

Scenario parse_scenario(const std::string& path, std::optional<double> kappa)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return scenario_from_json(j, kappa);
}

json to_json(const Scenario& s)
{
    json values = json::array();
    for (const State& st : s.initial.values)
        values.push_back({{"p", st.p}, {"v", st.v}});
    return {{"m", s.m},
            {"p_o", s.p_o},
            {"gas", {{"k", s.gas.k()}, {"gamma", s.gas.gamma()}}},
            {"liquid_base", {{"k", s.liquid_base.k()}, {"gamma", s.liquid_base.gamma()}}},
            {"p_bar", s.p_bar},
            {"kappa", s.kappa},
            {"initial", {{"breaks", s.initial.breaks}, {"values", values}}},
            {"t_end", s.t_end},
            {"eps", s.eps},
            {"wtv_budget", s.wtv_budget},
            {"seed", s.seed},
            {"snapshot_times", s.snapshot_times},
            {"trace_points", s.trace_points}};
}

} // namespace machzero
