#include "fwdyon/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace fwdyon {

namespace {

Vec3d vec(const nlohmann::json& j, const char* where) {
    if (!j.is_array() || j.size() != 3) throw ScenarioError(std::string(where) + " must be a 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

nlohmann::json vec_json(const Vec3d& v) { return {v.x(), v.y(), v.z()}; }

const nlohmann::json& member(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw ScenarioError(std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& j) {
    try {
        Scenario s;
        const auto& p = member(j, "particle");
        s.particle.m = p.value("m", 1.0);
        s.particle.c = p.value("c", 1.0);
        s.particle.e = p.value("e", 1.0);
        s.particle.etilde = p.value("etilde", 0.0);
        s.particle.g_e = p.value("ge", 2.0);
        s.particle.g_et = p.value("gte", 2.0);
        if (!(s.particle.m > 0) || !(s.particle.c > 0)) throw ScenarioError("particle.m and particle.c must be positive");

        const auto& f = member(j, "fields");
        s.fields.E = f.contains("E") ? vec(f["E"], "fields.E") : Vec3d::Zero();
        s.fields.B = f.contains("B") ? vec(f["B"], "fields.B") : Vec3d::Zero();

        const auto& in = member(j, "init");
        s.init.x = in.contains("x") ? vec(in["x"], "init.x") : Vec3d::Zero();
        s.init.u = vec(member(in, "u"), "init.u");
        s.init.s = vec(member(in, "s"), "init.s");

        const auto& r = member(j, "run");
        s.dt = member(r, "dt").get<double>();
        s.steps = member(r, "steps").get<long>();
        std::string scheme = r.value("scheme", "gauss4");
        if (scheme == "gauss4")
            s.scheme = Scheme::gauss4;
        else if (scheme == "rk4")
            s.scheme = Scheme::rk4;
        else
            throw ScenarioError("run.scheme must be gauss4 or rk4");
        if (!(s.dt > 0)) throw ScenarioError("run.dt must be positive");
        if (s.steps < 0) throw ScenarioError("run.steps must be non-negative");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("malformed scenario: ") + e.what());
    }
}

nlohmann::json to_json(const Scenario& s) {
    return {{"particle",
             {{"m", s.particle.m},
              {"c", s.particle.c},
              {"e", s.particle.e},
              {"etilde", s.particle.etilde},
              {"ge", s.particle.g_e},
              {"gte", s.particle.g_et}}},
            {"fields", {{"E", vec_json(s.fields.E)}, {"B", vec_json(s.fields.B)}}},
            {"init", {{"x", vec_json(s.init.x)}, {"u", vec_json(s.init.u)}, {"s", vec_json(s.init.s)}}},
            {"run", {{"dt", s.dt}, {"steps", s.steps}, {"scheme", s.scheme == Scheme::rk4 ? "rk4" : "gauss4"}}}};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(path + ": " + e.what());
    }
    return scenario_from_json(j);
}

Trajectory run_scenario(const Scenario& s) { return integrate(s.init, s.fields, s.particle, s.dt, s.steps, s.scheme); }

void write_csv(std::ostream& os, const Trajectory& tr) {
    os << "t,x,y,z,ux,uy,uz,sx,sy,sz,helicity\n";
    char buf[32];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf << sep;
    };
    for (const auto& y : tr.samples) {
        put(y.t, ',');
        for (const Vec3d* v : {&y.x, &y.u, &y.s})
            for (int i = 0; i < 3; ++i) put((*v)[i], ',');
        put(y.helicity(), '\n');
    }
}

}  // namespace fwdyon
