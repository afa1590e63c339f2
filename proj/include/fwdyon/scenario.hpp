#pragma once

#include "fwdyon/tbmt.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace fwdyon {

/// {particle:{m,e,etilde,ge,gte}, fields:{E,B}, init:{x,u,s}, run:{dt,steps}}
/// "particle.c" and "run.scheme" ("gauss4" or "rk4") are optional.
struct Scenario {
    DyonParticle particle;
    FieldConfig fields;
    PhaseState init;
    double dt = 0;
    long steps = 0;
    Scheme scheme = Scheme::gauss4;
};

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);

Trajectory run_scenario(const Scenario& s);

/// Header t,x,y,z,ux,uy,uz,sx,sy,sz,helicity; 17 significant digits.
void write_csv(std::ostream& os, const Trajectory& tr);

}  // namespace fwdyon
