// presets.hpp — Named parameter sets reproducing the published scenarios.

#pragma once

#include <string>
#include <vector>

#include "epsim/analysis.hpp"
#include "epsim/model.hpp"
#include "epsim/reduced.hpp"

namespace eps {

struct SweepSpec {
    double t_obs = 0.0;
    int n_states = 300;
    double omega_min = 0.0, omega_max = 0.0;
    int omega_points = 30;
    bool log_spaced = false;
};

struct Preset {
    std::string name;
    std::string description;
    ModelKind model = ModelKind::Hermitian;
    SystemConfig config;          // Hermitian presets
    ReducedParams reduced;        // Reduced presets (and derived rates otherwise)
    SweepSpec sweep;
};

const Preset& get_preset(const std::string& name);  // throws std::out_of_range
std::vector<std::string> preset_names();

}  // namespace eps
