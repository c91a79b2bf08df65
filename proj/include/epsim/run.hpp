// run.hpp — Command execution behind the CLI front end.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "epsim/analysis.hpp"

namespace eps {

struct RunManifest {
    enum class Command { Simulate, Sweep, Portrait, Reduce, Diagnose };

    Command command = Command::Simulate;
    std::string config_path;  // exactly one of config_path / preset_name
    std::string preset_name;
    std::string output_dir = ".";
    bool emit_svg = false;
    bool full_state = false;

    std::optional<std::uint64_t> seed_override;
    std::optional<double> t_obs_override;
    std::optional<int> n_states_override;
    std::optional<std::string> omega_grid;  // start:stop:steps[:log]
    std::optional<ModelKind> model_override;
};

// Executes the command and writes its artifacts under output_dir. Returns 0
// iff every requested artifact was produced and no sweep point errored.
// Error text goes to stderr.
int run(const RunManifest& manifest);

}  // namespace eps
