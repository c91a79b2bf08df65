// config_file.hpp — INI-style configuration files mirroring SystemConfig,
// plus ensemble and sweep sections. Unknown keys are rejected with
// file:line diagnostics.

#pragma once

#include <string>

#include "epsim/presets.hpp"

namespace eps {

struct RunConfig {
    ModelKind model = ModelKind::Hermitian;
    SystemConfig system;
    ReducedParams reduced;
    EnsembleSpec ensemble{300, 1};
    SweepSpec sweep;
};

// Parse and validate; throws std::runtime_error carrying "path:line: reason"
// for parse and unknown-key errors, std::invalid_argument for invalid values.
RunConfig load_config(const std::string& path);

RunConfig run_config_from_preset(const Preset& preset);

// Canonical one-line rendering of the resolved configuration; embedded in
// every CSV header comment so outputs are self-describing.
std::string describe(const RunConfig& config);

}  // namespace eps
