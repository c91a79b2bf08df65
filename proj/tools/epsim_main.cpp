// Command-line front end: simulate | sweep | portrait | reduce | diagnose.

#include <string>

#include <CLI11.hpp>

#include "epsim/presets.hpp"
#include "epsim/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Coupled-oscillator + finite-reservoir simulator and "
                 "exceptional-point transition analysis"};
    app.require_subcommand(1);

    eps::RunManifest manifest;
    std::string model_name;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--preset", manifest.preset_name,
                        "named parameter set (" + [] {
                            std::string s;
                            for (const auto& n : eps::preset_names())
                                s += (s.empty() ? "" : ", ") + n;
                            return s;
                        }() + ")");
        cmd->add_option("--config", manifest.config_path, "configuration file path");
        cmd->add_option("--out", manifest.output_dir, "output directory");
        cmd->add_option("--seed", [&](const CLI::results_t& res) {
            manifest.seed_override = std::stoull(res[0]);
            return true;
        }, "ensemble seed override");
        cmd->add_flag("--svg", manifest.emit_svg, "also emit SVG renderings");
        return cmd;
    };

    auto* simulate = add_common(app.add_subcommand("simulate", "propagate and export a trajectory"));
    simulate->add_flag("--full-state", manifest.full_state,
                       "include reservoir amplitudes in the CSV");

    auto* sweep = add_common(app.add_subcommand("sweep", "order-parameter sweep over coupling"));
    sweep->add_option("--T", [&](const CLI::results_t& res) {
        manifest.t_obs_override = std::stod(res[0]);
        return true;
    }, "observation time");
    sweep->add_option("--n-states", [&](const CLI::results_t& res) {
        manifest.n_states_override = std::stoi(res[0]);
        return true;
    }, "ensemble size");
    sweep->add_option("--omega-grid", [&](const CLI::results_t& res) {
        manifest.omega_grid = res[0];
        return true;
    }, "coupling grid start:stop:steps[:log]");
    sweep->add_option("--model", model_name, "hermitian | reduced")
        ->check(CLI::IsMember({"hermitian", "reduced"}));

    add_common(app.add_subcommand("portrait", "ratio-flow phase portrait"));
    add_common(app.add_subcommand("reduce", "effective non-Hermitian model report"));
    add_common(app.add_subcommand("diagnose", "revival and synchronization diagnostics"));

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    using Cmd = eps::RunManifest::Command;
    if (name == "simulate") manifest.command = Cmd::Simulate;
    else if (name == "sweep") manifest.command = Cmd::Sweep;
    else if (name == "portrait") manifest.command = Cmd::Portrait;
    else if (name == "reduce") manifest.command = Cmd::Reduce;
    else manifest.command = Cmd::Diagnose;

    if (!model_name.empty())
        manifest.model_override = model_name == "reduced" ? eps::ModelKind::Reduced
                                                          : eps::ModelKind::Hermitian;
    return eps::run(manifest);
}
