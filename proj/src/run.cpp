#include "epsim/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "epsim/config_file.hpp"
#include "epsim/csv.hpp"
#include "epsim/svg.hpp"

namespace eps {

namespace {

namespace fs = std::filesystem;

std::vector<double> parse_omega_grid(const std::string& text) {
    // start:stop:steps[:log]
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto next = text.find(':', pos);
        parts.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("omega grid must be start:stop:steps[:log]");
    const bool log_spaced = parts.size() == 4;
    if (log_spaced && parts[3] != "log")
        throw std::invalid_argument("omega grid: fourth field must be 'log'");
    return make_grid(std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2]),
                     log_spaced);
}

RunConfig resolve_config(const RunManifest& m) {
    const bool has_config = !m.config_path.empty();
    const bool has_preset = !m.preset_name.empty();
    if (has_config == has_preset)
        throw std::invalid_argument("provide exactly one of --config and --preset");
    RunConfig cfg = has_config ? load_config(m.config_path)
                               : run_config_from_preset(get_preset(m.preset_name));
    if (m.seed_override) cfg.ensemble.seed = *m.seed_override;
    if (m.t_obs_override) cfg.sweep.t_obs = *m.t_obs_override;
    if (m.n_states_override) {
        cfg.ensemble.n_states = *m.n_states_override;
        cfg.sweep.n_states = *m.n_states_override;
    } else if (cfg.sweep.n_states > 0) {
        cfg.ensemble.n_states = cfg.sweep.n_states;
    }
    return cfg;
}

Trajectory reduced_trajectory(const ReducedParams& params, double t_span,
                              double dt_sample, Complex a1_0, Complex a2_0) {
    const int n = static_cast<int>(std::floor(t_span / dt_sample + 1e-9));
    const PairKernel k = reduced_kernel(params, n * dt_sample, n);
    Trajectory traj;
    traj.times = k.times;
    k.evaluate(a1_0, a2_0, traj.a1, traj.a2);
    return traj;
}

std::vector<double> abs_of(const std::vector<Complex>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]);
    return out;
}

int cmd_simulate(const RunManifest& m, const RunConfig& cfg, const std::string& note) {
    const fs::path dir(m.output_dir);
    Trajectory traj;
    const Trajectory* overlay = nullptr;
    Trajectory reduced_traj;
    std::string tag = "hermitian";
    if (cfg.model == ModelKind::Hermitian) {
        const SpectralPropagator prop = diagonalize(build_generator(cfg.system));
        const FullState init = oscillator_state(cfg.system, 1.0, 1.0);
        traj = sample_trajectory(prop, init.amplitudes, cfg.system.t_max,
                                 cfg.system.dt_sample, m.full_state);
        traj.config_hash = cfg.system.hash();
        reduced_traj = reduced_trajectory(cfg.reduced, cfg.system.t_max,
                                          cfg.system.dt_sample, 1.0, 1.0);
        overlay = &reduced_traj;
    } else {
        const double span = cfg.sweep.t_obs > 0.0 ? cfg.sweep.t_obs : cfg.system.t_max;
        traj = reduced_trajectory(cfg.reduced, span, span / 2000.0, 1.0, 1.0);
        tag = "reduced";
    }
    write_trajectory_csv((dir / "trajectory.csv").string(), note, traj, tag, overlay);
    if (m.emit_svg) {
        PlotSpec plot;
        plot.title = "oscillator amplitudes";
        plot.x_label = "t [1/omega0]";
        plot.y_label = "|a|";
        plot.series.push_back({"|a1|", "royalblue", traj.times, abs_of(traj.a1)});
        plot.series.push_back({"|a2|", "crimson", traj.times, abs_of(traj.a2)});
        if (overlay) {
            plot.series.push_back({"|a1| reduced", "gray", overlay->times, abs_of(overlay->a1)});
            plot.series.push_back({"|a2| reduced", "darkgray", overlay->times, abs_of(overlay->a2)});
        }
        write_line_plot_svg((dir / "trajectory.svg").string(), plot);
    }
    return 0;
}

int cmd_sweep(const RunManifest& m, const RunConfig& cfg, const std::string& note) {
    const fs::path dir(m.output_dir);
    std::vector<double> grid;
    if (m.omega_grid) {
        grid = parse_omega_grid(*m.omega_grid);
    } else if (cfg.sweep.omega_max > cfg.sweep.omega_min && cfg.sweep.omega_points >= 1) {
        grid = make_grid(cfg.sweep.omega_min, cfg.sweep.omega_max, cfg.sweep.omega_points,
                         cfg.sweep.log_spaced);
    } else {
        throw std::invalid_argument("sweep: no coupling grid (config [sweep] or --omega-grid)");
    }
    if (!(cfg.sweep.t_obs > 0.0))
        throw std::invalid_argument("sweep: observation time T not set");

    const ModelKind model = m.model_override.value_or(cfg.model);
    std::vector<SweepResult> results;
    if (model == ModelKind::Hermitian && cfg.model == ModelKind::Hermitian)
        results = sweep(cfg.system, grid, cfg.ensemble, cfg.sweep.t_obs,
                        kDefaultPoleEps, ModelKind::Hermitian);
    else
        results = sweep(cfg.reduced, grid, cfg.ensemble, cfg.sweep.t_obs, kDefaultPoleEps);

    write_sweep_csv((dir / "sweep.csv").string(), note, results);

    int failures = 0;
    for (const SweepResult& r : results)
        if (!r.ok) {
            ++failures;
            std::cerr << "sweep point omega=" << r.coupling << " failed: " << r.error << "\n";
        }
    if (m.emit_svg) {
        PlotSpec plot;
        plot.title = "order parameter |D12| vs coupling";
        plot.x_label = "Omega [omega0]";
        plot.y_label = "|D12|";
        Series s{"|D12|", "royalblue", {}, {}};
        for (const SweepResult& r : results)
            if (r.ok) {
                s.x.push_back(r.coupling);
                s.y.push_back(r.abs_var);
            }
        plot.series.push_back(std::move(s));
        plot.v_markers.push_back(ep_coupling(cfg.reduced));  // finite-bath estimate
        plot.log_x = cfg.sweep.log_spaced;
        write_line_plot_svg((dir / "sweep.svg").string(), plot);
    }
    return failures == 0 ? 0 : 1;
}

int cmd_portrait(const RunManifest& m, const RunConfig& cfg, const std::string& note) {
    const fs::path dir(m.output_dir);
    PortraitSpec spec;
    // default seeds: a ring plus points near each fixed point
    for (int k = 0; k < 8; ++k) {
        const double th = 2.0 * std::numbers::pi * k / 8.0;
        spec.seeds.push_back({2.0 * std::cos(th), 2.0 * std::sin(th)});
    }
    try {
        for (const FixedPoint& fp : fixed_points(cfg.reduced))
            spec.seeds.push_back({fp.point.re + 0.1, fp.point.im + 0.1});
    } catch (const std::domain_error&) {
        // Omega = 0: degenerate, ring seeds only
    }
    const Portrait portrait = generate_portrait(spec, cfg.reduced);
    write_portrait_csv((dir / "portrait_field.csv").string(), note, portrait);
    write_ratio_trajectories_csv((dir / "portrait_trajectories.csv").string(), note,
                                 portrait.trajectories);
    if (m.emit_svg)
        write_portrait_svg((dir / "portrait.svg").string(), portrait, spec,
                           "ratio flow, Omega=" + format_double(cfg.reduced.coupling));
    return 0;
}

int cmd_reduce(const RunManifest& m, const RunConfig& cfg, const std::string& note) {
    const ReducedParams& p = cfg.reduced;
    const EigenPair2x2 eig = eigensystem(p);
    std::ostringstream report;
    report << "# " << note << "\n"
           << "gamma1 = " << format_double(p.gamma1) << "\n"
           << "gamma2 = " << format_double(p.gamma2) << "\n"
           << "omega_ep = " << format_double(ep_coupling(p)) << "\n"
           << "coupling = " << format_double(p.coupling) << "\n"
           << "regime = "
           << (std::abs(p.coupling) >= ep_coupling(p) ? "above-EP" : "below-EP") << "\n"
           << "lambda1 = " << format_double(eig.lambda1.real()) << " + "
           << format_double(eig.lambda1.imag()) << "i\n"
           << "lambda2 = " << format_double(eig.lambda2.real()) << " + "
           << format_double(eig.lambda2.imag()) << "i\n"
           << "h1 = (" << format_double(eig.h1(0).real()) << "+"
           << format_double(eig.h1(0).imag()) << "i, " << format_double(eig.h1(1).real())
           << "+" << format_double(eig.h1(1).imag()) << "i)\n"
           << "h2 = (" << format_double(eig.h2(0).real()) << "+"
           << format_double(eig.h2(0).imag()) << "i, " << format_double(eig.h2(1).real())
           << "+" << format_double(eig.h2(1).imag()) << "i)\n"
           << "coalescent = " << (eig.coalescent ? "true" : "false") << "\n";
    const std::string text = report.str();
    std::ofstream out(fs::path(m.output_dir) / "reduce.txt");
    if (!out) throw std::runtime_error("cannot open reduce.txt for writing");
    out << text;
    std::cout << text;
    return 0;
}

int cmd_diagnose(const RunManifest& m, const RunConfig& cfg, const std::string& note) {
    if (cfg.model != ModelKind::Hermitian)
        throw std::invalid_argument("diagnose: requires a Hermitian configuration");
    const SpectralPropagator prop = diagonalize(build_generator(cfg.system));
    const FullState init = oscillator_state(cfg.system, 1.0, 1.0);
    Trajectory traj = sample_trajectory(prop, init.amplitudes, cfg.system.t_max,
                                        cfg.system.dt_sample);
    const double window = cfg.system.reservoir1.n_modes > 0
                              ? return_time(cfg.system.reservoir1) / 4.0
                              : 0.0;
    const RevivalDiagnostics diag = revival_diagnostics(traj, 0.05, window);
    write_diagnostics_csv((std::filesystem::path(m.output_dir) / "diagnostics.csv").string(),
                          note, diag);
    std::cout << "sync_score = " << format_double(diag.sync_score) << "\n"
              << "peaks oscillator 1: " << diag.peaks1.size()
              << ", oscillator 2: " << diag.peaks2.size() << "\n";
    return 0;
}

}  // namespace

int run(const RunManifest& m) {
    try {
        const RunConfig cfg = resolve_config(m);
        fs::create_directories(m.output_dir);
        std::string note = describe(cfg);
        if (!m.preset_name.empty()) note += " preset=" + m.preset_name;
        switch (m.command) {
            case RunManifest::Command::Simulate: return cmd_simulate(m, cfg, note);
            case RunManifest::Command::Sweep: return cmd_sweep(m, cfg, note);
            case RunManifest::Command::Portrait: return cmd_portrait(m, cfg, note);
            case RunManifest::Command::Reduce: return cmd_reduce(m, cfg, note);
            case RunManifest::Command::Diagnose: return cmd_diagnose(m, cfg, note);
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace eps
