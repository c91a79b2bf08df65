#include "epsim/presets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eps {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
const double kSqrt10 = std::sqrt(10.0);

SystemConfig hermitian_config(int n1, int n2, double dw1, double dw2, double g1,
                              double g2, double omega, double t_max_in_tr1) {
    SystemConfig c;
    c.omega0 = 1.0;
    c.coupling = omega;
    c.reservoir1 = {n1, dw1, g1};
    c.reservoir2 = {n2, dw2, g2};
    const double tr1 = return_time(c.reservoir1);
    c.t_max = t_max_in_tr1 * tr1;
    c.dt_sample = tr1 / 200.0;
    return c;
}

SweepSpec ep_sweep(double omega_ep, double t_obs, int n_states) {
    SweepSpec s;
    s.t_obs = t_obs;
    s.n_states = n_states;
    s.omega_min = 0.1 * omega_ep;
    s.omega_max = 3.0 * omega_ep;
    s.omega_points = 30;
    return s;
}

std::vector<Preset> build_presets() {
    std::vector<Preset> out;

    // Two identical weakly coupled oscillators, 40-mode reservoirs with
    // incommensurate return times: collapse, revival, short-time crossover.
    {
        Preset p;
        p.name = "fig2";
        p.description = "collapse and revival, coupling far below the EP";
        p.config = hermitian_config(40, 40, 5e-3, 5e-3 / kSqrt2, 1.5e-3, 1.5e-3,
                                    1e-4, 2.5);
        p.reduced = reduce(p.config);
        p.sweep = ep_sweep(ep_coupling(p.reduced), 0.5 * return_time(p.config.reservoir1), 800);
        out.push_back(std::move(p));
    }

    // Asymmetric decay rates (gamma1 > gamma2); base system for the
    // order-parameter sweeps and the synchronization comparison.
    const SystemConfig asym_base = hermitian_config(40, 40, 5e-3, 5e-3 / kSqrt2,
                                                    2.0 * kSqrt10 * 1e-3,
                                                    kSqrt10 * 1e-3, 1e-4, 4.0);
    const double asym_ep = ep_coupling(reduce(asym_base));
    {
        Preset p;
        p.name = "fig5a";
        p.description = "order-parameter sweep, observation time ~0.5 T_R";
        p.config = asym_base;
        p.reduced = reduce(p.config);
        p.sweep = ep_sweep(asym_ep, 650.0, 800);
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig5b";
        p.description = "order-parameter sweep, observation time ~10 T_R";
        p.config = asym_base;
        p.reduced = reduce(p.config);
        p.sweep = ep_sweep(asym_ep, 1.3e4, 300);
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig6a";
        p.description = "unsynchronized revivals below the EP";
        p.config = asym_base;  // Omega = 1e-4 ~ 0.01 Omega_EP
        p.reduced = reduce(p.config);
        p.sweep = ep_sweep(asym_ep, 650.0, 800);
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig6b";
        p.description = "locked-in revivals above the EP";
        p.config = asym_base;
        p.config.coupling = 2e-2;  // ~2.12 Omega_EP
        p.reduced = reduce(p.config);
        p.sweep = ep_sweep(asym_ep, 650.0, 800);
        out.push_back(std::move(p));
    }

    // Ten degrees of freedom in total: four modes per reservoir.
    {
        Preset p;
        p.name = "fig7";
        p.description = "transition with four-mode reservoirs";
        p.config = hermitian_config(4, 4, 5e-2, 5e-2, 2.5e-2, 1.5e-2, 1e-3, 30.0);
        p.reduced = reduce(p.config);
        p.sweep = ep_sweep(ep_coupling(p.reduced),
                           30.0 * return_time(p.config.reservoir1), 500);
        out.push_back(std::move(p));
    }

    // Photonic circuit: two coupled cavities, one interacting with a
    // finite-length waveguide (single reservoir).
    {
        Preset p;
        p.name = "fig8";
        p.description = "two cavities, one finite waveguide reservoir";
        p.config = hermitian_config(40, 0, 5e-3, 5e-3, 2.0 * kSqrt10 * 1e-3, 0.0,
                                    1e-3, 10.0);
        p.reduced = reduce(p.config);
        p.sweep = ep_sweep(ep_coupling(p.reduced),
                           10.0 * return_time(p.config.reservoir1), 300);
        out.push_back(std::move(p));
    }

    // Reduced-model scenarios with gamma1 - gamma2 = 0.02 (Omega_EP = 0.01).
    const auto reduced_preset = [&](const std::string& name, double omega,
                                    const std::string& desc) {
        Preset p;
        p.name = name;
        p.description = desc;
        p.model = ModelKind::Reduced;
        p.reduced = {1.0, omega, 0.025, 0.005};
        p.sweep = ep_sweep(0.01, 100.0 / 0.02, 300);
        return p;
    };
    out.push_back(reduced_preset("fig4", 0.007, "reduced-model order-parameter sweep"));
    out.push_back(reduced_preset("fig3a", 0.007, "ratio phase portrait below the EP"));
    out.push_back(reduced_preset("fig3b", 0.010, "ratio phase portrait at the EP"));
    out.push_back(reduced_preset("fig3c", 0.015, "ratio phase portrait above the EP"));

    return out;
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

}  // namespace

const Preset& get_preset(const std::string& name) {
    for (const Preset& p : presets())
        if (p.name == name) return p;
    throw std::out_of_range("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const Preset& p : presets()) names.push_back(p.name);
    return names;
}

}  // namespace eps
