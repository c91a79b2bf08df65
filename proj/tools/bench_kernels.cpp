// Compares the OpenMP ensemble kernels against the serial reference and
// checks that both produce bit-identical results.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "epsim/analysis.hpp"
#include "epsim/presets.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main() {
    const eps::Preset& preset = eps::get_preset("fig7");
    const eps::EnsembleSpec ensemble{preset.sweep.n_states, 7};
    const std::vector<double> grid =
        eps::make_grid(preset.sweep.omega_min, preset.sweep.omega_max,
                       preset.sweep.omega_points, preset.sweep.log_spaced);

    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("sweep: %zu couplings x %d states, T = %g\n", grid.size(),
                ensemble.n_states, preset.sweep.t_obs);

    const auto t0 = Clock::now();
    const auto serial = eps::sweep(preset.config, grid, ensemble, preset.sweep.t_obs,
                                   eps::kDefaultPoleEps, eps::ModelKind::Hermitian,
                                   eps::Exec::Serial);
    const auto t1 = Clock::now();
    const auto parallel = eps::sweep(preset.config, grid, ensemble, preset.sweep.t_obs,
                                     eps::kDefaultPoleEps, eps::ModelKind::Hermitian,
                                     eps::Exec::Parallel);
    const auto t2 = Clock::now();

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i)
        identical = serial[i].mean_I == parallel[i].mean_I &&
                    serial[i].var_D == parallel[i].var_D &&
                    serial[i].n_valid == parallel[i].n_valid;

    std::printf("serial:   %.3f s\n", seconds(t0, t1));
    std::printf("parallel: %.3f s  (speedup %.2fx)\n", seconds(t1, t2),
                seconds(t0, t1) / seconds(t1, t2));
    std::printf("bit-identical results: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
