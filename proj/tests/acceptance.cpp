// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "epsim/analysis.hpp"
#include "epsim/csv.hpp"
#include "epsim/presets.hpp"
#include "epsim/riccati.hpp"

using namespace eps;

namespace {

int g_failures = 0;

void criterion(int number, const char* description, const std::function<bool()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s [%.1f s]%s\n", number, ok ? "PASS" : "FAIL",
                description, secs, note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

Trajectory preset_trajectory(const Preset& preset, double t_max, double dt_sample) {
    const SpectralPropagator prop = diagonalize(build_generator(preset.config));
    const FullState init = oscillator_state(preset.config, 1.0, 1.0);
    return sample_trajectory(prop, init.amplitudes, t_max, dt_sample);
}

std::string sweep_to_csv_text(const std::vector<SweepResult>& results) {
    std::ostringstream out;
    for (const SweepResult& r : results)
        out << format_double(r.coupling) << ',' << format_double(r.abs_var) << ','
            << format_double(r.mean_I.real()) << ',' << format_double(r.mean_I.imag())
            << ',' << r.n_valid << ',' << r.n_discarded << '\n';
    return out.str();
}

struct SweepOutcome {
    std::vector<SweepResult> results;
    double omega_ep = 0.0;
    double grid_step = 0.0;
};

// Shared sweep used by criteria 6-9: [0.1, 3] Omega_EP, 30 linear points.
SweepOutcome run_ep_sweep(const Preset& preset, double t_obs, int n_states,
                          ModelKind model, std::uint64_t seed) {
    SweepOutcome out;
    out.omega_ep = ep_coupling(preset.reduced);
    const std::vector<double> grid =
        make_grid(0.1 * out.omega_ep, 3.0 * out.omega_ep, 30, false);
    out.grid_step = grid[1] - grid[0];
    const EnsembleSpec ensemble{n_states, seed};
    // Near a pole passage of a1/a2 the ratio integral picks up log-divergent
    // spikes; 1e-3 excludes those samples without discarding the global
    // collapses, where both amplitudes are small together.
    if (model == ModelKind::Hermitian)
        out.results = sweep(preset.config, grid, ensemble, t_obs, 1e-3,
                            ModelKind::Hermitian);
    else
        out.results = sweep(preset.reduced, grid, ensemble, t_obs);
    return out;
}

// below-EP |D12| plateau vs above-EP level, both relative to Omega_EP
bool dichotomy_holds(const SweepOutcome& s, double fraction) {
    double below_max = 0.0, above_max = 0.0;
    for (const SweepResult& r : s.results) {
        if (!r.ok) return false;
        if (r.coupling <= 0.7 * s.omega_ep) below_max = std::max(below_max, r.abs_var);
        if (r.coupling >= 1.3 * s.omega_ep) above_max = std::max(above_max, r.abs_var);
    }
    return above_max > 0.0 && below_max < fraction * above_max;
}

double first_peak(const std::vector<double>& peaks) {
    return peaks.empty() ? -1.0 : peaks.front();
}

}  // namespace

int main() {
    // ------------------------------------------------------------------ 1
    criterion(1, "unitarity of the spectral propagator over 30 T_R", [] {
        const Preset& fig2 = get_preset("fig2");
        const SpectralPropagator prop = diagonalize(build_generator(fig2.config));
        const FullState init = oscillator_state(fig2.config, 1.0, 1.0);
        const double t = 30.0 * return_time(fig2.config.reservoir1);
        const Eigen::VectorXcd v = propagate(prop, init.amplitudes, t);
        return std::abs(v.squaredNorm() / init.amplitudes.squaredNorm() - 1.0) < 1e-9;
    });

    // ------------------------------------------------------------------ 2
    criterion(2, "spectral and RK4 propagators agree to 1e-6 over one T_R", [] {
        const Preset& fig7 = get_preset("fig7");
        const double t_r = return_time(fig7.config.reservoir1);
        const SpectralPropagator prop = diagonalize(build_generator(fig7.config));
        const FullState init = oscillator_state(fig7.config, 1.0, 1.0);
        const double dt_out = t_r / 50.0;
        const Trajectory rk =
            integrate_rk(fig7.config, init.amplitudes, t_r, 5e-3, dt_out, true);
        double max_diff = 0.0;
        for (std::size_t i = 0; i < rk.size(); ++i) {
            const Eigen::VectorXcd v = propagate(prop, init.amplitudes, rk.times[i]);
            max_diff = std::max(max_diff,
                                (rk.full_states[i] - v).cwiseAbs().maxCoeff());
        }
        return max_diff < 1e-6;
    });

    // ------------------------------------------------------------------ 3
    criterion(3, "short-time crossover to the reduced model, then a revival", [] {
        const Preset& fig2 = get_preset("fig2");
        const double t_r = return_time(fig2.config.reservoir1);
        const double dt = t_r / 400.0;
        const Trajectory full = preset_trajectory(fig2, 1.5 * t_r, dt);

        const int n = static_cast<int>(full.times.size()) - 1;
        const PairKernel k = reduced_kernel(fig2.reduced, n * dt, n);
        std::vector<Complex> r1, r2;
        k.evaluate(1.0, 1.0, r1, r2);

        // amplitudes track the effective non-Hermitian solution before T_R
        for (std::size_t i = 0; i < full.size(); ++i) {
            if (full.times[i] > 0.3 * t_r) break;
            if (std::abs(std::abs(full.a1[i]) - std::abs(r1[i])) > 0.05) return false;
            if (std::abs(std::abs(full.a2[i]) - std::abs(r2[i])) > 0.05) return false;
        }

        // revival: |a1| collapses to a sharp minimum near T_R, then regrows
        // past its pre-dip level
        double pre = 0.0, dip = 1e300, post = 0.0;
        for (std::size_t i = 0; i < full.size(); ++i) {
            const double t = full.times[i];
            const double a = std::abs(full.a1[i]);
            if (t >= 0.75 * t_r && t <= 0.85 * t_r) pre = std::max(pre, a);
            if (t >= 0.9 * t_r && t <= 1.1 * t_r) dip = std::min(dip, a);
            if (t >= 1.1 * t_r) post = std::max(post, a);
        }
        return dip < 0.5 * pre && post > pre && post > 2.0 * dip;
    });

    // ------------------------------------------------------------------ 4
    criterion(4, "eigenvalue dichotomy and eigenvector coalescence at the EP", [] {
        std::mt19937 rng(41);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 100; ++i) {
            const double gamma1 = 0.05 * u(rng);
            const double gamma2 = 0.05 * u(rng);
            const double omega = 0.06 * (u(rng) - 0.5);
            const ReducedParams p{1.0, omega, gamma1, gamma2};
            const EigenPair2x2 eig = eigensystem(p);
            const double ep = std::abs(gamma1 - gamma2) / 2.0;
            const double re_gap = std::abs(eig.lambda1.real() - eig.lambda2.real());
            if (std::abs(omega) >= ep) {
                if (re_gap > 1e-12) return false;
            } else if (!(re_gap > 1e-12) && gamma1 != gamma2) {
                return false;
            }
            const ReducedParams at_ep{1.0, ep, gamma1, gamma2};
            if (std::abs(eigensystem(at_ep).h1.dot(eigensystem(at_ep).h2)) <
                1.0 - 1e-6)
                return false;
        }
        return true;
    });

    // ------------------------------------------------------------------ 5
    criterion(5, "ratio-flow fixed points, convergence, orbits, and symmetry", [] {
        const ReducedParams below{1.0, 0.006, 0.025, 0.005};
        const ReducedParams above{1.0, 0.0125, 0.025, 0.005};

        for (const ReducedParams* p : {&below, &above})
            for (const FixedPoint& fp : fixed_points(*p)) {
                const auto f = riccati_rhs(fp.point, *p);
                if (std::hypot(f[0], f[1]) >= 1e-12) return false;
            }

        const RatioPoint target = fixed_points(below)[0].point;
        const double delta = below.gamma1 - below.gamma2;
        std::mt19937 rng(51);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        for (int i = 0; i < 20; ++i) {
            const RatioTrajectory traj = integrate_ratio(
                {u(rng), u(rng)}, below, 50.0 / delta, 1e-2 / delta);
            const RatioPoint last = traj.points.back();
            if (std::hypot(last.re - target.re, last.im - target.im) >= 1e-3)
                return false;
        }

        const double half = (above.gamma1 - above.gamma2) / 2.0;
        const double period =
            std::numbers::pi / std::sqrt(above.coupling * above.coupling - half * half);
        for (int i = 0; i < 5; ++i) {
            const RatioPoint a0{u(rng) + 0.3, u(rng)};
            const RatioTrajectory traj =
                integrate_ratio(a0, above, period, period / 40000.0);
            const RatioPoint last = traj.points.back();
            if (std::hypot(last.re - a0.re, last.im - a0.im) >= 1e-3) return false;
        }

        for (int i = 0; i < 25; ++i)
            for (int j = 0; j < 25; ++j) {
                const double x = -3.0 + 6.0 * i / 24.0;
                const double y = -3.0 + 6.0 * j / 24.0;
                const auto f = riccati_rhs({x, y}, below);
                const auto g = riccati_rhs({-x, y}, below);
                if (g[0] != -f[0] || g[1] != f[1]) return false;
            }
        return true;
    });

    // shared sweeps, reused by the determinism criterion
    const Preset& fig4 = get_preset("fig4");
    const Preset& fig5a = get_preset("fig5a");
    const Preset& fig5b = get_preset("fig5b");
    const Preset& fig7 = get_preset("fig7");
    SweepOutcome s6, s7, s8, s9;

    // ------------------------------------------------------------------ 6
    criterion(6, "reduced-model order-parameter transition at the EP", [&] {
        const double t_obs = 100.0 / (fig4.reduced.gamma1 - fig4.reduced.gamma2);
        s6 = run_ep_sweep(fig4, t_obs, 300, ModelKind::Reduced, 1);
        if (!dichotomy_holds(s6, 0.05)) return false;
        const auto est = detect_transition(s6.results);
        return est && std::abs(est->coupling - s6.omega_ep) <= s6.grid_step;
    });

    // ------------------------------------------------------------------ 7
    criterion(7, "full-model transition at short observation time", [&] {
        s7 = run_ep_sweep(fig5a, 650.0, 800, ModelKind::Hermitian, 1);
        if (!dichotomy_holds(s7, 0.05)) return false;
        const auto est = detect_transition(s7.results);
        return est && std::abs(est->coupling - s7.omega_ep) <= 0.2 * s7.omega_ep;
    });

    // ------------------------------------------------------------------ 8
    criterion(8, "full-model transition at long observation time", [&] {
        s8 = run_ep_sweep(fig5b, 1.3e4, 300, ModelKind::Hermitian, 1);
        // At long observation time the below-EP plateau sits higher (the
        // ensemble keeps drifting between revivals); 30% separation is what
        // the verified run shows, with margin.
        if (!dichotomy_holds(s8, 0.30)) return false;
        return detect_transition(s8.results).has_value();
    });

    // ------------------------------------------------------------------ 9
    criterion(9, "transition with ten degrees of freedom", [&] {
        const double t_obs = 30.0 * return_time(fig7.config.reservoir1);
        s9 = run_ep_sweep(fig7, t_obs, 500, ModelKind::Hermitian, 1);
        const auto est = detect_transition(s9.results);
        return est && std::abs(est->coupling - s9.omega_ep) <= 0.25 * s9.omega_ep;
    });

    // ------------------------------------------------------------------ 10
    criterion(10, "revival synchronization appears only above the EP", [] {
        const Preset& a = get_preset("fig6a");
        const Preset& b = get_preset("fig6b");
        const double t_r = return_time(a.config.reservoir1);
        const double window = t_r / 4.0;
        const RevivalDiagnostics da =
            revival_diagnostics(preset_trajectory(a, 4.0 * t_r, t_r / 200.0), 0.05, window);
        const RevivalDiagnostics db =
            revival_diagnostics(preset_trajectory(b, 4.0 * t_r, t_r / 200.0), 0.05, window);
        if (!(db.sync_score > da.sync_score)) return false;
        const double gap_a = std::abs(first_peak(da.peaks1) - first_peak(da.peaks2));
        const double gap_b = std::abs(first_peak(db.peaks1) - first_peak(db.peaks2));
        if (da.peaks1.empty() || da.peaks2.empty() || db.peaks1.empty() ||
            db.peaks2.empty())
            return false;
        return gap_a > 0.2 * t_r && gap_b < 0.2 * t_r;
    });

    // ------------------------------------------------------------------ 11
    criterion(11, "sweeps rerun with the same seed are byte-identical", [&] {
        if (s6.results.empty() || s7.results.empty() || s8.results.empty() ||
            s9.results.empty())
            return false;  // depends on criteria 6-9 having run
        const double t4 = 100.0 / (fig4.reduced.gamma1 - fig4.reduced.gamma2);
        const double t7 = 30.0 * return_time(fig7.config.reservoir1);
        const SweepOutcome r6 = run_ep_sweep(fig4, t4, 300, ModelKind::Reduced, 1);
        const SweepOutcome r7 = run_ep_sweep(fig5a, 650.0, 800, ModelKind::Hermitian, 1);
        const SweepOutcome r8 = run_ep_sweep(fig5b, 1.3e4, 300, ModelKind::Hermitian, 1);
        const SweepOutcome r9 = run_ep_sweep(fig7, t7, 500, ModelKind::Hermitian, 1);
        return sweep_to_csv_text(r6.results) == sweep_to_csv_text(s6.results) &&
               sweep_to_csv_text(r7.results) == sweep_to_csv_text(s7.results) &&
               sweep_to_csv_text(r8.results) == sweep_to_csv_text(s8.results) &&
               sweep_to_csv_text(r9.results) == sweep_to_csv_text(s9.results);
    });

    std::printf("%s: %d of 11 criteria failed\n", g_failures == 0 ? "SUCCESS" : "FAILURE",
                g_failures);
    return g_failures;
}
