#include "epsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace eps {

namespace {

constexpr double kMaxExcludedFraction = 0.10;

// Default sample count: resolve the shortest return time with ~200 samples,
// bounded so long horizons stay tractable.
int default_samples(const SystemConfig& config, double t_obs) {
    double dt = t_obs / 2000.0;
    const auto consider = [&](const ReservoirSpec& r) {
        if (r.n_modes > 0) dt = std::min(dt, return_time(r) / 200.0);
    };
    consider(config.reservoir1);
    consider(config.reservoir2);
    return std::clamp(static_cast<int>(std::ceil(t_obs / dt)), 1000, 8000);
}

SweepResult reduce_ensemble(const std::vector<RatioIntegral>& integrals,
                            double coupling, double t_obs, std::uint64_t seed) {
    SweepResult out;
    out.coupling = coupling;
    out.t_obs = t_obs;
    out.seed = seed;
    Complex sum{}, sum_sq{};
    for (const RatioIntegral& r : integrals) {  // fixed index order: deterministic
        if (!r.valid) {
            ++out.n_discarded;
            continue;
        }
        ++out.n_valid;
        sum += r.value;
        sum_sq += r.value * r.value;
    }
    if (out.n_valid < 2)
        throw std::runtime_error("order_parameter: only " + std::to_string(out.n_valid) +
                                 " valid ensemble members (" + std::to_string(out.n_discarded) +
                                 " discarded by the pole guard)");
    out.mean_I = sum / static_cast<double>(out.n_valid);
    out.var_D = sum_sq / static_cast<double>(out.n_valid) - out.mean_I * out.mean_I;
    out.abs_var = std::abs(out.var_D);
    return out;
}

SweepResult kernel_order_parameter(const PairKernel& kernel,
                                   const std::vector<std::pair<Complex, Complex>>& pairs,
                                   double coupling, double t_obs, double pole_eps,
                                   std::uint64_t seed, Exec exec) {
    const int n = static_cast<int>(pairs.size());
    std::vector<RatioIntegral> integrals(n);
#pragma omp parallel if (exec == Exec::Parallel)
    {
        std::vector<Complex> a1buf, a2buf;
#pragma omp for schedule(static)
        for (int j = 0; j < n; ++j) {
            kernel.evaluate(pairs[j].first, pairs[j].second, a1buf, a2buf);
            integrals[j] = ratio_integral(kernel.times, a1buf, a2buf, t_obs, pole_eps);
        }
    }
    return reduce_ensemble(integrals, coupling, t_obs, seed);
}

std::vector<double> moving_average(const std::vector<double>& x, int window) {
    const int n = static_cast<int>(x.size());
    const int half = std::max(window, 1) / 2;
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - half);
        const int hi = std::min(n - 1, i + half);
        double s = 0.0;
        for (int j = lo; j <= hi; ++j) s += x[j];
        out[i] = s / (hi - lo + 1);
    }
    return out;
}

std::vector<double> find_revival_peaks(const std::vector<double>& env,
                                       const std::vector<double>& times,
                                       double floor_level) {
    std::vector<double> peaks;
    const int n = static_cast<int>(env.size());
    int segment_start = 0;
    for (int i = 1; i + 1 < n; ++i) {
        if (!(env[i] >= env[i - 1] && env[i] > env[i + 1])) continue;
        if (env[i] < floor_level) continue;
        // require a preceding collapse below half the peak height
        double dip = env[segment_start];
        for (int j = segment_start; j <= i; ++j) dip = std::min(dip, env[j]);
        if (dip > 0.5 * env[i]) continue;
        peaks.push_back(times[i]);
        segment_start = i;
    }
    return peaks;
}

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

void EnsembleSpec::validate() const {
    if (n_states < 2)
        throw std::invalid_argument("ensemble: n_states must be >= 2");
}

std::vector<std::pair<Complex, Complex>> sample_initial_pairs(const EnsembleSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss;
    std::vector<std::pair<Complex, Complex>> pairs;
    pairs.reserve(spec.n_states);
    for (int i = 0; i < spec.n_states; ++i) {
        Complex a1(gauss(rng), gauss(rng));
        Complex a2(gauss(rng), gauss(rng));
        const double norm = std::sqrt(std::norm(a1) + std::norm(a2));
        if (norm == 0.0) {
            a1 = 1.0;  // measure-zero draw; keep the member well defined
            pairs.emplace_back(a1, a2);
            continue;
        }
        pairs.emplace_back(a1 / norm, a2 / norm);
    }
    return pairs;
}

std::vector<FullState> sample_initial_states(const EnsembleSpec& spec,
                                             const SystemConfig& config) {
    config.validate();
    std::vector<FullState> states;
    for (const auto& [a1, a2] : sample_initial_pairs(spec))
        states.push_back(oscillator_state(config, a1, a2));
    return states;
}

RatioIntegral ratio_integral(const std::vector<double>& times,
                             const std::vector<Complex>& a1,
                             const std::vector<Complex>& a2,
                             double t_end, double pole_eps) {
    if (times.size() < 2 || times.size() != a1.size() || times.size() != a2.size())
        throw std::invalid_argument("ratio_integral: need >= 2 aligned samples");
    if (!(pole_eps > 0.0))
        throw std::invalid_argument("ratio_integral: pole_eps must be > 0");
    if (t_end > times.back() * (1.0 + 1e-9))
        throw std::invalid_argument("ratio_integral: t_end exceeds trajectory duration");

    std::size_t last = times.size() - 1;
    while (last > 0 && times[last] > t_end * (1.0 + 1e-9)) --last;

    Complex acc{};
    double included = 0.0;
    const double span = times[last] - times[0];
    for (std::size_t i = 0; i < last; ++i) {
        if (std::abs(a2[i]) < pole_eps || std::abs(a2[i + 1]) < pole_eps) continue;
        const double dt = times[i + 1] - times[i];
        acc += 0.5 * dt * (a1[i] / a2[i] + a1[i + 1] / a2[i + 1]);
        included += dt;
    }
    RatioIntegral out;
    out.excluded_measure = span - included;
    if (included > 0.0 && out.excluded_measure <= kMaxExcludedFraction * span) {
        out.value = acc / included;
        out.valid = true;
    }
    return out;
}

RatioIntegral ratio_integral(const Trajectory& traj, double t_end, double pole_eps) {
    return ratio_integral(traj.times, traj.a1, traj.a2, t_end, pole_eps);
}

SweepResult order_parameter(const SystemConfig& config, const EnsembleSpec& ensemble,
                            double t_obs, double pole_eps, ModelKind model,
                            Exec exec, int n_samples) {
    config.validate();
    if (model == ModelKind::Reduced)
        return order_parameter(reduce(config), ensemble, t_obs, pole_eps, exec, n_samples);
    const int n = n_samples > 0 ? n_samples : default_samples(config, t_obs);
    const SpectralPropagator prop = diagonalize(build_generator(config));
    const PairKernel kernel = oscillator_kernel(prop, t_obs, n);
    return kernel_order_parameter(kernel, sample_initial_pairs(ensemble),
                                  config.coupling, t_obs, pole_eps, ensemble.seed, exec);
}

SweepResult order_parameter(const ReducedParams& params, const EnsembleSpec& ensemble,
                            double t_obs, double pole_eps, Exec exec, int n_samples) {
    params.validate();
    const int n = n_samples > 0 ? n_samples : 2000;
    PairKernel kernel = reduced_kernel(params, t_obs, n);
    // Remove the slowest common decay e^{Re l1 t}. Both amplitudes are scaled
    // by the same real factor, so the ratio integral is unchanged, but |a2|
    // stays O(1) and the absolute pole guard keeps its meaning (it fires on
    // genuine pole passages, not on the overall decay of the reduced model).
    const double rate = -eigensystem(params).lambda1.real();
    for (std::size_t i = 0; i < kernel.times.size(); ++i) {
        const double scale = std::exp(rate * kernel.times[i]);
        kernel.p[i] *= scale;
        kernel.q[i] *= scale;
        kernel.r[i] *= scale;
    }
    return kernel_order_parameter(kernel, sample_initial_pairs(ensemble),
                                  params.coupling, t_obs, pole_eps, ensemble.seed, exec);
}

namespace {

template <typename Params, typename Runner>
std::vector<SweepResult> sweep_impl(Params base, const std::vector<double>& omega_grid,
                                    const EnsembleSpec& ensemble, double t_obs,
                                    std::uint64_t seed, Runner run) {
    if (omega_grid.empty())
        throw std::invalid_argument("sweep: empty coupling grid");
    if (!std::is_sorted(omega_grid.begin(), omega_grid.end()))
        throw std::invalid_argument("sweep: coupling grid must be ascending");
    std::vector<SweepResult> results;
    results.reserve(omega_grid.size());
    for (double omega : omega_grid) {
        base.coupling = omega;
        try {
            results.push_back(run(base));
        } catch (const std::exception& e) {
            SweepResult failed;
            failed.coupling = omega;
            failed.t_obs = t_obs;
            failed.seed = seed;
            failed.n_discarded = ensemble.n_states;
            failed.ok = false;
            failed.error = e.what();
            results.push_back(std::move(failed));
        }
    }
    return results;
}

}  // namespace

std::vector<SweepResult> sweep(const SystemConfig& config_template,
                               const std::vector<double>& omega_grid,
                               const EnsembleSpec& ensemble, double t_obs,
                               double pole_eps, ModelKind model, Exec exec,
                               int n_samples) {
    return sweep_impl(config_template, omega_grid, ensemble, t_obs, ensemble.seed,
                      [&](const SystemConfig& c) {
                          return order_parameter(c, ensemble, t_obs, pole_eps, model,
                                                 exec, n_samples);
                      });
}

std::vector<SweepResult> sweep(const ReducedParams& params_template,
                               const std::vector<double>& omega_grid,
                               const EnsembleSpec& ensemble, double t_obs,
                               double pole_eps, Exec exec, int n_samples) {
    return sweep_impl(params_template, omega_grid, ensemble, t_obs, ensemble.seed,
                      [&](const ReducedParams& p) {
                          return order_parameter(p, ensemble, t_obs, pole_eps, exec,
                                                 n_samples);
                      });
}

std::optional<TransitionEstimate> detect_transition(const std::vector<SweepResult>& results) {
    std::vector<double> omega, d;
    for (const SweepResult& r : results) {
        if (!r.ok) continue;
        omega.push_back(r.coupling);
        d.push_back(r.abs_var);
    }
    if (omega.size() < 5)
        throw std::invalid_argument("detect_transition: need >= 5 valid grid points");

    const double d_max = *std::max_element(d.begin(), d.end());
    const double d_min = *std::min_element(d.begin(), d.end());
    if (!(d_max - d_min > 1e-9 * std::max(d_max, 1e-300)))
        return std::nullopt;  // flat curve, no rise

    // log-spaced grid? then measure slope against log(omega)
    bool log_spaced = omega.front() > 0.0;
    if (log_spaced) {
        const double r0 = omega[1] / omega[0];
        const double h0 = omega[1] - omega[0];
        for (std::size_t i = 1; i + 1 < omega.size(); ++i) {
            if (std::abs(omega[i + 1] - omega[i] - h0) < 1e-9 * h0) log_spaced = false;
            if (std::abs(omega[i + 1] / omega[i] - r0) > 1e-6 * r0) log_spaced = false;
        }
    }

    std::vector<double> slope(omega.size() - 1);
    double max_slope = 0.0;
    for (std::size_t i = 0; i + 1 < omega.size(); ++i) {
        const double dx = log_spaced ? std::log(omega[i + 1] / omega[i])
                                     : omega[i + 1] - omega[i];
        slope[i] = (d[i + 1] - d[i]) / dx;
        max_slope = std::max(max_slope, slope[i]);
    }
    if (max_slope <= 0.0) return std::nullopt;  // monotone non-increasing

    // The globally steepest step can sit far above the transition (the curve
    // keeps climbing through resonance-like structure), so take the earliest
    // step whose slope is comparable to the maximum: that is the onset of the
    // main rise.
    std::size_t best = 0;
    while (slope[best] < 0.4 * max_slope) ++best;

    TransitionEstimate est;
    est.coupling = log_spaced ? std::sqrt(omega[best] * omega[best + 1])
                              : 0.5 * (omega[best] + omega[best + 1]);
    est.uncertainty = omega[best + 1] - omega[best];
    return est;
}

RevivalDiagnostics revival_diagnostics(const Trajectory& traj, double threshold,
                                       double smooth_window) {
    if (traj.size() < 8)
        throw std::invalid_argument("revival_diagnostics: trajectory too short");
    if (!(threshold > 0.0))
        throw std::invalid_argument("revival_diagnostics: threshold must be > 0");

    const double span = traj.times.back() - traj.times.front();
    const double window = smooth_window > 0.0 ? smooth_window : span / 16.0;
    const double dt = traj.times[1] - traj.times[0];
    const int w = std::max(1, static_cast<int>(std::round(window / dt)));

    std::vector<double> abs1(traj.size()), abs2(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        abs1[i] = std::abs(traj.a1[i]);
        abs2[i] = std::abs(traj.a2[i]);
    }
    const std::vector<double> env1 = moving_average(abs1, w);
    const std::vector<double> env2 = moving_average(abs2, w);

    RevivalDiagnostics out;
    out.peaks1 = find_revival_peaks(env1, traj.times, threshold * abs1[0]);
    out.peaks2 = find_revival_peaks(env2, traj.times, threshold * abs2[0]);
    out.sync_score = correlation(env1, env2);
    return out;
}

std::vector<double> make_grid(double start, double stop, int steps, bool log_spaced) {
    if (steps < 2) throw std::invalid_argument("make_grid: steps must be >= 2");
    if (log_spaced && !(start > 0.0 && stop > 0.0))
        throw std::invalid_argument("make_grid: log grid requires positive bounds");
    std::vector<double> grid;
    grid.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double f = static_cast<double>(i) / (steps - 1);
        grid.push_back(log_spaced ? start * std::pow(stop / start, f)
                                  : start + (stop - start) * f);
    }
    return grid;
}

}  // namespace eps
