// analysis.hpp — Order-parameter pipeline: seeded ensembles of initial
// states, the time-averaged ratio integral I12(T), its ensemble variance
// D12(T), coupling sweeps, transition detection, and revival diagnostics.
//
// Ensemble members are independent work items. The parallel path distributes
// members over OpenMP threads but stores per-member results by index and
// reduces serially in index order, so Serial and Parallel execution give
// bit-identical results.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epsim/model.hpp"
#include "epsim/propagation.hpp"
#include "epsim/reduced.hpp"

namespace eps {

enum class Exec { Serial, Parallel };

enum class ModelKind { Hermitian, Reduced };

struct EnsembleSpec {
    int n_states = 2;        // >= 2 (variance needs two samples)
    std::uint64_t seed = 0;

    void validate() const;
};

// Oscillator pairs uniform on the unit-norm sphere |a1|^2 + |a2|^2 = 1
// (two standard complex Gaussians, normalized). Reproducible from the seed.
std::vector<std::pair<Complex, Complex>> sample_initial_pairs(const EnsembleSpec& spec);

// Same ensemble embedded as FullStates with all reservoir amplitudes zero.
std::vector<FullState> sample_initial_states(const EnsembleSpec& spec,
                                             const SystemConfig& config);

struct RatioIntegral {
    Complex value{};
    bool valid = false;
    double excluded_measure = 0.0;  // total time with |a2| below the pole guard
};

// Trapezoidal (1/T) Int_0^T a1/a2 dt over the uniform sample grid, restricted
// to samples with |a2| >= pole_eps and normalized by the included measure.
// Invalid when the excluded measure exceeds 10% of T.
RatioIntegral ratio_integral(const std::vector<double>& times,
                             const std::vector<Complex>& a1,
                             const std::vector<Complex>& a2,
                             double t_end, double pole_eps);
RatioIntegral ratio_integral(const Trajectory& traj, double t_end, double pole_eps);

struct SweepResult {
    double coupling = 0.0;
    Complex mean_I{};
    Complex var_D{};       // <I^2> - <I>^2 over the valid members, complex
    double abs_var = 0.0;  // |var_D|
    int n_valid = 0;
    int n_discarded = 0;
    double t_obs = 0.0;
    std::uint64_t seed = 0;
    bool ok = true;
    std::string error;     // set when a sweep point failed
};

inline constexpr double kDefaultPoleEps = 1e-6;

// Single-coupling order parameter. n_samples <= 0 picks a default resolving
// both T and the shortest return time. Throws when fewer than 2 members
// survive the pole guard.
SweepResult order_parameter(const SystemConfig& config, const EnsembleSpec& ensemble,
                            double t_obs, double pole_eps = kDefaultPoleEps,
                            ModelKind model = ModelKind::Hermitian,
                            Exec exec = Exec::Parallel, int n_samples = 0);

// Reduced-model path without a full system configuration.
SweepResult order_parameter(const ReducedParams& params, const EnsembleSpec& ensemble,
                            double t_obs, double pole_eps = kDefaultPoleEps,
                            Exec exec = Exec::Parallel, int n_samples = 0);

// One SweepResult per grid coupling; the ensemble (same seed, same states) is
// reused across the grid so members are paired point-to-point. A failing
// point is recorded with ok = false rather than aborting the sweep.
std::vector<SweepResult> sweep(const SystemConfig& config_template,
                               const std::vector<double>& omega_grid,
                               const EnsembleSpec& ensemble, double t_obs,
                               double pole_eps = kDefaultPoleEps,
                               ModelKind model = ModelKind::Hermitian,
                               Exec exec = Exec::Parallel, int n_samples = 0);
std::vector<SweepResult> sweep(const ReducedParams& params_template,
                               const std::vector<double>& omega_grid,
                               const EnsembleSpec& ensemble, double t_obs,
                               double pole_eps = kDefaultPoleEps,
                               Exec exec = Exec::Parallel, int n_samples = 0);

struct TransitionEstimate {
    double coupling = 0.0;
    double uncertainty = 0.0;  // grid spacing at the detected step
};

// Onset of the main rise of |D12| vs Omega: the earliest finite-difference
// step whose slope reaches 40% of the maximum slope (log-slope on log-spaced
// grids). Taking the earliest such step instead of the global maximum keeps
// the estimate at the transition when the curve keeps steepening through
// structure far above it. Empty when the curve has no rise. Requires >= 5
// valid points.
std::optional<TransitionEstimate> detect_transition(const std::vector<SweepResult>& results);

struct RevivalDiagnostics {
    std::vector<double> peaks1, peaks2;  // revival peak times per oscillator
    double sync_score = 0.0;             // envelope correlation, in [-1, 1]
};

// Peaks of the smoothed |a1|, |a2| envelopes exceeding threshold * initial
// amplitude after a collapse; smooth_window is the moving-average width in
// time units (<= 0 picks span/16).
RevivalDiagnostics revival_diagnostics(const Trajectory& traj, double threshold,
                                       double smooth_window = 0.0);

// start:stop:steps[:log] grid used by sweeps.
std::vector<double> make_grid(double start, double stop, int steps, bool log_spaced);

}  // namespace eps
