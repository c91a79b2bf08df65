// propagation.hpp — Exact spectral propagation of d/dt v = -i M v for real
// symmetric M, trajectory sampling, and an independent RK4 cross-check.

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "epsim/model.hpp"

namespace eps {

// Eigendecomposition M = Q diag(L) Q^T of the symmetric generator.
// Immutable after construction; safe to share across threads.
struct SpectralPropagator {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthogonal Q, columns are eigenvectors
};

SpectralPropagator diagonalize(const Eigen::MatrixXd& m);

// v(t) = Q exp(-i L t) Q^T v(0). Exact for any t >= 0, no step error.
Eigen::VectorXcd propagate(const SpectralPropagator& prop,
                           const Eigen::VectorXcd& initial, double t);

struct Trajectory {
    std::vector<double> times;
    std::vector<Complex> a1, a2;
    std::vector<Eigen::VectorXcd> full_states;  // empty unless requested
    std::uint64_t config_hash = 0;

    std::size_t size() const { return times.size(); }
};

// Samples at t = 0, dt, 2dt, ... <= t_max, each computed independently by
// propagate. Reservoir amplitudes are stored only when keep_full is set.
Trajectory sample_trajectory(const SpectralPropagator& prop,
                             const Eigen::VectorXcd& initial, double t_max,
                             double dt_sample, bool keep_full = false);

// Classic fixed-step RK4 on d/dt v = -i M v; cross-validation oracle for the
// spectral path. Throws if the norm grows by more than 1% (unstable step).
Trajectory integrate_rk(const SystemConfig& config, const Eigen::VectorXcd& initial,
                        double t_max, double dt_step, double dt_sample,
                        bool keep_full = false);

// The (a1, a2) block of exp(-i M t) restricted to reservoir-empty initial
// states, precomputed on a uniform time grid:
//   a1(t) = p(t) a1(0) + q(t) a2(0)
//   a2(t) = q(t) a1(0) + r(t) a2(0)
// This makes per-ensemble-member propagation O(n_samples) instead of
// O(n_samples * D).
struct PairKernel {
    std::vector<double> times;
    std::vector<Complex> p, q, r;

    void evaluate(Complex a1_0, Complex a2_0,
                  std::vector<Complex>& a1_out, std::vector<Complex>& a2_out) const;
};

// Kernel on n_samples+1 uniform times covering [0, t_span].
PairKernel oscillator_kernel(const SpectralPropagator& prop, double t_span,
                             int n_samples);

}  // namespace eps
