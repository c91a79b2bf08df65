// model.hpp — Physical configuration and the real symmetric generator of the
// coupled-oscillator + finite-reservoir linear system (d/dt v = -i M v).

#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace eps {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

// One frequency-comb reservoir: n_modes oscillators spaced by freq_step
// around the system frequency. Mode k (1-based) sits at
// omega0 + freq_step * (k - n_modes/2).
struct ReservoirSpec {
    int n_modes = 0;         // N >= 0 (0 = reservoir absent)
    double freq_step = 1.0;  // delta_omega, units of omega0, > 0
    double coupling = 0.0;   // g, units of omega0, >= 0

    void validate(const char* label) const;
};

struct SystemConfig {
    double omega0 = 1.0;
    double coupling = 0.0;   // Omega; may be negative
    ReservoirSpec reservoir1;
    ReservoirSpec reservoir2;
    double t_max = 1.0;
    double dt_sample = 0.1;
    int max_dimension = 2000;  // hard cap on D; dense eigen-solve guard

    int dimension() const { return 2 + reservoir1.n_modes + reservoir2.n_modes; }
    void validate() const;

    // Stable identifier binding derived artifacts (trajectories, sweeps) to
    // the configuration that produced them.
    std::uint64_t hash() const;
};

// Complex amplitude vector (a1, a2, b_1..b_N1, c_1..c_N2) at one instant.
struct FullState {
    Eigen::VectorXcd amplitudes;

    Complex a1() const { return amplitudes(0); }
    Complex a2() const { return amplitudes(1); }
    double norm2() const { return amplitudes.squaredNorm(); }
};

// Comb frequencies of one reservoir, mode k = 1..N.
Eigen::VectorXd reservoir_frequencies(const ReservoirSpec& spec, double omega0);

// Return time T_R = 2 pi / delta_omega.
double return_time(const ReservoirSpec& spec);

// Assemble the D x D real symmetric generator M with the oscillator pair in
// the leading 2x2 block, then the two reservoir diagonal blocks. Symmetric
// entries are written from a single value, so M is bitwise symmetric.
Eigen::MatrixXd build_generator(const SystemConfig& config);

// FullState with the given oscillator amplitudes and empty reservoirs.
FullState oscillator_state(const SystemConfig& config, Complex a1, Complex a2);

}  // namespace eps
