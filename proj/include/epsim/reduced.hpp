// reduced.hpp — Effective non-Hermitian 2x2 model for the oscillator pair:
// finite-bath decay rates, exceptional-point condition, eigensystem, and the
// closed-form short-time dynamics.

#pragma once

#include <utility>

#include <Eigen/Dense>

#include "epsim/model.hpp"
#include "epsim/propagation.hpp"

namespace eps {

struct ReducedParams {
    double omega0 = 1.0;
    double coupling = 0.0;  // Omega
    double gamma1 = 0.0;
    double gamma2 = 0.0;

    void validate() const;
};

// gamma = pi g^2 / delta_omega (valid for t << T_R).
double decay_rate(const ReservoirSpec& spec);

// ReducedParams with both decay rates evaluated from the reservoir specs.
ReducedParams reduce(const SystemConfig& config);

// Omega_EP = |gamma1 - gamma2| / 2.
double ep_coupling(const ReducedParams& params);

// Generator of d/dt (a1,a2)^T; non-Hermitian once gamma1,2 > 0.
Eigen::Matrix2cd reduced_generator(const ReducedParams& params);

struct EigenPair2x2 {
    Complex lambda1, lambda2;     // lambda1 is the slower-decaying root below EP
    Eigen::Vector2cd h1, h2;      // unit norm; second component real >= 0 when nonzero
    bool coalescent = false;      // set within 1e-8 * Omega_EP of the EP
};

EigenPair2x2 eigensystem(const ReducedParams& params);

// Closed-form solution of the 2x2 system at time t. Uses the uniformly valid
// form exp(l* t) (cosh(s t) I + sinh(s t)/s B), which passes smoothly through
// the coalescent point (sinh(s t)/s -> t gives the secular Jordan term).
std::pair<Complex, Complex> solve_reduced(const ReducedParams& params,
                                          Complex a1_0, Complex a2_0, double t);

// Same propagator precomputed on a uniform grid; shares the PairKernel
// contract with the Hermitian oscillator_kernel.
PairKernel reduced_kernel(const ReducedParams& params, double t_span, int n_samples);

}  // namespace eps
