#include "epsim/reduced.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eps {

namespace {

// cosh(s t) and sinh(s t)/s for s^2 = s2 of either sign, stable through s2 = 0.
struct CoshSinh {
    double c, s_over;  // cosh(st), sinh(st)/s (both real for real s2)
};

CoshSinh cosh_sinh_ratio(double s2, double t) {
    const double x = s2 * t * t;
    if (std::abs(x) < 1e-8) {
        // series in x = (s t)^2
        return {1.0 + x / 2.0 + x * x / 24.0, t * (1.0 + x / 6.0 + x * x / 120.0)};
    }
    if (s2 > 0.0) {
        const double s = std::sqrt(s2);
        return {std::cosh(s * t), std::sinh(s * t) / s};
    }
    const double mu = std::sqrt(-s2);
    return {std::cos(mu * t), std::sin(mu * t) / mu};
}

}  // namespace

void ReducedParams::validate() const {
    if (!(omega0 > 0.0)) throw std::invalid_argument("reduced: omega0 must be > 0");
    if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0))
        throw std::invalid_argument("reduced: decay rates must be >= 0");
    if (!std::isfinite(coupling)) throw std::invalid_argument("reduced: coupling must be finite");
}

double decay_rate(const ReservoirSpec& spec) {
    spec.validate("reservoir");
    return std::numbers::pi * spec.coupling * spec.coupling / spec.freq_step;
}

ReducedParams reduce(const SystemConfig& config) {
    config.validate();
    return {config.omega0, config.coupling,
            decay_rate(config.reservoir1), decay_rate(config.reservoir2)};
}

double ep_coupling(const ReducedParams& params) {
    params.validate();
    return std::abs(params.gamma1 - params.gamma2) / 2.0;
}

Eigen::Matrix2cd reduced_generator(const ReducedParams& params) {
    Eigen::Matrix2cd g;
    g(0, 0) = Complex(-params.gamma1, -params.omega0);
    g(1, 1) = Complex(-params.gamma2, -params.omega0);
    g(0, 1) = g(1, 0) = Complex(0.0, -params.coupling);
    return g;
}

EigenPair2x2 eigensystem(const ReducedParams& params) {
    params.validate();
    const double half = (params.gamma1 - params.gamma2) / 2.0;
    const double omega = params.coupling;
    const double s2 = half * half - omega * omega;
    // principal branch: s real >= 0 below the EP, +i|s| above
    const Complex s = (s2 >= 0.0) ? Complex(std::sqrt(s2), 0.0)
                                  : Complex(0.0, std::sqrt(-s2));
    const Complex base(-(params.gamma1 + params.gamma2) / 2.0, -params.omega0);

    EigenPair2x2 out;
    out.lambda1 = base + s;
    out.lambda2 = base - s;
    const double scale = std::max(std::abs(half), std::abs(omega));
    out.coalescent = std::abs(s) <= 1e-8 * scale;

    // Two algebraically equivalent eigenvector forms; keep the better
    // conditioned one (the other degenerates when Omega -> 0).
    const auto pick = [&](Complex sgn_s) -> Eigen::Vector2cd {
        Eigen::Vector2cd u(kImag * (sgn_s - half), Complex(omega, 0.0));
        Eigen::Vector2cd v(kImag * omega, -(half + sgn_s));
        Eigen::Vector2cd h = (u.norm() >= v.norm()) ? u : v;
        h.normalize();
        if (std::abs(h(1)) > 1e-300)
            h *= std::conj(h(1)) / std::abs(h(1));
        else if (std::abs(h(0)) > 1e-300)
            h *= std::conj(h(0)) / std::abs(h(0));
        return h;
    };
    out.h1 = pick(s);
    out.h2 = pick(-s);
    return out;
}

std::pair<Complex, Complex> solve_reduced(const ReducedParams& params,
                                          Complex a1_0, Complex a2_0, double t) {
    params.validate();
    if (a1_0 == Complex{} && a2_0 == Complex{})
        throw std::invalid_argument("solve_reduced: initial state must be nonzero");
    if (t < 0.0) throw std::invalid_argument("solve_reduced: t must be >= 0");
    const double half = (params.gamma1 - params.gamma2) / 2.0;
    const double omega = params.coupling;
    const auto [c, s_over] = cosh_sinh_ratio(half * half - omega * omega, t);
    const Complex base(-(params.gamma1 + params.gamma2) / 2.0, -params.omega0);
    const Complex e = std::exp(base * t);
    // exp(G t) = exp(base t) [cosh(st) I + sinh(st)/s (G - base I)]
    const Complex p = e * (c - half * s_over);
    const Complex q = e * (-kImag * omega * s_over);
    const Complex r = e * (c + half * s_over);
    return {p * a1_0 + q * a2_0, q * a1_0 + r * a2_0};
}

PairKernel reduced_kernel(const ReducedParams& params, double t_span, int n_samples) {
    params.validate();
    if (!(t_span > 0.0) || n_samples < 1)
        throw std::invalid_argument("reduced_kernel: require t_span > 0, n_samples >= 1");
    const double half = (params.gamma1 - params.gamma2) / 2.0;
    const double omega = params.coupling;
    const double s2 = half * half - omega * omega;
    const Complex base(-(params.gamma1 + params.gamma2) / 2.0, -params.omega0);
    const double dt = t_span / n_samples;

    PairKernel k;
    k.times.resize(n_samples + 1);
    k.p.resize(n_samples + 1);
    k.q.resize(n_samples + 1);
    k.r.resize(n_samples + 1);
    for (int i = 0; i <= n_samples; ++i) {
        const double t = i * dt;
        const auto [c, s_over] = cosh_sinh_ratio(s2, t);
        const Complex e = std::exp(base * t);
        k.times[i] = t;
        k.p[i] = e * (c - half * s_over);
        k.q[i] = e * (-kImag * omega * s_over);
        k.r[i] = e * (c + half * s_over);
    }
    return k;
}

}  // namespace eps
