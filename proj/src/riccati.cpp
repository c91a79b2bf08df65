#include "epsim/riccati.hpp"

#include <cmath>
#include <stdexcept>

namespace eps {

std::array<double, 2> riccati_rhs(RatioPoint a, const ReducedParams& params) {
    const double d = params.gamma2 - params.gamma1;
    const double omega = params.coupling;
    return {d * a.re - 2.0 * omega * a.re * a.im,
            d * a.im + omega * (a.re * a.re - a.im * a.im) - omega};
}

std::array<FixedPoint, 2> fixed_points(const ReducedParams& params) {
    params.validate();
    const double omega = params.coupling;
    if (omega == 0.0)
        throw std::domain_error(
            "fixed_points: Omega = 0 is degenerate (A = 0 and the point at infinity)");
    const double delta = params.gamma1 - params.gamma2;
    const double disc = delta * delta - 4.0 * omega * omega;
    if (disc > 0.0) {
        // on the imaginary axis; the ratio-flow Jacobian there is
        // (gamma2 - gamma1 - 2 Omega Im A) * Identity
        const double root = std::sqrt(disc);
        const double im_a = (-delta + root) / (2.0 * omega);
        const double im_b = (-delta - root) / (2.0 * omega);
        const auto classify = [&](double im) {
            return (-delta - 2.0 * omega * im < 0.0) ? Stability::Attractor
                                                     : Stability::Repeller;
        };
        return {FixedPoint{{0.0, im_a}, classify(im_a)},
                FixedPoint{{0.0, im_b}, classify(im_b)}};
    }
    // at/above the EP: centers on the unit circle (pure imaginary Jacobian
    // eigenvalues +-i sqrt(4 Omega^2 - delta^2))
    const double re = std::sqrt(-disc) / (2.0 * omega);
    const double im = -delta / (2.0 * omega);
    return {FixedPoint{{re, im}, Stability::Center},
            FixedPoint{{-re, im}, Stability::Center}};
}

RatioTrajectory integrate_ratio(RatioPoint a0, const ReducedParams& params,
                                double t_span, double dt, double escape_radius) {
    params.validate();
    if (!(t_span > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("integrate_ratio: require t_span > 0, dt > 0");

    const auto rhs = [&](RatioPoint a) { return riccati_rhs(a, params); };
    RatioTrajectory traj;
    RatioPoint a = a0;
    const int n = static_cast<int>(std::ceil(t_span / dt - 1e-9));
    traj.times.reserve(n + 1);
    traj.points.reserve(n + 1);
    traj.times.push_back(0.0);
    traj.points.push_back(a);
    double t = 0.0;
    for (int i = 0; i < n; ++i) {
        const double h = std::min(dt, t_span - t);
        const auto k1 = rhs(a);
        const auto k2 = rhs({a.re + 0.5 * h * k1[0], a.im + 0.5 * h * k1[1]});
        const auto k3 = rhs({a.re + 0.5 * h * k2[0], a.im + 0.5 * h * k2[1]});
        const auto k4 = rhs({a.re + h * k3[0], a.im + h * k3[1]});
        a.re += (h / 6.0) * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        a.im += (h / 6.0) * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        t += h;
        if (std::hypot(a.re, a.im) > escape_radius) {
            traj.escaped = true;  // a2 passed near zero; the ratio equation is singular there
            break;
        }
        traj.times.push_back(t);
        traj.points.push_back(a);
    }
    return traj;
}

Portrait generate_portrait(const PortraitSpec& spec, const ReducedParams& params) {
    params.validate();
    if (spec.n_re < 2 || spec.n_im < 2)
        throw std::invalid_argument("generate_portrait: grid counts must be >= 2");
    if (!(spec.re_max > spec.re_min) || !(spec.im_max > spec.im_min))
        throw std::invalid_argument("generate_portrait: degenerate ranges");

    Portrait out;
    out.grid.reserve(static_cast<std::size_t>(spec.n_re) * spec.n_im);
    out.field.reserve(out.grid.capacity());
    for (int j = 0; j < spec.n_im; ++j) {
        const double im = spec.im_min + (spec.im_max - spec.im_min) * j / (spec.n_im - 1);
        for (int i = 0; i < spec.n_re; ++i) {
            const double re = spec.re_min + (spec.re_max - spec.re_min) * i / (spec.n_re - 1);
            out.grid.push_back({re, im});
            out.field.push_back(riccati_rhs({re, im}, params));
        }
    }

    const double scale = std::max({std::abs(params.gamma1 - params.gamma2),
                                   std::abs(params.coupling),
                                   ep_coupling(params)});
    const double t_span = spec.t_span > 0.0 ? spec.t_span
                                            : (scale > 0.0 ? 50.0 / scale : 1.0);
    const double dt = scale > 0.0 ? 1e-2 / scale : 1e-2;
    for (const RatioPoint& seed : spec.seeds)
        out.trajectories.push_back(integrate_ratio(seed, params, t_span, dt));
    return out;
}

}  // namespace eps
