// riccati.hpp — Dynamics of the amplitude ratio A = a1/a2: planar vector
// field, fixed points with stability, trajectories, and phase portraits.

#pragma once

#include <array>
#include <vector>

#include "epsim/reduced.hpp"

namespace eps {

struct RatioPoint {
    double re = 0.0;
    double im = 0.0;
};

// (dRe A/dt, dIm A/dt) of the ratio equation.
std::array<double, 2> riccati_rhs(RatioPoint a, const ReducedParams& params);

enum class Stability { Attractor, Repeller, Center };

struct FixedPoint {
    RatioPoint point;
    Stability stability;
};

// The two fixed points of the ratio flow. Below the EP both lie on the
// imaginary axis (one attractor, one repeller); at and above the EP they sit
// symmetrically off-axis on the unit circle and are centers. Throws
// std::domain_error for Omega = 0, where one fixed point moves to infinity.
std::array<FixedPoint, 2> fixed_points(const ReducedParams& params);

struct RatioTrajectory {
    std::vector<double> times;
    std::vector<RatioPoint> points;
    bool escaped = false;  // truncated after passing the escape radius (a2 ~ 0 pole)
};

// Fixed-step RK4 on the planar field. A trajectory exceeding escape_radius is
// truncated and flagged, not treated as an error.
RatioTrajectory integrate_ratio(RatioPoint a0, const ReducedParams& params,
                                double t_span, double dt,
                                double escape_radius = 1e6);

struct PortraitSpec {
    double re_min = -3.0, re_max = 3.0;
    double im_min = -3.0, im_max = 3.0;
    int n_re = 25, n_im = 25;
    std::vector<RatioPoint> seeds;
    double t_span = 0.0;  // 0 -> choose from the parameter scales
};

struct Portrait {
    std::vector<RatioPoint> grid;                  // row-major, re fastest
    std::vector<std::array<double, 2>> field;      // rhs at each grid node
    std::vector<RatioTrajectory> trajectories;     // one per seed
};

Portrait generate_portrait(const PortraitSpec& spec, const ReducedParams& params);

}  // namespace eps
