#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "epsim/riccati.hpp"

using namespace eps;

namespace {

const ReducedParams kBelow{1.0, 0.006, 0.025, 0.005};   // Omega_EP = 0.01
const ReducedParams kAt{1.0, 0.010, 0.025, 0.005};
const ReducedParams kAbove{1.0, 0.0125, 0.025, 0.005};

double rhs_norm(RatioPoint a, const ReducedParams& p) {
    const auto f = riccati_rhs(a, p);
    return std::hypot(f[0], f[1]);
}

}  // namespace

TEST_CASE("riccati_rhs basics") {
    const auto f = riccati_rhs({0.0, 0.0}, kBelow);
    CHECK(f[0] == 0.0);
    CHECK(f[1] == -kBelow.coupling);
}

TEST_CASE("riccati_rhs equals the complex-form right-hand side") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const RatioPoint a{u(rng), u(rng)};
        const Complex z(a.re, a.im);
        const Complex complex_rhs = (kBelow.gamma2 - kBelow.gamma1) * z +
                                    kImag * kBelow.coupling * z * z -
                                    kImag * kBelow.coupling;
        const auto f = riccati_rhs(a, kBelow);
        CHECK(f[0] == doctest::Approx(complex_rhs.real()).epsilon(1e-12));
        CHECK(f[1] == doctest::Approx(complex_rhs.imag()).epsilon(1e-12));
    }
}

TEST_CASE("fixed points below the EP: on-axis attractor/repeller pair") {
    const auto fps = fixed_points(kBelow);
    int attractors = 0, repellers = 0;
    for (const FixedPoint& fp : fps) {
        CHECK(fp.point.re == 0.0);
        CHECK(rhs_norm(fp.point, kBelow) <
              1e-12 * std::max(kBelow.gamma1 - kBelow.gamma2, kBelow.coupling));
        attractors += fp.stability == Stability::Attractor;
        repellers += fp.stability == Stability::Repeller;
    }
    CHECK(attractors == 1);
    CHECK(repellers == 1);
    // discriminant arithmetic: sqrt(4e-4 - 1.44e-4) = 0.016, roots -1/3 and -3
    CHECK(fps[0].point.im == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(fps[1].point.im == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(fps[0].stability == Stability::Attractor);
}

TEST_CASE("fixed points above the EP: centers on the unit circle") {
    const auto fps = fixed_points(kAbove);
    for (const FixedPoint& fp : fps) {
        CHECK(fp.stability == Stability::Center);
        CHECK(std::hypot(fp.point.re, fp.point.im) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rhs_norm(fp.point, kAbove) < 1e-12 * kAbove.coupling);
    }
    CHECK(std::abs(fps[0].point.re) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(fps[0].point.im == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(fps[0].point.re == -fps[1].point.re);
}

TEST_CASE("fixed points merge at the EP") {
    const auto fps = fixed_points(kAt);
    CHECK(fps[0].point.re == doctest::Approx(0.0));
    CHECK(fps[0].point.im == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fps[1].point.im == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("fixed points: Omega = 0 is reported as degenerate") {
    CHECK_THROWS_AS(fixed_points(ReducedParams{1.0, 0.0, 0.025, 0.005}),
                    std::domain_error);
}

TEST_CASE("mirror symmetry Re A -> -Re A of the field is exact") {
    for (const ReducedParams* p : {&kBelow, &kAt, &kAbove}) {
        for (int i = 0; i < 25; ++i)
            for (int j = 0; j < 25; ++j) {
                const double x = -3.0 + 6.0 * i / 24.0;
                const double y = -3.0 + 6.0 * j / 24.0;
                const auto f = riccati_rhs({x, y}, *p);
                const auto g = riccati_rhs({-x, y}, *p);
                CHECK(g[0] == -f[0]);
                CHECK(g[1] == f[1]);
            }
    }
}

TEST_CASE("below the EP all trajectories converge to the attractor") {
    const auto fps = fixed_points(kBelow);
    const RatioPoint target = fps[0].point;
    const double delta = kBelow.gamma1 - kBelow.gamma2;
    std::mt19937 rng(22);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const RatioPoint a0{u(rng), u(rng)};
        const double t_end = 50.0 / delta;
        const RatioTrajectory traj = integrate_ratio(a0, kBelow, t_end, 1e-2 / delta);
        REQUIRE(!traj.points.empty());
        const RatioPoint last = traj.points.back();
        CHECK(std::hypot(last.re - target.re, last.im - target.im) < 1e-3);
    }
}

TEST_CASE("above the EP orbits are closed with the analytic period") {
    const double delta = kAbove.gamma1 - kAbove.gamma2;
    const double half = delta / 2.0;
    const double period = 2.0 * std::numbers::pi /
                          (2.0 * std::sqrt(kAbove.coupling * kAbove.coupling - half * half));
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 5; ++i) {
        const RatioPoint a0{u(rng) + 0.3, u(rng)};
        const RatioTrajectory traj =
            integrate_ratio(a0, kAbove, period, period / 40000.0);
        REQUIRE(!traj.escaped);
        const RatioPoint last = traj.points.back();
        CHECK(std::hypot(last.re - a0.re, last.im - a0.im) < 1e-3);
    }
}

TEST_CASE("trajectories keep the sign of Re A above the EP") {
    for (double x0 : {0.4, 1.2, -0.6}) {
        const RatioTrajectory traj =
            integrate_ratio({x0, 0.7}, kAbove, 4000.0, 0.2);
        for (const RatioPoint& a : traj.points)
            CHECK(a.re * x0 > 0.0);
    }
}

TEST_CASE("ratio trajectory matches the reduced-model amplitude ratio") {
    for (const ReducedParams* p : {&kBelow, &kAbove}) {
        const Complex a1_0(0.8, 0.1), a2_0(0.55, -0.3);
        const RatioPoint a0{(a1_0 / a2_0).real(), (a1_0 / a2_0).imag()};
        const double scale = std::max(p->gamma1 - p->gamma2, p->coupling);
        const RatioTrajectory traj = integrate_ratio(a0, *p, 30.0 / scale, 1e-3 / scale);
        bool compared = false;
        for (std::size_t i = 0; i < traj.times.size(); i += 500) {
            const auto [a1, a2] = solve_reduced(*p, a1_0, a2_0, traj.times[i]);
            if (std::abs(a2) < 0.05) continue;  // ratio check only away from the pole
            const Complex ratio = a1 / a2;
            CHECK(std::abs(ratio - Complex(traj.points[i].re, traj.points[i].im)) < 1e-6);
            compared = true;
        }
        CHECK(compared);
    }
}

TEST_CASE("stationary at a fixed point; escape near the pole is flagged") {
    const RatioPoint attractor = fixed_points(kBelow)[0].point;
    const RatioTrajectory stay = integrate_ratio(attractor, kBelow, 1000.0, 0.5);
    for (const RatioPoint& a : stay.points)
        CHECK(std::hypot(a.re - attractor.re, a.im - attractor.im) < 1e-9);

    // tiny escape radius forces truncation without an exception
    const RatioTrajectory esc = integrate_ratio({2.0, 2.0}, kAbove, 4000.0, 0.2, 2.5);
    CHECK(esc.escaped);
    CHECK(esc.times.size() < 4000.0 / 0.2);
}

TEST_CASE("generate_portrait: grid, field, and topology") {
    PortraitSpec spec;
    spec.seeds = {{0.5, 0.5}, {-0.5, 0.5}};
    SUBCASE("below the EP both fixed points lie on the Im axis") {
        const Portrait p = generate_portrait(spec, kBelow);
        REQUIRE(p.grid.size() == 625);
        REQUIRE(p.field.size() == 625);
        CHECK(p.trajectories.size() == 2);
        for (const auto& fp : fixed_points(kBelow)) CHECK(fp.point.re == 0.0);
    }
    SUBCASE("above the EP trajectories stay in one half-plane") {
        const Portrait p = generate_portrait(spec, kAbove);
        for (std::size_t k = 0; k < p.trajectories.size(); ++k) {
            const double sign = spec.seeds[k].re > 0 ? 1.0 : -1.0;
            for (const RatioPoint& a : p.trajectories[k].points)
                CHECK(a.re * sign > 0.0);
        }
    }
    SUBCASE("invalid specs are rejected") {
        PortraitSpec bad;
        bad.n_re = 1;
        CHECK_THROWS_AS(generate_portrait(bad, kBelow), std::invalid_argument);
    }
}
