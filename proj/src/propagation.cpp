#include "epsim/propagation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eps {

SpectralPropagator diagonalize(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("diagonalize: matrix must be square");
    if (!m.isApprox(m.transpose(), 0.0) && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * m.cwiseAbs().maxCoeff())
        throw std::invalid_argument("diagonalize: matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("diagonalize: eigen-solver failed to converge at dimension " +
                                 std::to_string(m.rows()));
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXcd propagate(const SpectralPropagator& prop,
                           const Eigen::VectorXcd& initial, double t) {
    const Eigen::Index d = prop.eigenvalues.size();
    if (initial.size() != d)
        throw std::invalid_argument("propagate: state dimension mismatch");
    Eigen::VectorXcd modal = prop.eigenvectors.transpose() * initial;
    for (Eigen::Index j = 0; j < d; ++j)
        modal(j) *= std::exp(Complex(0.0, -prop.eigenvalues(j) * t));
    return prop.eigenvectors * modal;
}

Trajectory sample_trajectory(const SpectralPropagator& prop,
                             const Eigen::VectorXcd& initial, double t_max,
                             double dt_sample, bool keep_full) {
    if (!(t_max > 0.0) || !(dt_sample > 0.0) || dt_sample > t_max)
        throw std::invalid_argument("sample_trajectory: require 0 < dt_sample <= t_max");
    Trajectory traj;
    const int n = static_cast<int>(std::floor(t_max / dt_sample + 1e-9));
    traj.times.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = i * dt_sample;
        Eigen::VectorXcd v = propagate(prop, initial, t);
        traj.times.push_back(t);
        traj.a1.push_back(v(0));
        traj.a2.push_back(v(1));
        if (keep_full) traj.full_states.push_back(std::move(v));
    }
    return traj;
}

Trajectory integrate_rk(const SystemConfig& config, const Eigen::VectorXcd& initial,
                        double t_max, double dt_step, double dt_sample,
                        bool keep_full) {
    if (!(dt_step > 0.0))
        throw std::invalid_argument("integrate_rk: dt_step must be > 0");
    if (!(t_max > 0.0) || !(dt_sample > 0.0) || dt_sample > t_max)
        throw std::invalid_argument("integrate_rk: require 0 < dt_sample <= t_max");

    const Eigen::MatrixXd m = build_generator(config);
    if (initial.size() != m.rows())
        throw std::invalid_argument("integrate_rk: state dimension mismatch");

    const double norm0 = initial.norm();
    const auto rhs = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
        return Complex(0.0, -1.0) * (m * v);
    };

    Trajectory traj;
    traj.config_hash = config.hash();
    Eigen::VectorXcd v = initial;
    double t = 0.0;
    traj.times.push_back(0.0);
    traj.a1.push_back(v(0));
    traj.a2.push_back(v(1));
    if (keep_full) traj.full_states.push_back(v);

    const int n_out = static_cast<int>(std::floor(t_max / dt_sample + 1e-9));
    for (int i = 1; i <= n_out; ++i) {
        const double t_target = i * dt_sample;
        while (t < t_target - 1e-12 * t_max) {
            const double h = std::min(dt_step, t_target - t);
            const Eigen::VectorXcd k1 = rhs(v);
            const Eigen::VectorXcd k2 = rhs(v + 0.5 * h * k1);
            const Eigen::VectorXcd k3 = rhs(v + 0.5 * h * k2);
            const Eigen::VectorXcd k4 = rhs(v + h * k3);
            v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t += h;
        }
        if (v.norm() > 1.01 * norm0)
            throw std::runtime_error("integrate_rk: norm grew by more than 1%; reduce dt_step");
        traj.times.push_back(t_target);
        traj.a1.push_back(v(0));
        traj.a2.push_back(v(1));
        if (keep_full) traj.full_states.push_back(v);
    }
    return traj;
}

void PairKernel::evaluate(Complex a1_0, Complex a2_0,
                          std::vector<Complex>& a1_out, std::vector<Complex>& a2_out) const {
    const std::size_t n = times.size();
    a1_out.resize(n);
    a2_out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        a1_out[i] = p[i] * a1_0 + q[i] * a2_0;
        a2_out[i] = q[i] * a1_0 + r[i] * a2_0;
    }
}

PairKernel oscillator_kernel(const SpectralPropagator& prop, double t_span,
                             int n_samples) {
    if (!(t_span > 0.0) || n_samples < 1)
        throw std::invalid_argument("oscillator_kernel: require t_span > 0, n_samples >= 1");
    const Eigen::Index d = prop.eigenvalues.size();
    PairKernel k;
    k.times.resize(n_samples + 1);
    k.p.resize(n_samples + 1);
    k.q.resize(n_samples + 1);
    k.r.resize(n_samples + 1);
    const double dt = t_span / n_samples;
    // [exp(-iMt)]_{01 block} = sum_j Q_{0j} Q_{1j} exp(-i l_j t) etc.
    for (int i = 0; i <= n_samples; ++i) {
        const double t = i * dt;
        Complex p{}, q{}, r{};
        for (Eigen::Index j = 0; j < d; ++j) {
            const Complex ph = std::exp(Complex(0.0, -prop.eigenvalues(j) * t));
            const double q0 = prop.eigenvectors(0, j);
            const double q1 = prop.eigenvectors(1, j);
            p += q0 * q0 * ph;
            q += q0 * q1 * ph;
            r += q1 * q1 * ph;
        }
        k.times[i] = t;
        k.p[i] = p;
        k.q[i] = q;
        k.r[i] = r;
    }
    return k;
}

}  // namespace eps
