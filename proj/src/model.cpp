#include "epsim/model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eps {

void ReservoirSpec::validate(const char* label) const {
    if (n_modes < 0)
        throw std::invalid_argument(std::string(label) + ": n_modes must be >= 0");
    if (!(freq_step > 0.0))
        throw std::invalid_argument(std::string(label) + ": freq_step must be > 0");
    if (!(coupling >= 0.0))
        throw std::invalid_argument(std::string(label) + ": coupling must be >= 0");
}

void SystemConfig::validate() const {
    if (!(omega0 > 0.0)) throw std::invalid_argument("system: omega0 must be > 0");
    if (!std::isfinite(coupling)) throw std::invalid_argument("system: coupling must be finite");
    if (!(t_max > 0.0)) throw std::invalid_argument("system: t_max must be > 0");
    if (!(dt_sample > 0.0) || dt_sample > t_max)
        throw std::invalid_argument("system: require 0 < dt_sample <= t_max");
    reservoir1.validate("reservoir1");
    reservoir2.validate("reservoir2");
    if (dimension() > max_dimension)
        throw std::invalid_argument("system: dimension " + std::to_string(dimension()) +
                                    " exceeds cap " + std::to_string(max_dimension));
}

std::uint64_t SystemConfig::hash() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g|%.17g|%d|%.17g|%.17g|%d|%.17g|%.17g|%.17g|%.17g",
                  omega0, coupling, reservoir1.n_modes, reservoir1.freq_step,
                  reservoir1.coupling, reservoir2.n_modes, reservoir2.freq_step,
                  reservoir2.coupling, t_max, dt_sample);
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (const char* p = buf; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull;
    }
    return h;
}

Eigen::VectorXd reservoir_frequencies(const ReservoirSpec& spec, double omega0) {
    spec.validate("reservoir");
    Eigen::VectorXd w(spec.n_modes);
    for (int k = 1; k <= spec.n_modes; ++k)
        w(k - 1) = omega0 + spec.freq_step * (k - spec.n_modes / 2.0);
    return w;
}

double return_time(const ReservoirSpec& spec) {
    if (!(spec.freq_step > 0.0))
        throw std::invalid_argument("return_time: freq_step must be > 0");
    return 2.0 * std::numbers::pi / spec.freq_step;
}

Eigen::MatrixXd build_generator(const SystemConfig& config) {
    config.validate();
    const int d = config.dimension();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    m(0, 0) = config.omega0;
    m(1, 1) = config.omega0;
    m(0, 1) = m(1, 0) = config.coupling;

    const auto fill_block = [&](const ReservoirSpec& spec, int osc, int offset) {
        if (spec.n_modes == 0) return;
        const Eigen::VectorXd w = reservoir_frequencies(spec, config.omega0);
        for (int k = 0; k < spec.n_modes; ++k) {
            m(offset + k, offset + k) = w(k);
            m(osc, offset + k) = m(offset + k, osc) = spec.coupling;
        }
    };
    fill_block(config.reservoir1, 0, 2);
    fill_block(config.reservoir2, 1, 2 + config.reservoir1.n_modes);
    return m;
}

FullState oscillator_state(const SystemConfig& config, Complex a1, Complex a2) {
    FullState s;
    s.amplitudes = Eigen::VectorXcd::Zero(config.dimension());
    s.amplitudes(0) = a1;
    s.amplitudes(1) = a2;
    return s;
}

}  // namespace eps
