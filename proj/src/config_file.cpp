#include "epsim/config_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eps {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& path, int line, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(path, line, "not a number: '" + v + "'");
    }
}

long long parse_int(const std::string& path, int line, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(path, line, "not an integer: '" + v + "'");
    }
}

bool parse_bool(const std::string& path, int line, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(path, line, "not a boolean: '" + v + "'");
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);

    RunConfig cfg;
    bool saw_gamma = false;
    std::string section;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(path, line_no, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "system" && section != "reservoir1" && section != "reservoir2" &&
                section != "reduced" && section != "ensemble" && section != "sweep")
                fail(path, line_no, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(path, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (section.empty()) fail(path, line_no, "key '" + key + "' outside any section");

        const auto unknown = [&]() {
            fail(path, line_no, "unknown key '" + key + "' in section [" + section + "]");
        };
        if (section == "system") {
            if (key == "omega0") cfg.system.omega0 = parse_double(path, line_no, val);
            else if (key == "coupling") cfg.system.coupling = parse_double(path, line_no, val);
            else if (key == "t_max") cfg.system.t_max = parse_double(path, line_no, val);
            else if (key == "dt_sample") cfg.system.dt_sample = parse_double(path, line_no, val);
            else if (key == "max_dimension")
                cfg.system.max_dimension = static_cast<int>(parse_int(path, line_no, val));
            else if (key == "model") {
                if (val == "hermitian") cfg.model = ModelKind::Hermitian;
                else if (val == "reduced") cfg.model = ModelKind::Reduced;
                else fail(path, line_no, "model must be 'hermitian' or 'reduced'");
            } else unknown();
        } else if (section == "reservoir1" || section == "reservoir2") {
            ReservoirSpec& r = section == "reservoir1" ? cfg.system.reservoir1
                                                       : cfg.system.reservoir2;
            if (key == "n_modes") r.n_modes = static_cast<int>(parse_int(path, line_no, val));
            else if (key == "freq_step") r.freq_step = parse_double(path, line_no, val);
            else if (key == "coupling") r.coupling = parse_double(path, line_no, val);
            else unknown();
        } else if (section == "reduced") {
            if (key == "gamma1") cfg.reduced.gamma1 = parse_double(path, line_no, val);
            else if (key == "gamma2") cfg.reduced.gamma2 = parse_double(path, line_no, val);
            else unknown();
            saw_gamma = true;
        } else if (section == "ensemble") {
            if (key == "n_states")
                cfg.ensemble.n_states = static_cast<int>(parse_int(path, line_no, val));
            else if (key == "seed")
                cfg.ensemble.seed = static_cast<std::uint64_t>(parse_int(path, line_no, val));
            else unknown();
        } else {  // sweep
            if (key == "t_obs") cfg.sweep.t_obs = parse_double(path, line_no, val);
            else if (key == "n_states")
                cfg.sweep.n_states = static_cast<int>(parse_int(path, line_no, val));
            else if (key == "omega_min") cfg.sweep.omega_min = parse_double(path, line_no, val);
            else if (key == "omega_max") cfg.sweep.omega_max = parse_double(path, line_no, val);
            else if (key == "omega_points")
                cfg.sweep.omega_points = static_cast<int>(parse_int(path, line_no, val));
            else if (key == "log") cfg.sweep.log_spaced = parse_bool(path, line_no, val);
            else unknown();
        }
    }

    if (cfg.model == ModelKind::Hermitian) {
        cfg.system.validate();
        if (saw_gamma) {
            cfg.reduced.omega0 = cfg.system.omega0;
            cfg.reduced.coupling = cfg.system.coupling;
        } else {
            cfg.reduced = reduce(cfg.system);
        }
    } else {
        if (!saw_gamma)
            throw std::runtime_error(path + ": model=reduced requires a [reduced] section");
        cfg.reduced.omega0 = cfg.system.omega0;
        cfg.reduced.coupling = cfg.system.coupling;
    }
    cfg.reduced.validate();
    cfg.ensemble.validate();
    return cfg;
}

RunConfig run_config_from_preset(const Preset& preset) {
    RunConfig cfg;
    cfg.model = preset.model;
    cfg.system = preset.config;
    cfg.reduced = preset.reduced;
    cfg.sweep = preset.sweep;
    cfg.ensemble.n_states = preset.sweep.n_states;
    return cfg;
}

std::string describe(const RunConfig& cfg) {
    char buf[512];
    if (cfg.model == ModelKind::Hermitian) {
        const SystemConfig& s = cfg.system;
        std::snprintf(buf, sizeof buf,
                      "model=hermitian omega0=%.17g coupling=%.17g "
                      "res1=(%d,%.17g,%.17g) res2=(%d,%.17g,%.17g) "
                      "t_max=%.17g dt_sample=%.17g seed=%llu n_states=%d",
                      s.omega0, s.coupling, s.reservoir1.n_modes, s.reservoir1.freq_step,
                      s.reservoir1.coupling, s.reservoir2.n_modes, s.reservoir2.freq_step,
                      s.reservoir2.coupling, s.t_max, s.dt_sample,
                      static_cast<unsigned long long>(cfg.ensemble.seed),
                      cfg.ensemble.n_states);
    } else {
        const ReducedParams& r = cfg.reduced;
        std::snprintf(buf, sizeof buf,
                      "model=reduced omega0=%.17g coupling=%.17g gamma1=%.17g "
                      "gamma2=%.17g seed=%llu n_states=%d",
                      r.omega0, r.coupling, r.gamma1, r.gamma2,
                      static_cast<unsigned long long>(cfg.ensemble.seed),
                      cfg.ensemble.n_states);
    }
    return buf;
}

}  // namespace eps
