#include "epsim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace eps {

std::string format_double(double v) {
    char buf[40];
    // shortest representation that round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& comment,
                     const std::string& header)
    : out_(path) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    if (!comment.empty()) out_ << "# " << comment << "\n";
    out_ << header << "\n";
}

void CsvWriter::cell(double v) {
    if (row_open_) out_ << ',';
    out_ << format_double(v);
    row_open_ = true;
}

void CsvWriter::cell(long long v) {
    if (row_open_) out_ << ',';
    out_ << v;
    row_open_ = true;
}

void CsvWriter::cell(const std::string& v) {
    if (row_open_) out_ << ',';
    out_ << v;
    row_open_ = true;
}

void CsvWriter::end_row() {
    out_ << "\n";
    row_open_ = false;
}

void write_trajectory_csv(const std::string& path, const std::string& comment,
                          const Trajectory& traj, const std::string& model_tag,
                          const Trajectory* overlay, const std::string& overlay_tag) {
    std::string header = "t,re_a1,im_a1,re_a2,im_a2,abs_a1,abs_a2,model";
    const bool full = !traj.full_states.empty();
    if (full) {
        const Eigen::Index d = traj.full_states.front().size();
        for (Eigen::Index k = 2; k < d; ++k) {
            const std::string name = "m" + std::to_string(k - 1);
            header += ",re_" + name + ",im_" + name;
        }
    }
    CsvWriter w(path, comment, header);
    const auto emit = [&](const Trajectory& t, const std::string& tag, bool with_full) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            w.cell(t.times[i]);
            w.cell(t.a1[i].real());
            w.cell(t.a1[i].imag());
            w.cell(t.a2[i].real());
            w.cell(t.a2[i].imag());
            w.cell(std::abs(t.a1[i]));
            w.cell(std::abs(t.a2[i]));
            w.cell(tag);
            if (with_full)
                for (Eigen::Index k = 2; k < t.full_states[i].size(); ++k) {
                    w.cell(t.full_states[i](k).real());
                    w.cell(t.full_states[i](k).imag());
                }
            w.end_row();
        }
    };
    emit(traj, model_tag, full);
    if (overlay) emit(*overlay, overlay_tag, false);
}

void write_sweep_csv(const std::string& path, const std::string& comment,
                     const std::vector<SweepResult>& results) {
    CsvWriter w(path, comment,
                "omega,abs_D12,re_D12,im_D12,re_meanI,im_meanI,n_valid,n_discarded,T,seed");
    for (const SweepResult& r : results) {
        w.cell(r.coupling);
        if (r.ok) {
            w.cell(r.abs_var);
            w.cell(r.var_D.real());
            w.cell(r.var_D.imag());
            w.cell(r.mean_I.real());
            w.cell(r.mean_I.imag());
        } else {
            for (int i = 0; i < 5; ++i) w.cell(std::string("nan"));
        }
        w.cell(static_cast<long long>(r.n_valid));
        w.cell(static_cast<long long>(r.n_discarded));
        w.cell(r.t_obs);
        w.cell(static_cast<long long>(r.seed));
        w.end_row();
    }
}

void write_portrait_csv(const std::string& path, const std::string& comment,
                        const Portrait& portrait) {
    CsvWriter w(path, comment, "re,im,dre_dt,dim_dt");
    for (std::size_t i = 0; i < portrait.grid.size(); ++i) {
        w.cell(portrait.grid[i].re);
        w.cell(portrait.grid[i].im);
        w.cell(portrait.field[i][0]);
        w.cell(portrait.field[i][1]);
        w.end_row();
    }
}

void write_ratio_trajectories_csv(const std::string& path, const std::string& comment,
                                  const std::vector<RatioTrajectory>& trajectories) {
    CsvWriter w(path, comment, "trajectory,t,re_A,im_A,escaped");
    for (std::size_t k = 0; k < trajectories.size(); ++k) {
        const RatioTrajectory& t = trajectories[k];
        for (std::size_t i = 0; i < t.times.size(); ++i) {
            w.cell(static_cast<long long>(k));
            w.cell(t.times[i]);
            w.cell(t.points[i].re);
            w.cell(t.points[i].im);
            w.cell(static_cast<long long>(t.escaped ? 1 : 0));
            w.end_row();
        }
    }
}

void write_diagnostics_csv(const std::string& path, const std::string& comment,
                           const RevivalDiagnostics& diag) {
    CsvWriter w(path, comment + " sync_score=" + format_double(diag.sync_score),
                "peak_time,oscillator");
    for (double t : diag.peaks1) {
        w.cell(t);
        w.cell(1ll);
        w.end_row();
    }
    for (double t : diag.peaks2) {
        w.cell(t);
        w.cell(2ll);
        w.end_row();
    }
}

}  // namespace eps
