// csv.hpp — CSV emission with full round-trip float precision and a
// self-describing header comment.

#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "epsim/analysis.hpp"
#include "epsim/propagation.hpp"
#include "epsim/riccati.hpp"

namespace eps {

class CsvWriter {
public:
    // comment (the resolved configuration) is written as "# ..." before the
    // header row.
    CsvWriter(const std::string& path, const std::string& comment,
              const std::string& header);

    void cell(double v);
    void cell(long long v);
    void cell(const std::string& v);
    void end_row();

    bool good() const { return static_cast<bool>(out_); }

private:
    std::ofstream out_;
    bool row_open_ = false;
};

std::string format_double(double v);  // shortest round-trip decimal

// t,re_a1,im_a1,re_a2,im_a2,abs_a1,abs_a2,model[,re_b1,im_b1,...]
void write_trajectory_csv(const std::string& path, const std::string& comment,
                          const Trajectory& traj, const std::string& model_tag,
                          const Trajectory* overlay = nullptr,
                          const std::string& overlay_tag = "reduced");

// omega,abs_D12,re_D12,im_D12,re_meanI,im_meanI,n_valid,n_discarded,T,seed
void write_sweep_csv(const std::string& path, const std::string& comment,
                     const std::vector<SweepResult>& results);

// re,im,dre_dt,dim_dt
void write_portrait_csv(const std::string& path, const std::string& comment,
                        const Portrait& portrait);

// t,re_A,im_A,escaped
void write_ratio_trajectories_csv(const std::string& path, const std::string& comment,
                                  const std::vector<RatioTrajectory>& trajectories);

// peak_time,oscillator
void write_diagnostics_csv(const std::string& path, const std::string& comment,
                           const RevivalDiagnostics& diag);

}  // namespace eps
