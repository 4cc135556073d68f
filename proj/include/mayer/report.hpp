#pragma once

/**
 * @file report.hpp
 * @brief CSV, SVG and run-manifest emission.
 *
 * CSVs carry a header row, one record per line, `.` decimal separator and
 * full 17-significant-digit precision, so identical runs produce identical
 * bytes. SVG plots are self-contained single-polyline line charts meant for
 * quick inspection; the CSVs are the testable contract.
 */

#include <filesystem>
#include <string>
#include <vector>

#include "mayer/bifurcation.hpp"
#include "mayer/dynamics.hpp"

namespace mayer {

/// Full-precision (%.17g) decimal rendering used in all CSV output.
std::string format_full(double value);

/// Provenance record for a batch of emitted files.
struct RunManifest {
  std::string command_line;
  std::vector<std::pair<std::string, std::string>> config_snapshot;
  std::string version;
  std::vector<std::string> outputs;  ///< file names relative to the out dir
  double duration_seconds = 0.0;
};

/// Columns: mu,pair_re,pair_im,real_eig. Points without a conjugate pair
/// leave the pair cells empty; failed points leave all value cells empty.
void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepPoint>& points);

/// Columns: t_min,v_sa,v_sv,v_pv.
void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& traj);

/// Columns: secondary,mu_star,omega,period_s. Stable-up-to-mu-max rows
/// leave the numeric cells empty.
void write_boundary_csv(const std::filesystem::path& path,
                        const BoundaryCurve& curve);

/// One series of a line plot.
struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
};

/// Self-contained SVG line chart: one polyline, labeled axes, no external
/// assets.
void write_svg_plot(const std::filesystem::path& path, const PlotSeries& series,
                    const std::string& title, const std::string& x_label,
                    const std::string& y_label);

/// Writes the manifest as JSON.
void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path);

}  // namespace mayer
