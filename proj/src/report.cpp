#include "mayer/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mayer/errors.hpp"

namespace mayer {

std::string format_full(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file: " + path.string());
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw io_error("error while writing: " + path.string());
}

}  // namespace

void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepPoint>& points) {
  std::ofstream out = open_output(path);
  out << "mu,pair_re,pair_im,real_eig\n";
  for (const SweepPoint& pt : points) {
    out << format_full(pt.mu) << ',';
    if (pt.has_pair) {
      out << format_full(pt.pair_real_part) << ','
          << format_full(pt.pair_imag_part) << ',';
    } else {
      out << ",,";
    }
    if (!pt.failed) out << format_full(pt.real_eigenvalue);
    out << '\n';
  }
  finish_output(out, path);
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& traj) {
  std::ofstream out = open_output(path);
  out << "t_min,v_sa,v_sv,v_pv\n";
  for (size_t i = 0; i < traj.states.size(); ++i) {
    const VolumeState& s = traj.states[i];
    out << format_full(traj.times[i]) << ',' << format_full(s.v_sa) << ','
        << format_full(s.v_sv) << ',' << format_full(s.v_pv) << '\n';
  }
  finish_output(out, path);
}

void write_boundary_csv(const std::filesystem::path& path,
                        const BoundaryCurve& curve) {
  std::ofstream out = open_output(path);
  out << "secondary,mu_star,omega,period_s\n";
  for (const BoundaryPoint& pt : curve) {
    out << format_full(pt.secondary) << ',';
    if (pt.crossing_found) {
      out << format_full(pt.mu_star) << ',' << format_full(pt.omega_star)
          << ',' << format_full(pt.period_s);
    } else {
      out << ",,";
    }
    out << '\n';
  }
  finish_output(out, path);
}

void write_svg_plot(const std::filesystem::path& path, const PlotSeries& series,
                    const std::string& title, const std::string& x_label,
                    const std::string& y_label) {
  constexpr int kWidth = 640;
  constexpr int kHeight = 480;
  constexpr double kLeft = 72.0;
  constexpr double kRight = 24.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 56.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  if (!series.x.empty()) {
    x_lo = *std::min_element(series.x.begin(), series.x.end());
    x_hi = *std::max_element(series.x.begin(), series.x.end());
    y_lo = *std::min_element(series.y.begin(), series.y.end());
    y_hi = *std::max_element(series.y.begin(), series.y.end());
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  if (y_hi <= y_lo) {
    y_lo -= 0.5;
    y_hi = y_lo + 1.0;
  }

  const auto sx = [&](double x) {
    return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w;
  };
  const auto sy = [&](double y) {
    return kTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;
  };
  const auto fmt2 = [](double v) {
    char b[32];
    std::snprintf(b, sizeof(b), "%.2f", v);
    return std::string(b);
  };
  const auto fmt_tick = [](double v) {
    char b[32];
    std::snprintf(b, sizeof(b), "%.4g", v);
    return std::string(b);
  };

  std::ofstream out = open_output(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" font-family=\"sans-serif\""
      << " font-size=\"15\" text-anchor=\"middle\">" << title << "</text>\n";

  // axes
  out << "  <line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop + plot_h)
      << "\" x2=\"" << fmt2(kLeft + plot_w) << "\" y2=\"" << fmt2(kTop + plot_h)
      << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop) << "\" x2=\""
      << fmt2(kLeft) << "\" y2=\"" << fmt2(kTop + plot_h)
      << "\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double fx = x_lo + (x_hi - x_lo) * i / (kTicks - 1);
    const double px = sx(fx);
    out << "  <line x1=\"" << fmt2(px) << "\" y1=\"" << fmt2(kTop + plot_h)
        << "\" x2=\"" << fmt2(px) << "\" y2=\"" << fmt2(kTop + plot_h + 5)
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << fmt2(px) << "\" y=\"" << fmt2(kTop + plot_h + 20)
        << "\" font-family=\"sans-serif\" font-size=\"11\""
        << " text-anchor=\"middle\">" << fmt_tick(fx) << "</text>\n";
    const double fy = y_lo + (y_hi - y_lo) * i / (kTicks - 1);
    const double py = sy(fy);
    out << "  <line x1=\"" << fmt2(kLeft - 5) << "\" y1=\"" << fmt2(py)
        << "\" x2=\"" << fmt2(kLeft) << "\" y2=\"" << fmt2(py)
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << fmt2(kLeft - 8) << "\" y=\"" << fmt2(py + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\""
        << " text-anchor=\"end\">" << fmt_tick(fy) << "</text>\n";
  }

  out << "  <text x=\"" << fmt2(kLeft + plot_w / 2) << "\" y=\""
      << fmt2(kHeight - 12.0)
      << "\" font-family=\"sans-serif\" font-size=\"13\""
      << " text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "  <text x=\"18\" y=\"" << fmt2(kTop + plot_h / 2)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 18 " << fmt2(kTop + plot_h / 2) << ")\">"
      << y_label << "</text>\n";

  if (!series.x.empty()) {
    out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\""
        << " points=\"";
    for (size_t i = 0; i < series.x.size(); ++i) {
      if (i) out << ' ';
      out << fmt2(sx(series.x[i])) << ',' << fmt2(sy(series.y[i]));
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  finish_output(out, path);
}

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path) {
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, value] : manifest.config_snapshot) config[key] = value;
  nlohmann::json doc = {
      {"command_line", manifest.command_line},
      {"config", config},
      {"version", manifest.version},
      {"outputs", manifest.outputs},
      {"duration_seconds", manifest.duration_seconds},
  };
  std::ofstream out = open_output(path);
  out << doc.dump(2) << '\n';
  finish_output(out, path);
}

}  // namespace mayer
