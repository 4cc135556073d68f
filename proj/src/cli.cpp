#include "mayer/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mayer/bifurcation.hpp"
#include "mayer/config.hpp"
#include "mayer/dynamics.hpp"
#include "mayer/equilibrium.hpp"
#include "mayer/errors.hpp"
#include "mayer/report.hpp"
#include "mayer/spectral.hpp"

namespace fs = std::filesystem;

namespace mayer {

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<double> mu;
  std::optional<double> mu_lo;
  std::optional<double> mu_hi;
  std::optional<double> mu_min;
  std::optional<double> mu_max;
  std::optional<int> steps;
  std::optional<double> tol;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<double> transient_fraction;
  std::string init;
  std::string boundary_family;
  int grid = 8;
};

std::string join_args(int argc, const char* const* argv) {
  std::string joined;
  for (int i = 0; i < argc; ++i) {
    if (i) joined += ' ';
    joined += argv[i];
  }
  return joined;
}

VolumeState parse_init(const std::string& text) {
  VolumeState s;
  char trailing = '\0';
  const int got = std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &s.v_sa, &s.v_sv,
                              &s.v_pv, &trailing);
  if (got != 3) {
    throw std::invalid_argument("--init expects three comma-separated volumes, got '" +
                                text + "'");
  }
  return s;
}

RunConfig load_config(const CliOptions& opt, bool required = true) {
  RunConfig cfg;
  if (!opt.config_path.empty()) {
    cfg = parse_config(opt.config_path);
  } else if (required) {
    throw std::invalid_argument("--config is required for this subcommand");
  }
  if (opt.mu) {
    if (!(*opt.mu > 0.0)) throw std::invalid_argument("--mu must be positive");
    cfg.mu = *opt.mu;
  }
  if (opt.mu_min) cfg.mu_min = *opt.mu_min;
  if (opt.mu_max) cfg.mu_max = *opt.mu_max;
  if (opt.steps) cfg.steps = *opt.steps;
  if (opt.tol) cfg.tol = *opt.tol;
  if (opt.dt) cfg.dt = *opt.dt;
  if (opt.t_end) cfg.t_end = *opt.t_end;
  if (opt.transient_fraction) cfg.transient_fraction = *opt.transient_fraction;
  return cfg;
}

std::vector<std::pair<std::string, std::string>> snapshot_config(
    const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> snap;
  snap.emplace_back("variant", cfg.variant.name());
  if (cfg.variant.is_active()) {
    snap.emplace_back("slope_coeff", format_full(cfg.variant.slope_coeff));
    snap.emplace_back("offset", format_full(cfg.variant.offset));
  }
  if (cfg.mu) snap.emplace_back("mu", format_full(*cfg.mu));
  const CardioParams& p = cfg.params;
  snap.emplace_back("c_sa", format_full(p.c_sa));
  snap.emplace_back("c_pa", format_full(p.c_pa));
  snap.emplace_back("c_pv", format_full(p.c_pv));
  snap.emplace_back("c_sv", format_full(p.c_sv_base));
  snap.emplace_back("c_l", format_full(p.c_l));
  snap.emplace_back("c_r", format_full(p.c_r));
  snap.emplace_back("r_s", format_full(p.r_s_base));
  snap.emplace_back("r_p", format_full(p.r_p));
  snap.emplace_back("f", format_full(p.f_base));
  snap.emplace_back("v_o", format_full(p.v_o));
  snap.emplace_back("v_c", format_full(p.v_c));
  snap.emplace_back("v_d", format_full(p.v_d_base));
  snap.emplace_back("dt", format_full(cfg.dt));
  snap.emplace_back("t_end", format_full(cfg.t_end));
  snap.emplace_back("transient_fraction", format_full(cfg.transient_fraction));
  snap.emplace_back("mu_min", format_full(cfg.mu_min));
  snap.emplace_back("mu_max", format_full(cfg.mu_max));
  snap.emplace_back("steps", std::to_string(cfg.steps));
  snap.emplace_back("mu_max_scan", format_full(cfg.mu_max_scan));
  snap.emplace_back("tol", format_full(cfg.tol));
  snap.emplace_back("allow_unnormalized",
                    cfg.allow_unnormalized ? "true" : "false");
  return snap;
}

fs::path prepare_out_dir(const CliOptions& opt) {
  fs::path dir(opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw io_error("cannot create output directory " + dir.string() +
                         ": " + ec.message());
  return dir;
}

class ManifestWriter {
 public:
  ManifestWriter(std::string command_line, const RunConfig& cfg)
      : start_(std::chrono::steady_clock::now()) {
    manifest_.command_line = std::move(command_line);
    manifest_.config_snapshot = snapshot_config(cfg);
    manifest_.version = kVersion;
  }

  void record(const std::string& filename) {
    manifest_.outputs.push_back(filename);
  }

  void finish(const fs::path& dir) {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    manifest_.duration_seconds =
        std::chrono::duration<double>(elapsed).count();
    write_manifest(manifest_, dir / "manifest.json");
  }

 private:
  RunManifest manifest_;
  std::chrono::steady_clock::time_point start_;
};

PlotSeries sweep_series(const std::vector<SweepPoint>& points) {
  PlotSeries s;
  for (const SweepPoint& pt : points) {
    if (pt.has_pair) {
      s.x.push_back(pt.mu);
      s.y.push_back(pt.pair_real_part);
    }
  }
  return s;
}

PlotSeries trajectory_series(const Trajectory& traj) {
  PlotSeries s;
  s.x = traj.times;
  s.y.reserve(traj.states.size());
  for (const VolumeState& st : traj.states) s.y.push_back(st.v_sa);
  return s;
}

PlotSeries boundary_series(const BoundaryCurve& curve) {
  PlotSeries s;
  for (const BoundaryPoint& pt : curve) {
    if (pt.crossing_found) {
      s.x.push_back(pt.secondary);
      s.y.push_back(pt.mu_star);
    }
  }
  return s;
}

const char* classification_name(CycleClass c) {
  switch (c) {
    case CycleClass::decaying:
      return "decaying";
    case CycleClass::sustained:
      return "sustained";
    case CycleClass::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

void print_crossing(const CrossingResult& res) {
  std::printf("mu_star=%.6f omega=%.6f rad/min period=%.6f s\n", res.mu_star,
              res.omega_star, res.period_s);
}

int handle_steady(const CliOptions& opt) {
  const RunConfig cfg = load_config(opt);
  const VolumeState guess =
      opt.init.empty() ? default_equilibrium_guess() : parse_init(opt.init);
  const EquilibriumResult res =
      solve_equilibrium(cfg.params, cfg.variant, cfg.require_mu(), guess);
  std::printf("v_sa=%.12g v_sv=%.12g v_pv=%.12g residual=%.3g iterations=%d\n",
              res.state.v_sa, res.state.v_sv, res.state.v_pv,
              res.residual_norm, res.iterations);
  return 0;
}

int handle_eigs(const CliOptions& opt) {
  const RunConfig cfg = load_config(opt);
  const Spectrum spec =
      classify_at_equilibrium(cfg.params, cfg.variant, cfg.require_mu());
  if (spec.has_pair()) {
    std::printf("kind=complex_pair real=%.12g pair_re=%.12g pair_im=%.12g%s\n",
                spec.real_eigenvalue, spec.pair_real_part, spec.pair_imag_part,
                spec.degenerate ? " degenerate=1" : "");
  } else {
    std::printf("kind=three_real roots=%.12g,%.12g,%.12g%s\n",
                spec.eigenvalues[0].real(), spec.eigenvalues[1].real(),
                spec.eigenvalues[2].real(),
                spec.degenerate ? " degenerate=1" : "");
  }
  return 0;
}

int handle_sweep(const CliOptions& opt, const std::string& command_line) {
  const RunConfig cfg = load_config(opt);
  const auto points =
      sweep_mu(cfg.params, cfg.variant, cfg.mu_min, cfg.mu_max, cfg.steps);
  const fs::path dir = prepare_out_dir(opt);
  ManifestWriter manifest(command_line, cfg);
  write_sweep_csv(dir / "sweep.csv", points);
  manifest.record("sweep.csv");
  write_svg_plot(dir / "sweep.svg", sweep_series(points),
                 "Re(lambda) of the conjugate pair vs gain", "mu",
                 "Re(lambda) [1/min]");
  manifest.record("sweep.svg");
  manifest.finish(dir);
  std::printf("wrote sweep.csv and sweep.svg (%d points) to %s\n", cfg.steps,
              dir.string().c_str());
  return 0;
}

int handle_crossing(const CliOptions& opt) {
  const RunConfig cfg = load_config(opt);
  if (!opt.mu_lo || !opt.mu_hi) {
    throw std::invalid_argument("crossing requires --mu-lo and --mu-hi");
  }
  const CrossingResult res =
      find_crossing(cfg.params, cfg.variant, *opt.mu_lo, *opt.mu_hi, cfg.tol);
  print_crossing(res);
  return 0;
}

int handle_scan(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  if (opt.mu_max) cfg.mu_max_scan = *opt.mu_max;
  const ScanResult res =
      stability_scan(cfg.params, cfg.variant, cfg.mu_max_scan);
  if (res.crossing) {
    std::printf("crossing-found ");
    print_crossing(*res.crossing);
  } else {
    std::printf("stable-up-to-mu-max mu_max=%.6g max_pair_re=%.6g max_re=%.6g\n",
                cfg.mu_max_scan, res.max_pair_real_part, res.max_real_part);
  }
  return 0;
}

int handle_boundary(const CliOptions& opt, const std::string& command_line) {
  RunConfig cfg = load_config(opt, /*required=*/false);
  if (opt.mu_max) cfg.mu_max_scan = *opt.mu_max;
  BoundaryFamily family;
  if (opt.boundary_family == "vd") {
    family = BoundaryFamily::unstressed_volume;
  } else if (opt.boundary_family == "csv") {
    family = BoundaryFamily::venous_compliance;
  } else {
    throw std::invalid_argument("--variant must be vd or csv");
  }
  if (opt.grid < 1) throw std::invalid_argument("--grid must be at least 1");
  const double base = family == BoundaryFamily::unstressed_volume
                          ? cfg.params.v_d_base
                          : cfg.params.c_sv_base;
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(opt.grid));
  for (int i = 0; i < opt.grid; ++i) grid.push_back(base * i / opt.grid);
  const BoundaryCurve curve =
      boundary_curve(cfg.params, family, grid, cfg.mu_max_scan);
  const fs::path dir = prepare_out_dir(opt);
  ManifestWriter manifest(command_line, cfg);
  write_boundary_csv(dir / "boundary.csv", curve);
  manifest.record("boundary.csv");
  write_svg_plot(dir / "boundary.svg", boundary_series(curve),
                 "Stability boundary",
                 family == BoundaryFamily::unstressed_volume
                     ? "D2 [l]"
                     : "C2 [l/mmHg]",
                 "mu*");
  manifest.record("boundary.svg");
  manifest.finish(dir);
  std::printf("wrote boundary.csv and boundary.svg (%zu grid points) to %s\n",
              curve.size(), dir.string().c_str());
  return 0;
}

int handle_simulate(const CliOptions& opt, const std::string& command_line) {
  const RunConfig cfg = load_config(opt);
  const VolumeState initial =
      opt.init.empty() ? default_equilibrium_guess() : parse_init(opt.init);
  const Trajectory traj = integrate(cfg.params, cfg.variant, cfg.require_mu(),
                                    initial, cfg.dt, cfg.t_end);
  const CycleReport report = detect_cycle(traj, cfg.transient_fraction);
  const fs::path dir = prepare_out_dir(opt);
  ManifestWriter manifest(command_line, cfg);
  write_trajectory_csv(dir / "trajectory.csv", traj);
  manifest.record("trajectory.csv");
  write_svg_plot(dir / "trajectory.svg", trajectory_series(traj),
                 "Systemic arterial volume", "t [min]", "v_sa [l]");
  manifest.record("trajectory.svg");
  manifest.finish(dir);
  std::printf("classification=%s amplitude=%.6g period_s=%.6g peaks=%zu\n",
              classification_name(report.classification), report.amplitude,
              report.period_s, report.peak_times.size());
  return 0;
}

// ---------------------------------------------------------------------------
// reproduce: the data behind Figures 1-4 plus a summary of the crossing
// points, all regenerated from the model defaults.
// ---------------------------------------------------------------------------

struct FigureConfig {
  const char* stem;
  ControlVariant variant;
  double mu_min;
  double mu_max;
};

int handle_reproduce(const CliOptions& opt, const std::string& command_line) {
  const RunConfig cfg;  // Table-1 defaults; reproduce takes no config file
  const fs::path dir = prepare_out_dir(opt);
  ManifestWriter manifest(command_line, cfg);
  const CardioParams& p = cfg.params;

  const FigureConfig sweeps[] = {
      {"fig1a", ControlVariant::unstressed_volume(4.0, 0.0), 1.0, 40.0},
      {"fig1b", ControlVariant::unstressed_volume(3.0, 0.5), 1.0, 50.0},
      {"fig1c", ControlVariant::unstressed_volume(2.0, 1.0), 1.0, 60.0},
      {"fig1d", ControlVariant::unstressed_volume(1.0, 1.5), 1.0, 100.0},
      {"fig2a", ControlVariant::venous_compliance(1.5, 0.0), 1.0, 50.0},
      {"fig2b", ControlVariant::venous_compliance(1.0, 0.25), 1.0, 60.0},
      {"fig2c", ControlVariant::venous_compliance(0.5, 0.5), 1.0, 100.0},
  };
  for (const FigureConfig& fig : sweeps) {
    const auto points = sweep_mu(p, fig.variant, fig.mu_min, fig.mu_max, 200);
    write_sweep_csv(dir / (std::string(fig.stem) + ".csv"), points);
    manifest.record(std::string(fig.stem) + ".csv");
    write_svg_plot(dir / (std::string(fig.stem) + ".svg"), sweep_series(points),
                   std::string(fig.stem) + ": Re(lambda) vs gain", "mu",
                   "Re(lambda) [1/min]");
    manifest.record(std::string(fig.stem) + ".svg");
  }

  struct PhasePortrait {
    const char* stem;
    double mu;
    VolumeState initial;
  };
  const PhasePortrait portraits[] = {
      {"fig3a", 10.0, {1.0, 3.4, 0.5}},
      {"fig3b", 20.0, {1.0, 3.47, 0.39}},
      {"fig3c", 20.0, {1.0, 3.4, 0.5}},
  };
  const ControlVariant fig3_variant = ControlVariant::unstressed_volume(4.0, 0.0);
  for (const PhasePortrait& portrait : portraits) {
    const Trajectory traj =
        integrate(p, fig3_variant, portrait.mu, portrait.initial, 1e-4, 10.0);
    write_trajectory_csv(dir / (std::string(portrait.stem) + ".csv"), traj);
    manifest.record(std::string(portrait.stem) + ".csv");
    write_svg_plot(dir / (std::string(portrait.stem) + ".svg"),
                   trajectory_series(traj),
                   std::string(portrait.stem) + ": v_sa(t)", "t [min]",
                   "v_sa [l]");
    manifest.record(std::string(portrait.stem) + ".svg");
  }

  const std::vector<double> vd_grid = {0.0,  0.25, 0.5,  0.75,
                                       1.0,  1.25, 1.5,  1.75};
  const std::vector<double> csv_grid = {0.0, 0.125, 0.25, 0.375, 0.5, 0.625};
  const BoundaryCurve vd_curve =
      boundary_curve(p, BoundaryFamily::unstressed_volume, vd_grid, 100.0);
  const BoundaryCurve csv_curve =
      boundary_curve(p, BoundaryFamily::venous_compliance, csv_grid, 100.0);
  write_boundary_csv(dir / "fig4_vd.csv", vd_curve);
  manifest.record("fig4_vd.csv");
  write_svg_plot(dir / "fig4_vd.svg", boundary_series(vd_curve),
                 "fig4: crossing gain vs D2", "D2 [l]", "mu*");
  manifest.record("fig4_vd.svg");
  write_boundary_csv(dir / "fig4_csv.csv", csv_curve);
  manifest.record("fig4_csv.csv");
  write_svg_plot(dir / "fig4_csv.svg", boundary_series(csv_curve),
                 "fig4: crossing gain vs C2", "C2 [l/mmHg]", "mu*");
  manifest.record("fig4_csv.svg");

  // The seven appendix configurations and their located crossings.
  struct NamedConfig {
    const char* family;
    ControlVariant variant;
  };
  const NamedConfig named[] = {
      {"unstressed_volume", ControlVariant::unstressed_volume(4.0, 0.0)},
      {"unstressed_volume", ControlVariant::unstressed_volume(3.0, 0.5)},
      {"unstressed_volume", ControlVariant::unstressed_volume(2.0, 1.0)},
      {"unstressed_volume", ControlVariant::unstressed_volume(1.0, 1.5)},
      {"venous_compliance", ControlVariant::venous_compliance(1.5, 0.0)},
      {"venous_compliance", ControlVariant::venous_compliance(1.0, 0.25)},
      {"venous_compliance", ControlVariant::venous_compliance(0.5, 0.5)},
  };
  std::vector<CrossingResult> crossings;
  {
    std::ofstream out(dir / "crossings.csv", std::ios::binary);
    if (!out) throw io_error("cannot open " + (dir / "crossings.csv").string());
    out << "family,slope_coeff,offset,mu_star,omega,period_s\n";
    for (const NamedConfig& config : named) {
      const ScanResult scan = stability_scan(p, config.variant, 100.0);
      if (!scan.crossing) {
        throw numeric_error(std::string("reproduce: no crossing below mu=100 for ") +
                            config.variant.name());
      }
      crossings.push_back(*scan.crossing);
      out << config.family << ',' << format_full(config.variant.slope_coeff)
          << ',' << format_full(config.variant.offset) << ','
          << format_full(scan.crossing->mu_star) << ','
          << format_full(scan.crossing->omega_star) << ','
          << format_full(scan.crossing->period_s) << '\n';
    }
    out.flush();
    if (!out) throw io_error("error while writing crossings.csv");
  }
  manifest.record("crossings.csv");
  {
    PlotSeries series;
    for (size_t i = 0; i < crossings.size(); ++i) {
      series.x.push_back(static_cast<double>(i + 1));
      series.y.push_back(crossings[i].mu_star);
    }
    write_svg_plot(dir / "crossings.svg", series,
                   "crossing gain per configuration", "configuration index",
                   "mu*");
    manifest.record("crossings.svg");
  }

  {
    std::ofstream out(dir / "summary.txt", std::ios::binary);
    if (!out) throw io_error("cannot open " + (dir / "summary.txt").string());
    char line[256];
    out << "Hopf crossing points of the baroreflex feedback loops\n";
    out << "(gain mu*, angular frequency omega, oscillation period)\n\n";
    for (size_t i = 0; i < crossings.size(); ++i) {
      std::snprintf(line, sizeof(line),
                    "%-18s x1=%-5g x2=%-5g  mu_star=%.10g  omega=%.10g rad/min"
                    "  period=%.10g s\n",
                    named[i].family, named[i].variant.slope_coeff,
                    named[i].variant.offset, crossings[i].mu_star,
                    crossings[i].omega_star, crossings[i].period_s);
      out << line;
    }
    out.flush();
    if (!out) throw io_error("error while writing summary.txt");
  }
  manifest.record("summary.txt");

  manifest.finish(dir);
  std::printf("reproduced figure data in %s (13 CSV + 13 SVG + summary.txt)\n",
              dir.string().c_str());
  return 0;
}

void add_common_options(CLI::App* cmd, CliOptions& opt, bool with_config = true) {
  if (with_config) {
    cmd->add_option("--config", opt.config_path, "run configuration file");
  }
  cmd->add_option("--out", opt.out_dir, "output directory");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CliOptions opt;
  CLI::App app{"Stability, Hopf bifurcation and Mayer-wave analysis of a "
               "baroreflex-controlled circulation model"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CLI::App* steady = app.add_subcommand("steady", "solve the steady state");
  add_common_options(steady, opt);
  steady->add_option("--mu", opt.mu, "baroreflex gain");
  steady->add_option("--init", opt.init, "initial guess a,b,c [l]");

  CLI::App* eigs =
      app.add_subcommand("eigs", "eigenvalues of the linearization at the "
                                 "steady state");
  add_common_options(eigs, opt);
  eigs->add_option("--mu", opt.mu, "baroreflex gain");

  CLI::App* sweep =
      app.add_subcommand("sweep", "sweep the gain and record the spectrum");
  add_common_options(sweep, opt);
  sweep->add_option("--mu-min", opt.mu_min, "lower end of the gain grid");
  sweep->add_option("--mu-max", opt.mu_max, "upper end of the gain grid");
  sweep->add_option("--steps", opt.steps, "number of grid points");

  CLI::App* crossing =
      app.add_subcommand("crossing", "locate a Hopf crossing by bisection");
  add_common_options(crossing, opt);
  crossing->add_option("--mu-lo", opt.mu_lo, "bracket lower end")->required();
  crossing->add_option("--mu-hi", opt.mu_hi, "bracket upper end")->required();
  crossing->add_option("--tol", opt.tol, "bisection tolerance in mu");

  CLI::App* scan = app.add_subcommand(
      "scan", "scan (0, mu_max] for stability or a crossing");
  add_common_options(scan, opt);
  scan->add_option("--mu-max", opt.mu_max, "scan upper limit");

  CLI::App* boundary = app.add_subcommand(
      "boundary", "two-parameter stability boundary for one family");
  add_common_options(boundary, opt);
  boundary->add_option("--variant", opt.boundary_family,
                       "family: vd (unstressed volume) or csv (compliance)")
      ->required();
  boundary->add_option("--grid", opt.grid, "number of secondary grid points");
  boundary->add_option("--mu-max", opt.mu_max, "scan upper limit");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "integrate the model and classify the trajectory");
  add_common_options(simulate, opt);
  simulate->add_option("--mu", opt.mu, "baroreflex gain");
  simulate->add_option("--init", opt.init, "initial state a,b,c [l]");
  simulate->add_option("--dt", opt.dt, "time step [min]");
  simulate->add_option("--t-end", opt.t_end, "horizon [min]");
  simulate->add_option("--transient-fraction", opt.transient_fraction,
                       "leading fraction discarded before cycle detection");

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "regenerate the figure data and crossing summary");
  add_common_options(reproduce, opt, /*with_config=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string command_line = join_args(argc, argv);
  try {
    if (steady->parsed()) return handle_steady(opt);
    if (eigs->parsed()) return handle_eigs(opt);
    if (sweep->parsed()) return handle_sweep(opt, command_line);
    if (crossing->parsed()) return handle_crossing(opt);
    if (scan->parsed()) return handle_scan(opt);
    if (boundary->parsed()) return handle_boundary(opt, command_line);
    if (simulate->parsed()) return handle_simulate(opt, command_line);
    if (reproduce->parsed()) return handle_reproduce(opt, command_line);
    std::fprintf(stderr, "mayerwave: no subcommand selected\n");
    return 1;
  } catch (const io_error& e) {
    std::fprintf(stderr, "mayerwave: %s\n", e.what());
    return 3;
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "mayerwave: %s\n", e.what());
    return 3;
  } catch (const numeric_error& e) {
    std::fprintf(stderr, "mayerwave: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "mayerwave: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "mayerwave: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "mayerwave: %s\n", e.what());
    return 2;
  }
}

}  // namespace mayer
