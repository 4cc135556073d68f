#include "mayer/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

constexpr double kTwoPi = 6.283185307179586;

// Runs fn(i) for i in [0, n) across a few worker threads. Each index owns
// its output slot, so results are deterministic regardless of scheduling.
void parallel_for(int n, const std::function<void(int)>& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers =
      std::min<int>(n, static_cast<int>(hw == 0 ? 1 : hw));
  if (workers <= 1 || n < 8) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

SweepPoint evaluate_point(const CardioParams& p, const ControlVariant& variant,
                          double mu) {
  SweepPoint pt;
  pt.mu = mu;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    const Spectrum spec = classify_at_equilibrium(p, variant, mu);
    pt.real_eigenvalue = spec.real_eigenvalue;
    if (spec.has_pair()) {
      pt.has_pair = true;
      pt.pair_real_part = spec.pair_real_part;
      pt.pair_imag_part = spec.pair_imag_part;
    } else {
      pt.pair_real_part = nan;
      pt.pair_imag_part = nan;
    }
  } catch (const std::exception&) {
    pt.failed = true;
    pt.pair_real_part = nan;
    pt.pair_imag_part = nan;
    pt.real_eigenvalue = nan;
  }
  return pt;
}

}  // namespace

std::vector<SweepPoint> sweep_mu(const CardioParams& p,
                                 const ControlVariant& variant, double mu_min,
                                 double mu_max, int steps) {
  if (!(mu_min > 0.0) || !(mu_min < mu_max)) {
    throw std::invalid_argument("sweep_mu: require 0 < mu_min < mu_max");
  }
  if (steps < 2) throw std::invalid_argument("sweep_mu: require steps >= 2");
  std::vector<SweepPoint> points(static_cast<size_t>(steps));
  const double dmu = (mu_max - mu_min) / (steps - 1);
  parallel_for(steps, [&](int i) {
    points[static_cast<size_t>(i)] =
        evaluate_point(p, variant, mu_min + dmu * i);
  });
  return points;
}

CrossingResult find_crossing(const CardioParams& p,
                             const ControlVariant& variant, double mu_lo,
                             double mu_hi, double tol) {
  if (!(mu_lo > 0.0) || !(mu_lo < mu_hi)) {
    throw std::invalid_argument("find_crossing: require 0 < mu_lo < mu_hi");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("find_crossing: tol must be positive");

  const auto pair_real = [&](double mu) {
    const Spectrum spec = classify_at_equilibrium(p, variant, mu);
    if (!spec.has_pair()) {
      throw numeric_error("find_crossing: no conjugate pair at mu = " +
                          std::to_string(mu));
    }
    return spec.pair_real_part;
  };

  double lo = mu_lo;
  double hi = mu_hi;
  const double f_lo = pair_real(lo);
  const double f_hi = pair_real(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw numeric_error(
        "find_crossing: bracket [" + std::to_string(mu_lo) + ", " +
        std::to_string(mu_hi) +
        "] does not straddle a crossing (Re at endpoints: " +
        std::to_string(f_lo) + ", " + std::to_string(f_hi) + ")");
  }

  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    ++iterations;
    if (pair_real(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (iterations > 200) break;  // tol below bracket resolution
  }

  CrossingResult result;
  result.mu_star = 0.5 * (lo + hi);
  const Spectrum at_star = classify_at_equilibrium(p, variant, result.mu_star);
  if (!at_star.has_pair()) {
    throw numeric_error("find_crossing: spectrum lost its conjugate pair at mu* = " +
                        std::to_string(result.mu_star));
  }
  result.omega_star = at_star.pair_imag_part;
  result.period_s = 60.0 * kTwoPi / result.omega_star;
  result.bracket_lo = mu_lo;
  result.bracket_hi = mu_hi;
  result.bisection_iterations = iterations;
  return result;
}

ScanResult stability_scan(const CardioParams& p, const ControlVariant& variant,
                          double mu_max, int grid_points) {
  if (!(mu_max > 0.0)) {
    throw std::invalid_argument("stability_scan: mu_max must be positive");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("stability_scan: need at least 2 grid points");
  }

  // Grid over (0, mu_max]: mu_k = mu_max * k / n for k = 1..n.
  std::vector<SweepPoint> points(static_cast<size_t>(grid_points));
  parallel_for(grid_points, [&](int i) {
    const double mu = mu_max * (i + 1) / grid_points;
    points[static_cast<size_t>(i)] = evaluate_point(p, variant, mu);
  });

  ScanResult scan;
  scan.max_pair_real_part = std::numeric_limits<double>::quiet_NaN();
  scan.max_real_part = -std::numeric_limits<double>::infinity();
  for (const SweepPoint& pt : points) {
    if (pt.failed) continue;
    scan.max_real_part = std::max(scan.max_real_part, pt.real_eigenvalue);
    if (pt.has_pair) {
      scan.max_real_part = std::max(scan.max_real_part, pt.pair_real_part);
      if (std::isnan(scan.max_pair_real_part) ||
          pt.pair_real_part > scan.max_pair_real_part) {
        scan.max_pair_real_part = pt.pair_real_part;
      }
    }
  }

  // A bracket needs conjugate pairs at both endpoints.
  for (size_t i = 1; i < points.size(); ++i) {
    const SweepPoint& a = points[i - 1];
    const SweepPoint& b = points[i];
    if (a.failed || b.failed || !a.has_pair || !b.has_pair) continue;
    if (a.pair_real_part < 0.0 && b.pair_real_part > 0.0) {
      scan.stable = false;
      scan.crossing = find_crossing(p, variant, a.mu, b.mu);
      break;
    }
  }
  return scan;
}

ControlVariant boundary_variant(const CardioParams& p, BoundaryFamily family,
                                double secondary) {
  if (family == BoundaryFamily::unstressed_volume) {
    if (!(secondary >= 0.0) || !(secondary < p.v_d_base)) {
      throw std::invalid_argument(
          "boundary_curve: d2 must lie in [0, v_d_base)");
    }
    return ControlVariant::unstressed_volume(2.0 * (p.v_d_base - secondary),
                                             secondary);
  }
  if (!(secondary >= 0.0) || !(secondary < p.c_sv_base)) {
    throw std::invalid_argument(
        "boundary_curve: c2 must lie in [0, c_sv_base)");
  }
  return ControlVariant::venous_compliance(2.0 * (p.c_sv_base - secondary),
                                           secondary);
}

BoundaryCurve boundary_curve(const CardioParams& p, BoundaryFamily family,
                             const std::vector<double>& grid, double mu_max) {
  // Validate the whole grid up front so a bad value fails fast.
  for (double secondary : grid) (void)boundary_variant(p, family, secondary);

  // The scans below already spread their grids across the thread pool, so
  // the outer loop stays serial.
  BoundaryCurve curve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    const double secondary = grid[i];
    BoundaryPoint& pt = curve[i];
    pt.secondary = secondary;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
      const ScanResult scan = stability_scan(
          p, boundary_variant(p, family, secondary), mu_max);
      if (scan.crossing) {
        pt.crossing_found = true;
        pt.mu_star = scan.crossing->mu_star;
        pt.omega_star = scan.crossing->omega_star;
        pt.period_s = scan.crossing->period_s;
      } else {
        pt.mu_star = nan;
        pt.omega_star = nan;
        pt.period_s = nan;
      }
    } catch (const std::exception&) {
      pt.crossing_found = false;
      pt.mu_star = nan;
      pt.omega_star = nan;
      pt.period_s = nan;
    }
  }
  return curve;
}

}  // namespace mayer
