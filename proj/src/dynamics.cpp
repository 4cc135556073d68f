#include "mayer/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

VolumeState axpy(const VolumeState& y, double a, const VolumeState& x) {
  return {y.v_sa + a * x.v_sa, y.v_sv + a * x.v_sv, y.v_pv + a * x.v_pv};
}

VolumeState rk4_step(const CardioParams& p, const ControlVariant& variant,
                     double mu, const VolumeState& y, double dt) {
  const VolumeState k1 = rhs(p, variant, mu, y);
  const VolumeState k2 = rhs(p, variant, mu, axpy(y, 0.5 * dt, k1));
  const VolumeState k3 = rhs(p, variant, mu, axpy(y, 0.5 * dt, k2));
  const VolumeState k4 = rhs(p, variant, mu, axpy(y, dt, k3));
  VolumeState out = y;
  const double w = dt / 6.0;
  out.v_sa += w * (k1.v_sa + 2.0 * k2.v_sa + 2.0 * k3.v_sa + k4.v_sa);
  out.v_sv += w * (k1.v_sv + 2.0 * k2.v_sv + 2.0 * k3.v_sv + k4.v_sv);
  out.v_pv += w * (k1.v_pv + 2.0 * k2.v_pv + 2.0 * k3.v_pv + k4.v_pv);
  return out;
}

}  // namespace

Trajectory integrate(const CardioParams& p, const ControlVariant& variant,
                     double mu, const VolumeState& initial, double dt,
                     double t_end) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
  if (!(t_end >= 100.0 * dt)) {
    throw std::invalid_argument("integrate: t_end must be at least 100*dt");
  }
  if (!admissible(p, initial)) {
    throw std::domain_error("integrate: initial state is not admissible");
  }

  const long long steps = static_cast<long long>(std::floor(t_end / dt));

  // Step-size guard: integrate the first 1% of the horizon at dt and dt/2
  // and compare the endpoints component-wise.
  {
    const long long guard_steps =
        std::max<long long>(1, static_cast<long long>(std::llround(0.01 * steps)));
    VolumeState full = initial;
    for (long long i = 0; i < guard_steps; ++i) {
      full = rk4_step(p, variant, mu, full, dt);
    }
    VolumeState half = initial;
    for (long long i = 0; i < 2 * guard_steps; ++i) {
      half = rk4_step(p, variant, mu, half, 0.5 * dt);
    }
    const double discrepancy =
        std::max({std::abs(full.v_sa - half.v_sa),
                  std::abs(full.v_sv - half.v_sv),
                  std::abs(full.v_pv - half.v_pv)});
    if (discrepancy > 1e-6) {
      throw numeric_error(
          "integrate: dt = " + std::to_string(dt) +
          " rejected; half-step check differs by " +
          std::to_string(discrepancy) + " over the first 1% of the horizon");
    }
  }

  Trajectory traj;
  traj.dt = dt;
  traj.t_end = t_end;
  traj.times.reserve(static_cast<size_t>(steps + 1));
  traj.states.reserve(static_cast<size_t>(steps + 1));
  VolumeState y = initial;
  traj.times.push_back(0.0);
  traj.states.push_back(y);
  for (long long i = 1; i <= steps; ++i) {
    y = rk4_step(p, variant, mu, y, dt);
    if (!admissible(p, y)) {
      throw numeric_error("integrate: state left the admissible domain at t = " +
                          std::to_string(i * dt) + " min");
    }
    traj.times.push_back(i * dt);
    traj.states.push_back(y);
  }
  return traj;
}

CycleReport detect_cycle(const Trajectory& traj, double transient_fraction) {
  if (!(transient_fraction >= 0.0) || !(transient_fraction < 1.0)) {
    throw std::invalid_argument(
        "detect_cycle: transient_fraction must lie in [0, 1)");
  }
  const size_t n = traj.states.size();
  const size_t start =
      static_cast<size_t>(std::floor(static_cast<double>(n) * transient_fraction));
  if (n < start + 3) {
    throw std::invalid_argument(
        "detect_cycle: fewer than 3 samples remain after the transient discard");
  }

  CycleReport report;

  double lo = traj.states[start].v_sa;
  double hi = lo;
  std::vector<size_t> peaks;
  for (size_t i = start; i < n; ++i) {
    const double v = traj.states[i].v_sa;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (i > start && i + 1 < n && traj.states[i - 1].v_sa < v &&
        v > traj.states[i + 1].v_sa) {
      peaks.push_back(i);
    }
  }
  report.amplitude = hi - lo;
  report.peak_times.reserve(peaks.size());
  for (size_t idx : peaks) report.peak_times.push_back(traj.times[idx]);
  report.period_s = std::numeric_limits<double>::quiet_NaN();

  if (peaks.size() < 6) {
    report.classification = CycleClass::inconclusive;
    return report;
  }

  // Peak-to-trough amplitude of each cycle between consecutive peaks.
  // Cycles below the quiescence floor are integrator roundoff and carry no
  // information about the attractor.
  std::vector<double> cycle_amps;
  std::vector<double> cycle_spacings;
  cycle_amps.reserve(peaks.size() - 1);
  for (size_t k = 0; k + 1 < peaks.size(); ++k) {
    double trough = traj.states[peaks[k]].v_sa;
    for (size_t i = peaks[k]; i <= peaks[k + 1]; ++i) {
      trough = std::min(trough, traj.states[i].v_sa);
    }
    const double amp = traj.states[peaks[k]].v_sa - trough;
    if (amp >= kQuiescentAmplitude) {
      cycle_amps.push_back(amp);
      cycle_spacings.push_back(traj.times[peaks[k + 1]] - traj.times[peaks[k]]);
    }
  }

  if (!cycle_spacings.empty()) {
    double sum = 0.0;
    for (double s : cycle_spacings) sum += s;
    report.period_s = 60.0 * sum / static_cast<double>(cycle_spacings.size());
  }

  const bool big_enough = report.amplitude > kSustainedMinAmplitude;
  if (big_enough && cycle_amps.size() >= 5) {
    double mean5 = 0.0;
    for (size_t k = cycle_amps.size() - 5; k < cycle_amps.size(); ++k) {
      mean5 += cycle_amps[k];
    }
    mean5 /= 5.0;
    bool steady = true;
    for (size_t k = cycle_amps.size() - 5; k < cycle_amps.size(); ++k) {
      if (std::abs(cycle_amps[k] - mean5) > kSteadinessTol * mean5) {
        steady = false;
        break;
      }
    }
    if (steady) {
      report.classification = CycleClass::sustained;
      return report;
    }
  }

  if (!cycle_amps.empty()) {
    bool decreasing = true;
    for (size_t k = 0; k + 1 < cycle_amps.size(); ++k) {
      if (!(cycle_amps[k] > cycle_amps[k + 1])) {
        decreasing = false;
        break;
      }
    }
    if (decreasing && cycle_amps.back() < kDecayedMaxAmplitude) {
      report.classification = CycleClass::decaying;
      return report;
    }
  }

  report.classification = CycleClass::inconclusive;
  return report;
}

}  // namespace mayer
