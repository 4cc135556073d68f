#pragma once

/**
 * @file dynamics.hpp
 * @brief Fixed-step RK4 integration and limit-cycle classification.
 */

#include <vector>

#include "mayer/model.hpp"

namespace mayer {

/// Time series on a uniform grid; times in minutes.
struct Trajectory {
  std::vector<double> times;
  std::vector<VolumeState> states;
  double dt = 0.0;
  double t_end = 0.0;
};

enum class CycleClass { decaying, sustained, inconclusive };

/// Classification thresholds. These are fixed constants of the artifact so
/// that test expectations are unambiguous.
/// A trajectory window counts as a sustained oscillation only above this
/// peak-to-trough amplitude of v_sa.
inline constexpr double kSustainedMinAmplitude = 1e-4;  // litres
/// A decaying spiral must fall below this amplitude by the end of the
/// analysis window.
inline constexpr double kDecayedMaxAmplitude = 1e-5;  // litres
/// Cycles with a smaller peak-to-trough swing are integrator roundoff, not
/// oscillation, and are ignored by the classifier.
inline constexpr double kQuiescentAmplitude = 1e-11;  // litres
/// Relative half-width of the steadiness band for the last five cycle
/// amplitudes of a sustained oscillation.
inline constexpr double kSteadinessTol = 0.01;

struct CycleReport {
  CycleClass classification = CycleClass::inconclusive;
  /// Peak-to-trough swing of v_sa over the whole analysis window [l].
  double amplitude = 0.0;
  /// Mean spacing of the significant peaks, converted to seconds (NaN when
  /// fewer than two significant cycles exist).
  double period_s = 0.0;
  /// Times [min] of the strict local maxima of v_sa in the analysis window.
  std::vector<double> peak_times;
};

/// Classic fourth-order Runge-Kutta with fixed step. Before the full run, a
/// companion half-step integration of the first 1% of the horizon estimates
/// the local error; if any component of the two endpoints differs by more
/// than 1e-6 the step is rejected (mayer::numeric_error). Integration also
/// aborts with numeric_error if the state leaves the admissible domain
/// (v_sa <= 0 or reconstructed v_pa <= 0).
///
/// Requires dt > 0 and t_end >= 100*dt.
Trajectory integrate(const CardioParams& p, const ControlVariant& variant,
                     double mu, const VolumeState& initial, double dt,
                     double t_end);

/// Discards the leading `transient_fraction` of the trajectory, finds
/// strict local maxima of v_sa by three-point comparison and classifies the
/// tail. The caller is responsible for supplying a trajectory spanning at
/// least ~20 expected periods; fewer than 6 peaks in the window yield
/// `inconclusive`. Throws std::invalid_argument when fewer than 3 samples
/// remain after the transient discard.
CycleReport detect_cycle(const Trajectory& traj,
                         double transient_fraction = 0.5);

}  // namespace mayer
