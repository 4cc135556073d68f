#include <doctest.h>

#include <cmath>

#include "mayer/bifurcation.hpp"
#include "mayer/dynamics.hpp"
#include "mayer/errors.hpp"

using namespace mayer;

namespace {

const ControlVariant kVolumeControl = ControlVariant::unstressed_volume(4.0, 0.0);

double max_deviation(const Trajectory& traj, const VolumeState& ref) {
  double worst = 0.0;
  for (const VolumeState& s : traj.states) {
    worst = std::max({worst, std::abs(s.v_sa - ref.v_sa),
                      std::abs(s.v_sv - ref.v_sv), std::abs(s.v_pv - ref.v_pv)});
  }
  return worst;
}

}  // namespace

TEST_CASE("the equilibrium is a fixed point of the integrator") {
  const CardioParams p;
  const VolumeState eq{1.0, 3.5, 0.4};
  const Trajectory traj = integrate(p, kVolumeControl, 15.0, eq, 1e-4, 5.0);
  CHECK(max_deviation(traj, eq) <= 1e-9);
}

TEST_CASE("trajectory grid bookkeeping") {
  const CardioParams p;
  const Trajectory traj =
      integrate(p, kVolumeControl, 15.0, {1.0, 3.5, 0.4}, 3e-4, 0.1);
  const size_t expected =
      static_cast<size_t>(std::floor(0.1 / 3e-4)) + 1;
  CHECK(traj.states.size() == expected);
  CHECK(traj.times.size() == expected);
  CHECK(traj.times.front() == 0.0);
  CHECK(traj.times.back() <= 0.1);
  CHECK(traj.dt == 3e-4);
}

TEST_CASE("integration argument and domain failures") {
  const CardioParams p;
  const VolumeState eq{1.0, 3.5, 0.4};
  CHECK_THROWS_AS(integrate(p, kVolumeControl, 15.0, eq, -1e-4, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate(p, kVolumeControl, 15.0, eq, 1e-2, 0.5),
                  std::invalid_argument);  // t_end < 100 dt
  CHECK_THROWS_AS(integrate(p, kVolumeControl, 15.0, {1.0, 3.7, 0.4}, 1e-4, 1.0),
                  std::domain_error);  // v_pa < 0 at the start
}

TEST_CASE("too-coarse steps are rejected by the half-step guard") {
  const CardioParams p;
  CHECK_THROWS_AS(
      integrate(p, kVolumeControl, 20.0, {1.0, 3.4, 0.5}, 0.01, 1.0),
      numeric_error);
}

TEST_CASE("integration aborts when the pulmonary artery empties") {
  // Overfilled arteries and drained veins drive backward right-heart flow,
  // so the remaining pulmonary arterial volume empties within milliseconds.
  const CardioParams p;
  CHECK_THROWS_AS(
      integrate(p, kVolumeControl, 20.0, {4.4, 0.5, 0.05}, 1e-4, 0.05),
      numeric_error);
}

TEST_CASE("fourth-order self-convergence") {
  // binary step sizes so every grid lands exactly on t_end
  const CardioParams p;
  const VolumeState start{1.0, 3.4, 0.5};
  const double t_end = 0.125;
  const auto endpoint = [&](double dt) {
    const Trajectory traj = integrate(p, kVolumeControl, 20.0, start, dt, t_end);
    return traj.states.back();
  };
  const VolumeState ref = endpoint(1.0 / 131072.0);  // dt/16 of the finest
  double errs[3];
  const double dts[3] = {1.0 / 2048.0, 1.0 / 4096.0, 1.0 / 8192.0};
  for (int i = 0; i < 3; ++i) {
    const VolumeState e = endpoint(dts[i]);
    errs[i] = std::max({std::abs(e.v_sa - ref.v_sa), std::abs(e.v_sv - ref.v_sv),
                        std::abs(e.v_pv - ref.v_pv)});
    CHECK(errs[i] > 0.0);
  }
  // halving dt should shrink the error by 16, within a factor of 2
  for (int i = 0; i + 1 < 3; ++i) {
    const double ratio = errs[i] / errs[i + 1];
    CHECK(ratio > 8.0);
    CHECK(ratio < 32.0);
  }
}

TEST_CASE("subcritical gain decays, supercritical gain sustains") {
  const CardioParams p;

  SUBCASE("gain below the crossing") {
    const Trajectory traj =
        integrate(p, kVolumeControl, 10.0, {1.0, 3.4, 0.5}, 2e-4, 10.0);
    const CycleReport report = detect_cycle(traj, 0.5);
    CHECK(report.classification == CycleClass::decaying);
    CHECK(report.amplitude < kSustainedMinAmplitude);
  }

  SUBCASE("gain above the crossing, both basin points") {
    const Trajectory a =
        integrate(p, kVolumeControl, 20.0, {1.0, 3.47, 0.39}, 1e-4, 10.0);
    const CycleReport ra = detect_cycle(a, 0.5);
    CHECK(ra.classification == CycleClass::sustained);

    const Trajectory b =
        integrate(p, kVolumeControl, 20.0, {1.0, 3.4, 0.5}, 1e-4, 10.0);
    const CycleReport rb = detect_cycle(b, 0.5);
    CHECK(rb.classification == CycleClass::sustained);

    // same attractor: amplitudes agree to 2%
    CHECK(std::abs(ra.amplitude - rb.amplitude) <=
          0.02 * std::max(ra.amplitude, rb.amplitude));

    // the cycle period tracks the linearization frequency at the crossing
    const CrossingResult crossing = find_crossing(p, kVolumeControl, 10.0, 30.0);
    const double predicted = 60.0 * 2.0 * M_PI / crossing.omega_star;
    CHECK(std::abs(ra.period_s - predicted) <= 0.15 * predicted);

    // the reconstructed pulmonary volume stays positive on the cycle
    for (const VolumeState& s : a.states) {
      CHECK(p.v_o - s.v_sa - s.v_sv - s.v_pv > 0.0);
    }
  }
}

TEST_CASE("narrow supercriticality band around the located crossing") {
  const CardioParams p;
  const CrossingResult crossing = find_crossing(p, kVolumeControl, 10.0, 30.0);
  const VolumeState near_eq{1.01, 3.5 * 1.01, 0.4 * 1.01};

  const Trajectory grow = integrate(p, kVolumeControl, crossing.mu_star * 1.05,
                                    near_eq, 5e-4, 50.0);
  const CycleReport sustained = detect_cycle(grow, 0.5);
  CHECK(sustained.classification == CycleClass::sustained);
  CHECK(sustained.amplitude > kSustainedMinAmplitude);
  CHECK(sustained.amplitude < 0.1);  // small emerging cycle

  const Trajectory shrink = integrate(p, kVolumeControl, crossing.mu_star * 0.95,
                                      near_eq, 5e-4, 50.0);
  const CycleReport decayed = detect_cycle(shrink, 0.5);
  CHECK(decayed.classification == CycleClass::decaying);
}

TEST_CASE("cycle detector edge cases") {
  Trajectory tiny;
  tiny.dt = 1.0;
  tiny.t_end = 3.0;
  tiny.times = {0.0, 1.0, 2.0, 3.0};
  tiny.states = {{1, 3, 0.4}, {1, 3, 0.4}, {1, 3, 0.4}, {1, 3, 0.4}};
  CHECK_THROWS_AS(detect_cycle(tiny, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(detect_cycle(tiny, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(detect_cycle(tiny, -0.1), std::invalid_argument);

  // a flat record has no peaks and stays inconclusive
  Trajectory flat;
  flat.dt = 0.01;
  flat.t_end = 1.0;
  for (int i = 0; i <= 100; ++i) {
    flat.times.push_back(0.01 * i);
    flat.states.push_back({1.0, 3.5, 0.4});
  }
  const CycleReport report = detect_cycle(flat, 0.2);
  CHECK(report.classification == CycleClass::inconclusive);
  CHECK(report.peak_times.empty());
  CHECK(std::isnan(report.period_s));
}
