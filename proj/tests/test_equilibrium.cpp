#include <doctest.h>

#include <cmath>

#include "appendix_oracles.hpp"
#include "mayer/equilibrium.hpp"
#include "mayer/errors.hpp"

using namespace mayer;

namespace {

double max_abs_diff(const VolumeState& a, const VolumeState& b) {
  return std::max({std::abs(a.v_sa - b.v_sa), std::abs(a.v_sv - b.v_sv),
                   std::abs(a.v_pv - b.v_pv)});
}

const VolumeState kEquilibrium{1.0, 3.5, 0.4};

}  // namespace

TEST_CASE("volume-control model converges from a nearby guess") {
  const CardioParams p;
  const EquilibriumResult res = solve_equilibrium(
      p, ControlVariant::unstressed_volume(4.0, 0.0), 18.0, {0.9, 3.6, 0.5});
  CHECK(std::abs(res.state.v_sa - 1.0) < 1e-9);
  CHECK(std::abs(res.state.v_sv - 3.5) < 1e-9);
  CHECK(std::abs(res.state.v_pv - 0.4) < 1e-9);
  CHECK(res.residual_norm <= 1e-10);
}

TEST_CASE("linear model steady state agrees with a direct linear solve") {
  // Independent oracle: solve the uncontrolled 3x3 system A x = -b by
  // elimination on the literal coefficients.
  const mayer::Matrix3 a = oracle::linear_model_matrix();
  // constant terms: -(V_D term) in the first two equations, V_O term in the
  // third
  double rhs_vec[3] = {-2.0 * 8.0 / 105.0, 2.0 * 80.0 / 21.0, 420.0};
  double m[3][4];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m[r][c] = a(r, c);
    m[r][3] = -rhs_vec[r];
  }
  // A x + b = 0  ->  A x = -b
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    for (int k = 0; k < 4; ++k) std::swap(m[pivot][k], m[col][k]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  double x[3];
  for (int r = 2; r >= 0; --r) {
    double acc = m[r][3];
    for (int k = r + 1; k < 3; ++k) acc -= m[r][k] * x[k];
    x[r] = acc / m[r][r];
  }
  CHECK(std::abs(x[0] - 1.0) < 1e-12);
  CHECK(std::abs(x[1] - 3.5) < 1e-12);
  CHECK(std::abs(x[2] - 0.4) < 1e-12);

  const CardioParams p;
  for (VolumeState guess :
       {VolumeState{0.6, 2.5, 0.7}, VolumeState{1.4, 4.2, 0.2},
        VolumeState{2.0, 1.0, 0.1}}) {
    const EquilibriumResult res =
        solve_equilibrium(p, ControlVariant::linear(), 1.0, guess);
    CHECK(max_abs_diff(res.state, kEquilibrium) < 1e-9);
  }
}

TEST_CASE("starting on the equilibrium terminates immediately") {
  const CardioParams p;
  const EquilibriumResult res = solve_equilibrium(
      p, ControlVariant::venous_compliance(0.5, 0.5), 71.0, kEquilibrium);
  CHECK(res.iterations <= 1);
  CHECK(max_abs_diff(res.state, kEquilibrium) < 1e-12);
}

TEST_CASE("all appendix configurations converge from a distant guess") {
  const CardioParams p;
  const VolumeState guess{0.8, 3.0, 0.5};
  for (const oracle::System& sys : oracle::appendix_systems()) {
    for (double mu : {1.0, 5.0, 10.0, 25.0, 50.0, 100.0}) {
      CAPTURE(sys.tag);
      CAPTURE(mu);
      const EquilibriumResult res = solve_equilibrium(p, sys.variant, mu, guess);
      CHECK(max_abs_diff(res.state, kEquilibrium) < 1e-9);
      CHECK(res.iterations < 100);
    }
  }
}

TEST_CASE("idempotence and residual bookkeeping") {
  const CardioParams p;
  const ControlVariant v = ControlVariant::unstressed_volume(3.0, 0.5);
  const EquilibriumResult first = solve_equilibrium(p, v, 24.0, {0.8, 3.0, 0.5});
  const EquilibriumResult again = solve_equilibrium(p, v, 24.0, first.state);
  CHECK(again.iterations <= 1);

  // the reported residual is the max-norm of rhs at the reported state
  const VolumeState r = rhs(p, v, 24.0, first.state);
  const double expect =
      std::max({std::abs(r.v_sa), std::abs(r.v_sv), std::abs(r.v_pv)});
  CHECK(first.residual_norm == doctest::Approx(expect).epsilon(1e-12));
  CHECK(first.residual_norm <= 1e-10);
}

TEST_CASE("hopeless configurations fail loudly") {
  const CardioParams p;
  // At this gain the Hill response underflows to zero below the setpoint,
  // the controlled compliance collapses and no damped step leads anywhere
  // evaluable.
  CHECK_THROWS_AS(solve_equilibrium(p, ControlVariant::venous_compliance(1.5, 0.0),
                                    2000.0, {0.8, 3.0, 0.5}),
                  numeric_error);
}

TEST_CASE("invalid guesses are rejected") {
  const CardioParams p;
  CHECK_THROWS(solve_equilibrium(p, ControlVariant::unstressed_volume(4.0, 0.0),
                                 18.0, {-1.0, 3.5, 0.4}));
}
