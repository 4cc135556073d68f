#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "appendix_oracles.hpp"
#include "mayer/model.hpp"

using namespace mayer;

namespace {

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("default parameters reproduce the rational model coefficients") {
  const CardioParams p;
  p.validate();
  CHECK(rel_err(1.0 / (p.r_s_base * p.c_sa), 40.0 / 7.0) < 1e-12);
  CHECK(rel_err(1.0 / (p.r_s_base * p.c_sv_base), 8.0 / 105.0) < 1e-12);
  CHECK(rel_err(p.f_base * p.c_l / p.c_pv, 14.0) < 1e-12);
  CHECK(rel_err(1.0 / (p.r_s_base * p.c_sv_base) +
                    p.f_base * p.c_r / p.c_sv_base,
                80.0 / 21.0) < 1e-12);
  CHECK(rel_err(1.0 / (p.r_p * p.c_pa), 84.0) < 1e-12);
  CHECK(rel_err(1.0 / (p.r_p * p.c_pv) + p.f_base * p.c_l / p.c_pv, 21.0) <
        1e-12);
  CHECK(rel_err(p.v_o / (p.r_p * p.c_pa), 420.0) < 1e-12);
}

TEST_CASE("parameter validation rejects bad values") {
  CardioParams p;
  p.c_sa = 0.0;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p = CardioParams{};
  p.v_d_base = 6.0;  // above v_o
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p = CardioParams{};
  p.r_p = -1.0;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("hill activity hits half maximum at the critical volume") {
  CHECK(hill_activity(1.0, 1.0, 18.0) == doctest::Approx(0.5).epsilon(1e-15));
  // numerator vanishes long before the denominator
  CHECK(hill_activity(1e-30, 1.0, 5.0) == doctest::Approx(0.0));
}

TEST_CASE("hill slope at the critical volume equals the gain") {
  // central finite difference, the independent route to the slope
  for (double mu : {0.5, 1.0, 5.0, 18.0, 50.0}) {
    const double h = 1e-6;
    const double slope =
        (hill_activity(1.0 + h, 1.0, mu) - hill_activity(1.0 - h, 1.0, mu)) /
        (2.0 * h);
    CHECK(slope == doctest::Approx(mu).epsilon(1e-6));
  }
}

TEST_CASE("hill activity domain errors") {
  CHECK_THROWS_AS(hill_activity(0.0, 1.0, 5.0), std::domain_error);
  CHECK_THROWS_AS(hill_activity(-1.0, 1.0, 5.0), std::domain_error);
  CHECK_THROWS_AS(hill_activity(1.0, 0.0, 5.0), std::domain_error);
  CHECK_THROWS_AS(hill_activity(1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(hill_activity(1.0, 1.0, -3.0), std::domain_error);
}

TEST_CASE("hill activity is a strictly increasing map into (0,1)") {
  // Strict monotonicity is checked where adjacent values are resolvable in
  // double precision: |4 mu ln(v/v_c)| <= 30 keeps the tails far from
  // saturation.
  for (double mu : {0.25, 1.0, 5.0, 18.0, 50.0, 100.0, 200.0}) {
    const double span = 30.0 / (4.0 * mu);
    double prev = -1.0;
    for (int i = 0; i <= 64; ++i) {
      const double v = std::exp(-span + 2.0 * span * i / 64.0);
      const double b = hill_activity(v, 1.0, mu);
      CHECK(b > 0.0);
      CHECK(b < 1.0);
      CHECK(b > prev);
      prev = b;
    }
  }
  // Saturated tails stay inside [0, 1) by construction.
  CHECK(hill_activity(100.0, 1.0, 200.0) < 1.0);
  CHECK(hill_activity(0.01, 1.0, 200.0) >= 0.0);
}

TEST_CASE("control laws at the half-activity point and the extremes") {
  const CardioParams p;
  CHECK(control_value(ControlVariant::heart_rate(80.0, 40.0), 0.5, p) ==
        doctest::Approx(80.0));
  CHECK(control_value(ControlVariant::unstressed_volume(4.0, 0.0), 0.5, p) ==
        doctest::Approx(2.0));
  // F -> 0 as activity saturates when F2 = 0
  CHECK(control_value(ControlVariant::heart_rate(160.0, 0.0), 1.0 - 1e-12, p) ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(control_value(ControlVariant::systemic_resistance(35.0, 0.0), 0.5, p) ==
        doctest::Approx(17.5));
  CHECK(control_value(ControlVariant::venous_compliance(0.5, 0.5), 0.25, p) ==
        doctest::Approx(0.625));
  // the uncontrolled model keeps every parameter at its base value
  CHECK(control_value(ControlVariant::linear(), 0.9, p) ==
        doctest::Approx(p.v_d_base));
}

TEST_CASE("variant normalization validation") {
  const CardioParams p;
  for (ControlVariant v : {ControlVariant::heart_rate(160.0, 0.0),
                           ControlVariant::heart_rate(80.0, 40.0),
                           ControlVariant::heart_rate(40.0, 60.0),
                           ControlVariant::systemic_resistance(35.0, 0.0),
                           ControlVariant::systemic_resistance(20.0, 7.5),
                           ControlVariant::systemic_resistance(15.0, 10.0),
                           ControlVariant::unstressed_volume(4.0, 0.0),
                           ControlVariant::unstressed_volume(3.0, 0.5),
                           ControlVariant::unstressed_volume(2.0, 1.0),
                           ControlVariant::unstressed_volume(1.0, 1.5),
                           ControlVariant::venous_compliance(1.5, 0.0),
                           ControlVariant::venous_compliance(1.0, 0.25),
                           ControlVariant::venous_compliance(0.5, 0.5)}) {
    CHECK_NOTHROW(v.validate(p));
  }
  CHECK_THROWS_AS(ControlVariant::unstressed_volume(3.0, 1.0).validate(p),
                  std::domain_error);
  CHECK_NOTHROW(ControlVariant::unstressed_volume(3.0, 1.0)
                    .validate(p, /*allow_unnormalized=*/true));
  CHECK_THROWS_AS(ControlVariant::heart_rate(0.0, 80.0).validate(p),
                  std::domain_error);
  CHECK_THROWS_AS(ControlVariant::heart_rate(-2.0, 81.0).validate(p),
                  std::domain_error);
  CHECK_NOTHROW(ControlVariant::linear().validate(p));
}

TEST_CASE("rhs vanishes at the physiological equilibrium for every variant") {
  const CardioParams p;
  const VolumeState eq{1.0, 3.5, 0.4};
  for (double mu : {0.5, 1.0, 18.0, 71.0, 150.0}) {
    for (ControlVariant v : {ControlVariant::linear(),
                             ControlVariant::heart_rate(160.0, 0.0),
                             ControlVariant::heart_rate(80.0, 40.0),
                             ControlVariant::systemic_resistance(35.0, 0.0),
                             ControlVariant::systemic_resistance(15.0, 10.0),
                             ControlVariant::unstressed_volume(4.0, 0.0),
                             ControlVariant::unstressed_volume(1.0, 1.5),
                             ControlVariant::venous_compliance(1.5, 0.0),
                             ControlVariant::venous_compliance(0.5, 0.5)}) {
      const VolumeState d = rhs(p, v, mu, eq);
      CHECK(std::abs(d.v_sa) < 1e-10);
      CHECK(std::abs(d.v_sv) < 1e-10);
      CHECK(std::abs(d.v_pv) < 1e-10);
    }
  }
}

TEST_CASE("rhs third component at a displaced state is pure arithmetic") {
  // 420 - 84*1.0 - 84*3.0 - 105*0.5 = 31.5
  const CardioParams p;
  const VolumeState s{1.0, 3.0, 0.5};
  const VolumeState d =
      rhs(p, ControlVariant::unstressed_volume(4.0, 0.0), 18.0, s);
  CHECK(d.v_pv == doctest::Approx(31.5).epsilon(1e-12));
}

TEST_CASE("generic rhs matches the seven literal-coefficient systems") {
  const CardioParams p;
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> d_sa(0.5, 1.5);
  std::uniform_real_distribution<double> d_sv(2.5, 4.5);
  std::uniform_real_distribution<double> d_pv(0.2, 0.8);
  for (const oracle::System& sys : oracle::appendix_systems()) {
    for (int i = 0; i < 100; ++i) {
      const VolumeState s{d_sa(rng), d_sv(rng), d_pv(rng)};
      for (double mu : {1.0, 18.0, 50.0}) {
        const VolumeState mine = rhs(p, sys.variant, mu, s);
        const VolumeState ref = sys.rhs(mu, s);
        CHECK(rel_err(mine.v_sa, ref.v_sa) < 1e-12);
        CHECK(rel_err(mine.v_sv, ref.v_sv) < 1e-12);
        CHECK(rel_err(mine.v_pv, ref.v_pv) < 1e-12);
      }
    }
  }
}

TEST_CASE("rhs propagates the hill domain error") {
  const CardioParams p;
  const VolumeState bad{-0.1, 3.5, 0.4};
  CHECK_THROWS_AS(rhs(p, ControlVariant::unstressed_volume(4.0, 0.0), 18.0, bad),
                  std::domain_error);
}

TEST_CASE("observables at the equilibrium") {
  const CardioParams p;
  const VolumeState eq{1.0, 3.5, 0.4};
  const Observables o =
      observables(p, ControlVariant::unstressed_volume(4.0, 0.0), 18.0, eq);
  CHECK(o.p_sa == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(o.v_pa == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(o.p_sv == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(o.p_pa == doctest::Approx(15.0).epsilon(1e-12));
  CHECK(o.p_pv == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(o.b == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(o.k_l == doctest::Approx(1.12).epsilon(1e-12));
  CHECK(o.k_r == doctest::Approx(2.8).epsilon(1e-12));
  // all four flows balance at the resting cardiac output
  for (double q : {o.q_l, o.q_r, o.q_s, o.q_p}) {
    CHECK(q == doctest::Approx(5.6).epsilon(1e-10));
  }
}

TEST_CASE("observables reports a collapsed pulmonary artery") {
  const CardioParams p;
  const VolumeState s{1.0, 3.6, 0.4};  // sums exactly to v_o
  CHECK_THROWS_AS(observables(p, ControlVariant::linear(), 1.0, s),
                  std::domain_error);
}

TEST_CASE("admissibility covers both constraints") {
  const CardioParams p;
  CHECK(admissible(p, {1.0, 3.5, 0.4}));
  CHECK_FALSE(admissible(p, {0.0, 3.5, 0.4}));
  CHECK_FALSE(admissible(p, {1.0, 3.7, 0.4}));  // v_pa would be negative
  // v_sv and v_pv may pass through unphysical values during iteration
  CHECK(admissible(p, {1.0, -0.5, 0.4}));
}
