#pragma once

/**
 * @file model.hpp
 * @brief Three-compartment lumped circulation model with baroreflex feedback.
 *
 * State variables are the stressed blood volumes of the systemic arteries,
 * systemic veins and pulmonary veins; the pulmonary arterial volume is
 * reconstructed from conservation of total volume. One of four circulation
 * parameters (heart rate, systemic resistance, unstressed venous volume,
 * venous compliance) can be slaved to a Hill-type baroreceptor response of
 * arterial volume, turning the linear volume-balance system into the
 * nonlinear feedback model analysed by the rest of the library.
 *
 * All functions here are pure; values are plain aggregates that are safe to
 * copy between threads.
 */

#include <string>

namespace mayer {

/// Physical constants of the circulation. Defaults are the normal adult
/// values; rational forms are used where the rounded literature values
/// would break the exact coefficient identities of the model
/// (r_p = 25/14, c_pa = 1/150).
struct CardioParams {
  double c_sa = 0.01;         ///< systemic arterial compliance [l/mmHg]
  double c_pa = 1.0 / 150.0;  ///< pulmonary arterial compliance [l/mmHg]
  double c_pv = 0.08;         ///< pulmonary venous compliance [l/mmHg]
  double c_sv_base = 0.75;    ///< systemic venous compliance at rest [l/mmHg]
  double c_l = 0.014;         ///< left heart compliance [l/mmHg]
  double c_r = 0.035;         ///< right heart compliance [l/mmHg]
  double r_s_base = 17.5;     ///< systemic resistance at rest [mmHg.min/l]
  double r_p = 25.0 / 14.0;   ///< pulmonary resistance [mmHg.min/l]
  double f_base = 80.0;       ///< heart rate at rest [beats/min]
  double v_o = 5.0;           ///< total blood volume [l]
  double v_c = 1.0;           ///< critical (set-point) arterial volume [l]
  double v_d_base = 2.0;      ///< unstressed systemic venous volume at rest [l]

  /// Throws std::domain_error naming the offending field if any value is
  /// non-positive or v_d_base >= v_o.
  void validate() const;
};

/// Which circulation parameter the baroreflex drives.
enum class ControlKind {
  linear_no_control,    ///< no feedback; the plain linear volume model
  heart_rate,           ///< F = F1(1-B) + F2
  systemic_resistance,  ///< R_S = R1(1-B) + R2
  unstressed_volume,    ///< V_D = D1*B + D2
  venous_compliance,    ///< C_SV = C1*B + C2
};

/// A feedback target together with its two control-law constants.
/// `slope_coeff` is the coefficient multiplying the activity term (F1, R1,
/// D1 or C1) and `offset` the additive constant (F2, R2, D2 or C2).
struct ControlVariant {
  ControlKind kind = ControlKind::linear_no_control;
  double slope_coeff = 0.0;
  double offset = 0.0;

  static ControlVariant linear() { return {}; }
  static ControlVariant heart_rate(double f1, double f2) {
    return {ControlKind::heart_rate, f1, f2};
  }
  static ControlVariant systemic_resistance(double r1, double r2) {
    return {ControlKind::systemic_resistance, r1, r2};
  }
  static ControlVariant unstressed_volume(double d1, double d2) {
    return {ControlKind::unstressed_volume, d1, d2};
  }
  static ControlVariant venous_compliance(double c1, double c2) {
    return {ControlKind::venous_compliance, c1, c2};
  }

  bool is_active() const { return kind != ControlKind::linear_no_control; }

  /// Resting value of the controlled parameter (f_base, r_s_base, v_d_base
  /// or c_sv_base; v_d_base for the uncontrolled linear model).
  double base_value(const CardioParams& p) const;

  /// Checks that both constants are nonnegative, that the slope constant is
  /// strictly positive for active variants, and (unless allow_unnormalized)
  /// that slope/2 + offset equals the base value of the controlled
  /// parameter, which is what pins the equilibrium at (1.0, 3.5, 0.4).
  /// Throws std::domain_error on violation.
  void validate(const CardioParams& p, bool allow_unnormalized = false) const;

  /// Short lowercase identifier, e.g. "unstressed_volume".
  const char* name() const;
};

/// The three dynamic stressed volumes [l]. Also used for their time
/// derivatives [l/min] where noted.
struct VolumeState {
  double v_sa = 0.0;  ///< systemic arterial volume
  double v_sv = 0.0;  ///< systemic venous volume
  double v_pv = 0.0;  ///< pulmonary venous volume
};

/// Derived pressures, flows and feedback quantities at a state.
struct Observables {
  double p_sa = 0.0;  ///< systemic arterial pressure [mmHg]
  double p_sv = 0.0;  ///< systemic venous pressure [mmHg]
  double p_pa = 0.0;  ///< pulmonary arterial pressure [mmHg]
  double p_pv = 0.0;  ///< pulmonary venous pressure [mmHg]
  double v_pa = 0.0;  ///< reconstructed pulmonary arterial volume [l]
  double q_l = 0.0;   ///< left cardiac output [l/min]
  double q_r = 0.0;   ///< right cardiac output [l/min]
  double q_s = 0.0;   ///< systemic capillary flow [l/min]
  double q_p = 0.0;   ///< pulmonary capillary flow [l/min]
  double b = 0.0;     ///< baroreceptor activity, in [0, 1)
  double k_l = 0.0;   ///< left heart gain F*C_L [l/min per mmHg]
  double k_r = 0.0;   ///< right heart gain F*C_R [l/min per mmHg]
};

/// Baroreceptor activity B = v_sa^(4*mu) / (v_c^(4*mu) + v_sa^(4*mu)).
///
/// The Hill exponent is n = 4*mu so that mu equals the slope of the
/// response at v_sa = v_c. Evaluated through the log-ratio (logistic)
/// form, so large exponents saturate toward 0 or 1 - ulp instead of
/// overflowing. Throws std::domain_error if v_sa, v_c or mu is
/// non-positive.
double hill_activity(double v_sa, double v_c, double mu);

/// Effective value of the variant's controlled parameter at activity b.
/// For the uncontrolled linear model every parameter sits at its base
/// value and the base is returned.
double control_value(const ControlVariant& variant, double b,
                     const CardioParams& p);

/// Time derivative [l/min] of the three volumes. `mu` must be positive for
/// active variants (it is ignored by the linear model).
VolumeState rhs(const CardioParams& p, const ControlVariant& variant,
                double mu, const VolumeState& s);

/// Pressures, flows and feedback quantities at a state. Throws
/// std::domain_error if the reconstructed pulmonary arterial volume is
/// non-positive.
Observables observables(const CardioParams& p, const ControlVariant& variant,
                        double mu, const VolumeState& s);

/// Admissible region for solvers and integrators: v_sa > 0 and the
/// reconstructed v_pa > 0. (v_sv and v_pv may pass through zero during
/// Newton iteration without harm.)
bool admissible(const CardioParams& p, const VolumeState& s);

}  // namespace mayer
