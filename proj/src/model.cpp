#include "mayer/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mayer {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0)) {
    throw std::domain_error(std::string(field) + " must be strictly positive");
  }
}

}  // namespace

void CardioParams::validate() const {
  require_positive(c_sa, "c_sa");
  require_positive(c_pa, "c_pa");
  require_positive(c_pv, "c_pv");
  require_positive(c_sv_base, "c_sv");
  require_positive(c_l, "c_l");
  require_positive(c_r, "c_r");
  require_positive(r_s_base, "r_s");
  require_positive(r_p, "r_p");
  require_positive(f_base, "f");
  require_positive(v_o, "v_o");
  require_positive(v_c, "v_c");
  require_positive(v_d_base, "v_d");
  if (!(v_d_base < v_o)) {
    throw std::domain_error("v_d must be smaller than the total volume v_o");
  }
}

double ControlVariant::base_value(const CardioParams& p) const {
  switch (kind) {
    case ControlKind::heart_rate:
      return p.f_base;
    case ControlKind::systemic_resistance:
      return p.r_s_base;
    case ControlKind::unstressed_volume:
      return p.v_d_base;
    case ControlKind::venous_compliance:
      return p.c_sv_base;
    case ControlKind::linear_no_control:
      return p.v_d_base;  // degenerate zero-strength volume control
  }
  return p.v_d_base;
}

void ControlVariant::validate(const CardioParams& p,
                              bool allow_unnormalized) const {
  if (!is_active()) return;
  if (slope_coeff < 0.0 || offset < 0.0) {
    throw std::domain_error(std::string(name()) +
                            ": control constants must be nonnegative");
  }
  if (!(slope_coeff > 0.0)) {
    throw std::domain_error(std::string(name()) +
                            ": the slope constant must be strictly positive");
  }
  if (allow_unnormalized) return;
  const double base = base_value(p);
  const double at_setpoint = 0.5 * slope_coeff + offset;
  if (std::abs(at_setpoint - base) > 1e-9 * std::max(1.0, std::abs(base))) {
    throw std::domain_error(
        std::string(name()) + ": constants are not normalized (x1/2 + x2 = " +
        std::to_string(at_setpoint) + " but the base value is " +
        std::to_string(base) + "); set allow_unnormalized to override");
  }
}

const char* ControlVariant::name() const {
  switch (kind) {
    case ControlKind::linear_no_control:
      return "linear_no_control";
    case ControlKind::heart_rate:
      return "heart_rate";
    case ControlKind::systemic_resistance:
      return "systemic_resistance";
    case ControlKind::unstressed_volume:
      return "unstressed_volume";
    case ControlKind::venous_compliance:
      return "venous_compliance";
  }
  return "unknown";
}

double hill_activity(double v_sa, double v_c, double mu) {
  if (!(v_sa > 0.0)) throw std::domain_error("hill_activity: v_sa must be positive");
  if (!(v_c > 0.0)) throw std::domain_error("hill_activity: v_c must be positive");
  if (!(mu > 0.0)) throw std::domain_error("hill_activity: mu must be positive");
  // B = 1 / (1 + (v_c/v_sa)^(4mu)) = logistic(4mu * ln(v_sa/v_c)); the
  // one-sided exponential keeps both tails finite for any exponent.
  const double t = 4.0 * mu * std::log(v_sa / v_c);
  double b;
  if (t >= 0.0) {
    b = 1.0 / (1.0 + std::exp(-t));
  } else {
    const double e = std::exp(t);
    b = e / (1.0 + e);
  }
  if (b >= 1.0) b = std::nextafter(1.0, 0.0);  // saturate below 1
  return b;
}

double control_value(const ControlVariant& variant, double b,
                     const CardioParams& p) {
  switch (variant.kind) {
    case ControlKind::heart_rate:
    case ControlKind::systemic_resistance:
      // F and R_S must move against pressure: high activity lowers them.
      return variant.slope_coeff * (1.0 - b) + variant.offset;
    case ControlKind::unstressed_volume:
    case ControlKind::venous_compliance:
      // V_D and C_SV move with pressure: high activity raises them.
      return variant.slope_coeff * b + variant.offset;
    case ControlKind::linear_no_control:
      return variant.base_value(p);
  }
  return variant.base_value(p);
}

namespace {

struct EffectiveParams {
  double f;
  double r_s;
  double v_d;
  double c_sv;
};

EffectiveParams effective(const CardioParams& p, const ControlVariant& variant,
                          double mu, double v_sa) {
  EffectiveParams e{p.f_base, p.r_s_base, p.v_d_base, p.c_sv_base};
  if (!variant.is_active()) return e;
  const double b = hill_activity(v_sa, p.v_c, mu);
  switch (variant.kind) {
    case ControlKind::heart_rate:
      e.f = control_value(variant, b, p);
      break;
    case ControlKind::systemic_resistance:
      e.r_s = control_value(variant, b, p);
      break;
    case ControlKind::unstressed_volume:
      e.v_d = control_value(variant, b, p);
      break;
    case ControlKind::venous_compliance:
      e.c_sv = control_value(variant, b, p);
      break;
    case ControlKind::linear_no_control:
      break;
  }
  return e;
}

}  // namespace

VolumeState rhs(const CardioParams& p, const ControlVariant& variant,
                double mu, const VolumeState& s) {
  const EffectiveParams e = effective(p, variant, mu, s.v_sa);
  const double stressed_sv = s.v_sv - e.v_d;
  const double v_pa = p.v_o - s.v_sa - s.v_sv - s.v_pv;
  VolumeState d;
  // q_L - q_S
  d.v_sa = -s.v_sa / (e.r_s * p.c_sa) + stressed_sv / (e.r_s * e.c_sv) +
           e.f * p.c_l * s.v_pv / p.c_pv;
  // q_S - q_R
  d.v_sv = s.v_sa / (e.r_s * p.c_sa) -
           (1.0 / (e.r_s * e.c_sv) + e.f * p.c_r / e.c_sv) * stressed_sv;
  // q_P - q_L
  d.v_pv = v_pa / (p.r_p * p.c_pa) -
           (1.0 / (p.r_p * p.c_pv) + e.f * p.c_l / p.c_pv) * s.v_pv;
  return d;
}

Observables observables(const CardioParams& p, const ControlVariant& variant,
                        double mu, const VolumeState& s) {
  const EffectiveParams e = effective(p, variant, mu, s.v_sa);
  Observables o;
  o.v_pa = p.v_o - s.v_sa - s.v_sv - s.v_pv;
  if (!(o.v_pa > 0.0)) {
    throw std::domain_error(
        "observables: reconstructed v_pa = " + std::to_string(o.v_pa) +
        " is not positive");
  }
  o.p_sa = s.v_sa / p.c_sa;
  o.p_sv = (s.v_sv - e.v_d) / e.c_sv;
  o.p_pa = o.v_pa / p.c_pa;
  o.p_pv = s.v_pv / p.c_pv;
  o.k_l = e.f * p.c_l;
  o.k_r = e.f * p.c_r;
  o.q_l = o.k_l * o.p_pv;
  o.q_r = o.k_r * o.p_sv;
  o.q_s = (o.p_sa - o.p_sv) / e.r_s;
  o.q_p = (o.p_pa - o.p_pv) / p.r_p;
  o.b = hill_activity(s.v_sa, p.v_c, mu);
  return o;
}

bool admissible(const CardioParams& p, const VolumeState& s) {
  return s.v_sa > 0.0 && (p.v_o - s.v_sa - s.v_sv - s.v_pv) > 0.0;
}

}  // namespace mayer
