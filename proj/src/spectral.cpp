#include "mayer/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mayer/equilibrium.hpp"

namespace mayer {

double Matrix3::trace() const { return a[0] + a[4] + a[8]; }

double Matrix3::second_invariant() const {
  const Matrix3& m = *this;
  return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) +
         (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
}

double Matrix3::determinant() const {
  const Matrix3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double Spectrum::max_real_part() const {
  double m = eigenvalues[0].real();
  for (const auto& ev : eigenvalues) m = std::max(m, ev.real());
  return m;
}

Matrix3 jacobian_fd(const CardioParams& p, const ControlVariant& variant,
                    double mu, const VolumeState& s) {
  // The vector field is defined wherever the baroreceptor input is, i.e.
  // v_sa > 0; the solver-side v_pa constraint does not bind here (rhs is a
  // polynomial in the other volumes), so probes may brush past it.
  if (!(s.v_sa > 0.0)) {
    throw std::domain_error(
        "jacobian_fd: state outside the domain of the vector field");
  }
  Matrix3 jac;
  for (int col = 0; col < 3; ++col) {
    const double base =
        col == 0 ? s.v_sa : (col == 1 ? s.v_sv : s.v_pv);
    double h = 1e-6 * std::max(1.0, std::abs(base));
    VolumeState plus;
    VolumeState minus;
    bool ok = false;
    for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
      plus = s;
      minus = s;
      double* pc = col == 0 ? &plus.v_sa : (col == 1 ? &plus.v_sv : &plus.v_pv);
      double* mc =
          col == 0 ? &minus.v_sa : (col == 1 ? &minus.v_sv : &minus.v_pv);
      *pc += h;
      *mc -= h;
      if (plus.v_sa > 0.0 && minus.v_sa > 0.0) {
        ok = true;
      } else {
        h *= 0.5;  // shrink once, then give up
      }
    }
    if (!ok) {
      throw std::domain_error(
          "jacobian_fd: finite-difference probe leaves the domain of the "
          "vector field");
    }
    const VolumeState fp = rhs(p, variant, mu, plus);
    const VolumeState fm = rhs(p, variant, mu, minus);
    const double inv = 1.0 / (2.0 * h);
    jac(0, col) = (fp.v_sa - fm.v_sa) * inv;
    jac(1, col) = (fp.v_sv - fm.v_sv) * inv;
    jac(2, col) = (fp.v_pv - fm.v_pv) * inv;
  }
  return jac;
}

namespace {

// One or two Newton polish steps on y^3 + p*y + q.
double polish_depressed_root(double y, double p, double q) {
  for (int i = 0; i < 2; ++i) {
    const double f = (y * y + p) * y + q;
    const double df = 3.0 * y * y + p;
    if (df == 0.0) break;
    const double step = f / df;
    if (!std::isfinite(step)) break;
    y -= step;
  }
  return y;
}

}  // namespace

Spectrum eig3(const Matrix3& m) {
  for (double entry : m.a) {
    if (!std::isfinite(entry)) {
      throw std::domain_error("eig3: matrix entries must be finite");
    }
  }
  // charpoly: lambda^3 + a2*lambda^2 + a1*lambda + a0
  const double a2 = -m.trace();
  const double a1 = m.second_invariant();
  const double a0 = -m.determinant();

  // depressed cubic y^3 + p*y + q with lambda = y - a2/3
  const double shift = a2 / 3.0;
  const double p = a1 - a2 * a2 / 3.0;
  const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  const double disc_scale =
      half_q * half_q + std::abs(third_p * third_p * third_p);

  Spectrum out;
  out.degenerate = std::abs(disc) <= 1e-12 * std::max(disc_scale, 1e-300);

  if (disc > 0.0 && !out.degenerate) {
    // One real root plus a conjugate pair (Cardano).
    const double root_disc = std::sqrt(disc);
    const double u = std::cbrt(-half_q + root_disc);
    const double v = std::cbrt(-half_q - root_disc);
    const double y_real = polish_depressed_root(u + v, p, q);
    const double real_root = y_real - shift;
    // Deflate: remaining quadratic lambda^2 + P*lambda + Q.
    const double quad_p = a2 + real_root;
    const double quad_q = a1 + real_root * quad_p;
    const double pair_re = -0.5 * quad_p;
    const double pair_im2 = quad_q - pair_re * pair_re;
    const double pair_im = std::sqrt(std::max(pair_im2, 0.0));
    out.kind = SpectrumKind::complex_pair;
    out.real_eigenvalue = real_root;
    out.pair_real_part = pair_re;
    out.pair_imag_part = pair_im;
    out.eigenvalues = {std::complex<double>(real_root, 0.0),
                       std::complex<double>(pair_re, pair_im),
                       std::complex<double>(pair_re, -pair_im)};
    return out;
  }

  // Three real roots (trigonometric branch); also the resolution for a
  // degenerate discriminant, where repeated roots are returned as real.
  const double mp3 = std::max(-third_p, 0.0);
  const double radius = std::sqrt(mp3);
  double roots[3];
  if (radius > 0.0) {
    const double cos_arg =
        std::clamp(-half_q / (mp3 * radius), -1.0, 1.0);
    const double phi = std::acos(cos_arg) / 3.0;
    constexpr double two_thirds_pi = 2.0943951023931953;
    for (int k = 0; k < 3; ++k) {
      const double y = 2.0 * radius * std::cos(phi - two_thirds_pi * k);
      roots[k] = polish_depressed_root(y, p, q) - shift;
    }
  } else {
    // p ~ 0 and disc <= 0 force q ~ 0: a triple root at the shift.
    roots[0] = roots[1] = roots[2] = -shift;
  }
  std::sort(roots, roots + 3, std::greater<double>());
  out.kind = SpectrumKind::three_real;
  out.real_eigenvalue = roots[0];
  out.pair_real_part = std::numeric_limits<double>::quiet_NaN();
  out.pair_imag_part = std::numeric_limits<double>::quiet_NaN();
  out.eigenvalues = {std::complex<double>(roots[0], 0.0),
                     std::complex<double>(roots[1], 0.0),
                     std::complex<double>(roots[2], 0.0)};
  return out;
}

Spectrum classify_at_equilibrium(const CardioParams& p,
                                 const ControlVariant& variant, double mu) {
  const EquilibriumResult eq = solve_equilibrium(p, variant, mu);
  return eig3(jacobian_fd(p, variant, mu, eq.state));
}

}  // namespace mayer
