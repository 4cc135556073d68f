#pragma once

/**
 * @file spectral.hpp
 * @brief Linearization of the circulation model and its 3x3 spectrum.
 *
 * The Jacobian is obtained by central finite differences, which keeps the
 * code agnostic to the feedback variant. Eigenvalues come from the
 * characteristic cubic, solved on the depressed form with the trigonometric
 * branch for three real roots and Cardano's branch for a conjugate pair;
 * the complex pair is reconstructed by deflation so conjugacy is exact.
 */

#include <array>
#include <complex>

#include "mayer/model.hpp"

namespace mayer {

/// Row-major 3x3 real matrix, entries in 1/min.
struct Matrix3 {
  std::array<double, 9> a{};

  double& operator()(int r, int c) { return a[static_cast<size_t>(3 * r + c)]; }
  double operator()(int r, int c) const {
    return a[static_cast<size_t>(3 * r + c)];
  }

  double trace() const;
  /// Sum of the principal 2x2 minors (the second characteristic invariant).
  double second_invariant() const;
  double determinant() const;
};

enum class SpectrumKind {
  three_real,    ///< three real eigenvalues (pair fields are NaN)
  complex_pair,  ///< one real eigenvalue plus a conjugate pair
};

/// Eigenvalues of a real 3x3 matrix, grouped as the analysis needs them.
struct Spectrum {
  std::array<std::complex<double>, 3> eigenvalues{};
  SpectrumKind kind = SpectrumKind::three_real;
  bool degenerate = false;  ///< discriminant within roundoff of zero

  /// The single real eigenvalue when a pair exists; the largest real root
  /// otherwise.
  double real_eigenvalue = 0.0;
  double pair_real_part = 0.0;  ///< NaN for three_real
  double pair_imag_part = 0.0;  ///< omega >= 0; NaN for three_real

  bool has_pair() const { return kind == SpectrumKind::complex_pair; }
  double max_real_part() const;
};

/// Central-difference Jacobian of rhs at `s`, step 1e-6*max(1,|component|)
/// per component. Probes must stay inside the domain of the vector field
/// (v_sa > 0); when one falls outside the step is shrunk once, and if it
/// still fails std::domain_error is thrown.
Matrix3 jacobian_fd(const CardioParams& p, const ControlVariant& variant,
                    double mu, const VolumeState& s);

/// Roots of the characteristic polynomial of m. Each root satisfies
/// |charpoly(lambda)| <= 1e-8 * max(1, |lambda|^3).
Spectrum eig3(const Matrix3& m);

/// Convenience composition: equilibrium from the default guess, Jacobian
/// there, then eig3.
Spectrum classify_at_equilibrium(const CardioParams& p,
                                 const ControlVariant& variant, double mu);

}  // namespace mayer
