#pragma once

/**
 * @file bifurcation.hpp
 * @brief Gain sweeps, Hopf crossing location and two-parameter stability
 *        boundaries.
 *
 * The bifurcation parameter is the baroreflex gain mu. A crossing point is
 * the gain at which the real part of the conjugate eigenvalue pair of the
 * linearization passes through zero; the pair's imaginary part there gives
 * the angular frequency of the emerging oscillation.
 *
 * Grid evaluations are independent and run on a small thread pool; results
 * are always emitted in ascending parameter order.
 */

#include <optional>
#include <vector>

#include "mayer/spectral.hpp"

namespace mayer {

/// Spectrum summary at one gain value of a sweep.
struct SweepPoint {
  double mu = 0.0;
  bool failed = false;    ///< equilibrium or Jacobian evaluation failed
  bool has_pair = false;  ///< false also marks a three-real spectrum
  double pair_real_part = 0.0;   ///< 1/min; NaN unless has_pair
  double pair_imag_part = 0.0;   ///< 1/min; NaN unless has_pair
  double real_eigenvalue = 0.0;  ///< 1/min; NaN when failed
};

/// Located Hopf crossing.
struct CrossingResult {
  double mu_star = 0.0;
  double omega_star = 0.0;  ///< rad/min
  double period_s = 0.0;    ///< 60 * 2*pi / omega_star
  double bracket_lo = 0.0;  ///< input bracket
  double bracket_hi = 0.0;
  int bisection_iterations = 0;
};

/// Outcome of a stability scan over (0, mu_max].
struct ScanResult {
  bool stable = true;  ///< no sign change of the pair's real part found
  /// Largest pair real part observed on the grid (NaN if no grid point had
  /// a conjugate pair).
  double max_pair_real_part = 0.0;
  /// Largest real part over all eigenvalues observed on the grid.
  double max_real_part = 0.0;
  std::optional<CrossingResult> crossing;
};

enum class BoundaryFamily {
  unstressed_volume,  ///< secondary parameter is the volume offset D2
  venous_compliance,  ///< secondary parameter is the compliance offset C2
};

/// One point of the two-parameter stability boundary. When no crossing
/// exists below the scan limit, `crossing_found` is false and the numeric
/// fields are NaN ("stable up to mu_max").
struct BoundaryPoint {
  double secondary = 0.0;
  bool crossing_found = false;
  double mu_star = 0.0;
  double omega_star = 0.0;
  double period_s = 0.0;
};

using BoundaryCurve = std::vector<BoundaryPoint>;

/// Classifies the equilibrium spectrum on a uniform mu grid of `steps`
/// points spanning [mu_min, mu_max]. Per-point failures are recorded in the
/// output rather than aborting the sweep. Requires 0 < mu_min < mu_max and
/// steps >= 2.
std::vector<SweepPoint> sweep_mu(const CardioParams& p,
                                 const ControlVariant& variant, double mu_min,
                                 double mu_max, int steps);

/// Bisection on the pair's real part down to bracket width <= tol. Both
/// endpoints must carry a conjugate pair with opposite-sign real parts;
/// otherwise mayer::numeric_error is thrown.
CrossingResult find_crossing(const CardioParams& p,
                             const ControlVariant& variant, double mu_lo,
                             double mu_hi, double tol = 1e-6);

/// Coarse sweep over (0, mu_max] (default 200 points) followed by
/// find_crossing on the first bracket whose endpoints both carry pairs with
/// a sign change.
ScanResult stability_scan(const CardioParams& p, const ControlVariant& variant,
                          double mu_max, int grid_points = 200);

/// One stability scan per secondary value, with the control constants
/// normalized so the equilibrium stays put: d1 = 2*(v_d_base - d2) for the
/// volume family (d2 in [0, v_d_base)), c1 = 2*(c_sv_base - c2) for the
/// compliance family (c2 in [0, c_sv_base)).
BoundaryCurve boundary_curve(const CardioParams& p, BoundaryFamily family,
                             const std::vector<double>& grid, double mu_max);

/// Builds the normalized variant a boundary grid point uses.
ControlVariant boundary_variant(const CardioParams& p, BoundaryFamily family,
                                double secondary);

}  // namespace mayer
