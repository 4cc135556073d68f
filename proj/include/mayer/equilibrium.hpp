#pragma once

/**
 * @file equilibrium.hpp
 * @brief Damped Newton search for the steady state of the feedback model.
 */

#include "mayer/model.hpp"

namespace mayer {

struct EquilibriumResult {
  VolumeState state;
  double residual_norm = 0.0;  ///< max-norm of rhs at `state` [l/min]
  int iterations = 0;
};

/// The known physiological equilibrium (1.0, 3.5, 0.4), used as the default
/// starting point.
inline VolumeState default_equilibrium_guess() { return {1.0, 3.5, 0.4}; }

/// Newton iteration with the finite-difference Jacobian and step halving
/// (up to 20 halvings) that keeps iterates admissible and the residual
/// decreasing; when no damped step decreases the residual, the longest
/// admissible step is taken so the iteration can cross flat saturated
/// regions of the Hill response. Convergence is declared when the max-norm
/// of rhs drops to 1e-10 or below.
///
/// Throws mayer::numeric_error after 100 iterations without convergence or
/// when no admissible damped step exists.
EquilibriumResult solve_equilibrium(const CardioParams& p,
                                    const ControlVariant& variant, double mu,
                                    const VolumeState& guess);

EquilibriumResult solve_equilibrium(const CardioParams& p,
                                    const ControlVariant& variant, double mu);

}  // namespace mayer
