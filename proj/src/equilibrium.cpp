#include "mayer/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "mayer/errors.hpp"
#include "mayer/spectral.hpp"

namespace mayer {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr int kMaxIterations = 100;
constexpr int kMaxHalvings = 20;

double max_norm(const VolumeState& r) {
  return std::max({std::abs(r.v_sa), std::abs(r.v_sv), std::abs(r.v_pv)});
}

// Solves the 3x3 system J * x = -r by Gaussian elimination with partial
// pivoting.
VolumeState newton_step(const Matrix3& jac, const VolumeState& r) {
  double m[3][4] = {
      {jac(0, 0), jac(0, 1), jac(0, 2), -r.v_sa},
      {jac(1, 0), jac(1, 1), jac(1, 2), -r.v_sv},
      {jac(2, 0), jac(2, 1), jac(2, 2), -r.v_pv},
  };
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    if (m[pivot][col] == 0.0) {
      throw numeric_error("equilibrium: singular Jacobian in Newton step");
    }
    if (pivot != col) std::swap(m[pivot], m[col]);
    for (int row = col + 1; row < 3; ++row) {
      const double factor = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  double x[3];
  for (int row = 2; row >= 0; --row) {
    double acc = m[row][3];
    for (int k = row + 1; k < 3; ++k) acc -= m[row][k] * x[k];
    x[row] = acc / m[row][row];
  }
  return {x[0], x[1], x[2]};
}

}  // namespace

EquilibriumResult solve_equilibrium(const CardioParams& p,
                                    const ControlVariant& variant, double mu,
                                    const VolumeState& guess) {
  VolumeState x = guess;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const VolumeState residual = rhs(p, variant, mu, x);
    const double norm = max_norm(residual);
    if (norm <= kResidualTol) return {x, norm, iter};

    const Matrix3 jac = jacobian_fd(p, variant, mu, x);
    const VolumeState step = newton_step(jac, residual);

    double t = 1.0;
    bool accepted = false;
    VolumeState candidate;
    for (int halving = 0; halving <= kMaxHalvings; ++halving, t *= 0.5) {
      candidate = {x.v_sa + t * step.v_sa, x.v_sv + t * step.v_sv,
                   x.v_pv + t * step.v_pv};
      if (!admissible(p, candidate)) continue;
      const double new_norm = max_norm(rhs(p, variant, mu, candidate));
      if (new_norm < norm || new_norm <= kResidualTol) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // No damped step improves the residual; take the longest admissible
      // step so the iteration can escape a saturated Hill plateau.
      t = 1.0;
      bool any_admissible = false;
      for (int halving = 0; halving <= kMaxHalvings; ++halving, t *= 0.5) {
        candidate = {x.v_sa + t * step.v_sa, x.v_sv + t * step.v_sv,
                     x.v_pv + t * step.v_pv};
        if (admissible(p, candidate)) {
          any_admissible = true;
          break;
        }
      }
      if (!any_admissible) {
        throw numeric_error(
            "equilibrium: no admissible damped Newton step from (" +
            std::to_string(x.v_sa) + ", " + std::to_string(x.v_sv) + ", " +
            std::to_string(x.v_pv) + ")");
      }
    }
    x = candidate;
  }
  throw numeric_error("equilibrium: no convergence after " +
                      std::to_string(kMaxIterations) + " iterations");
}

EquilibriumResult solve_equilibrium(const CardioParams& p,
                                    const ControlVariant& variant, double mu) {
  return solve_equilibrium(p, variant, mu, default_equilibrium_guess());
}

}  // namespace mayer
