#pragma once

/**
 * @file config.hpp
 * @brief Line-oriented `key = value` run configuration.
 *
 * Recognized keys:
 *   variant                          one of linear_no_control (or linear),
 *                                    heart_rate, systemic_resistance,
 *                                    unstressed_volume, venous_compliance
 *   f1 f2 r1 r2 d1 d2 c1 c2          control-law constants of the active
 *                                    variant (x2 defaults to 0; x1 defaults
 *                                    to the normalized complement
 *                                    2*(base - x2))
 *   mu                               baroreflex gain
 *   c_sa c_pa c_pv c_sv c_l c_r      CardioParams overrides
 *   r_s r_p f v_o v_c v_d
 *   dt t_end transient_fraction      simulation settings
 *   mu_min mu_max steps              sweep settings
 *   mu_max_scan                      stability-scan upper limit
 *   tol                              crossing bisection tolerance
 *   allow_unnormalized               accept control constants that move the
 *                                    equilibrium (true/false)
 *
 * `#` starts a comment; unknown keys are rejected with their line number.
 */

#include <optional>
#include <string>

#include "mayer/model.hpp"

namespace mayer {

struct RunConfig {
  CardioParams params;
  ControlVariant variant;
  std::optional<double> mu;

  double dt = 1e-4;                 // minutes
  double t_end = 10.0;              // minutes
  double transient_fraction = 0.5;

  double mu_min = 1.0;
  double mu_max = 100.0;
  int steps = 200;

  double mu_max_scan = 100.0;
  double tol = 1e-6;

  bool allow_unnormalized = false;

  /// Gain to use for operations that need one: the configured mu, or 1.0
  /// for the uncontrolled linear model (where it is inert). Throws
  /// std::invalid_argument if an active variant has no gain configured.
  double require_mu() const;
};

/// Parses the file at `path`. Throws mayer::io_error if the file cannot be
/// read and std::invalid_argument (with line number or key name) on any
/// syntactic or semantic violation.
RunConfig parse_config(const std::string& path);

/// Same grammar, from an in-memory string; `origin` names the source in
/// diagnostics.
RunConfig parse_config_text(const std::string& text,
                            const std::string& origin = "<config>");

}  // namespace mayer
