/*
 * Copyright 2026 The losim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>

namespace losim {

/// Reduced-order extended-state observer for the lumped cross-track
/// disturbance g = U cos(psi - alpha_k) * beta.
///
///   p_dot = -k*p - k^2*y_e - k*(U sin(psi_d - alpha_k) - alpha_rate*x_e)
///   g_hat = p + k*y_e
///
/// The output equation is algebraic: between steps, g_hat is refreshed with
/// the newest cross-track measurement via eso_output().
struct EsoState {
  double p = 0.0;         // auxiliary state, m/s
  double g_hat = 0.0;     // disturbance estimate, m/s
  double beta_hat = 0.0;  // extracted sideslip, rad; held across degenerate steps
  double k = 1.0;         // observer bandwidth, 1/s
};

/// Initial state with p = -k*y_e0 so that g_hat starts at zero regardless of
/// the initial cross-track error.
EsoState eso_init(double k, double y_e0);

/// The algebraic output p + k*y_e for the given measurement.
double eso_output(const EsoState& obs, double y_e);

/// One forward-Euler propagation. The returned state satisfies
/// g_hat == p + k*y_e with the measurement passed here; beta_hat is carried
/// over unchanged. Throws std::invalid_argument on non-finite inputs or
/// dt <= 0.
EsoState eso_step(const EsoState& obs, double y_e, double x_e, double U,
                  double psi_d, double alpha_k, double alpha_rate, double dt);

/// Sideslip from the disturbance estimate: g_hat / (U cos(psi_d - alpha_k)).
/// Returns nullopt when the denominator magnitude is below eps_den; the
/// caller then holds the previous estimate.
std::optional<double> extract_sideslip(double g_hat, double U, double psi_d,
                                       double alpha_k, double eps_den = 0.05);

}  // namespace losim
