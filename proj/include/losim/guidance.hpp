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

#include <string>
#include <utility>

#include "losim/differentiator.hpp"
#include "losim/observer.hpp"
#include "losim/path.hpp"

namespace losim {

enum class GuidanceLaw { kLos, kAlos, kElos, kIelos };

const char* law_name(GuidanceLaw law);
GuidanceLaw parse_law(const std::string& name);  // throws on unknown name

/// Tuning for all four laws; each law reads the fields it needs.
struct GuidanceParams {
  double lookahead = 2.0;     // Delta, m
  double kappa = 10.0;        // along-track gain, 1/s
  double eso_gain = 10.0;     // observer bandwidth k, 1/s (ELOS/IELOS)
  double adapt_gain = 0.005;  // adaptation gain l, 1/(m*s) (ALOS)
  double td_speed = 30.0;     // TD speed factor r, rad/s^2 (IELOS)
  double td_filter = 0.05;    // TD filter factor h, s (IELOS)
  double beta_max = kPi;      // saturation bound, rad (IELOS)
  double eps_den = 0.05;      // extraction denominator guard, m/s
};

/// Heading command plus the sideslip-compensation diagnostics of the step.
struct GuidanceOutput {
  double psi_d = 0.0;      // rad, wrapped
  double beta_used = 0.0;  // compensation applied inside the arctan
  double beta_hat = 0.0;   // raw estimate (ESO extraction or ALOS adaptation)
  double beta_star = 0.0;  // TD-smoothed estimate (IELOS)
  double beta_sat = 0.0;   // saturated estimate (IELOS)
};

/// psi_d = wrap(alpha_k + arctan(-y_e / delta)), no compensation.
GuidanceOutput los_heading(double alpha_k, double y_e, double delta);

/// Adaptive law: psi_d uses the current estimate, then the estimate
/// integrates l * y_e * U * delta / sqrt(delta^2 + (y_e + delta*beta_hat)^2).
/// Returns the output and the updated estimate.
std::pair<GuidanceOutput, double> alos_step(double alpha_k, double y_e,
                                            double delta, double beta_hat,
                                            double U, double l, double dt);

/// Observer-compensated law using the raw extracted sideslip.
GuidanceOutput elos_heading(double alpha_k, double y_e, double delta,
                            double beta_hat);

/// Observer-compensated law fed the smoothed, saturated sideslip. The caller
/// must saturate first; |beta_sat| > beta_max throws std::invalid_argument.
GuidanceOutput ielos_heading(double alpha_k, double y_e, double delta,
                             double beta_sat, double beta_max = kPi);

/// Per-step measurements common to all laws.
struct GuidanceMeasurement {
  double alpha_k = 0.0;     // rad
  double alpha_rate = 0.0;  // rad/s
  double x_e = 0.0;         // m
  double y_e = 0.0;         // m
  double speed = 0.0;       // U, m/s
  double dt = 0.0;          // s
};

/// Uniform step interface owning the law-specific estimator state
/// (ALOS adaptation; ESO and TD for the observer-based laws).
///
/// The estimator chain of a step runs before the new heading is available,
/// so it is driven by the previous step's psi_d. The first step performs
/// initialization only: the observer starts at p = -k*y_e (so g_hat = 0) and
/// the commanded heading reduces to the plain LOS heading.
class GuidanceStepper {
 public:
  GuidanceStepper(GuidanceLaw law, const GuidanceParams& params);

  GuidanceOutput step(const GuidanceMeasurement& m);

  GuidanceLaw law() const { return law_; }
  const GuidanceParams& params() const { return params_; }
  /// True if the ALOS estimate ever hit its [-pi, pi] clamp.
  bool alos_clamped() const { return alos_clamped_; }

 private:
  GuidanceLaw law_;
  GuidanceParams params_;
  bool initialized_ = false;
  double psi_d_prev_ = 0.0;
  double alos_beta_ = 0.0;
  bool alos_clamped_ = false;
  EsoState eso_;
  TdState td_;
};

}  // namespace losim
