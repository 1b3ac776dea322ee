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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "losim/guidance.hpp"
#include "losim/path.hpp"
#include "losim/vehicle.hpp"

namespace losim {

/// One closed-loop run configuration.
struct Scenario {
  std::string name = "scenario";
  ParametricPath path = ParametricPath::circle(10.0);
  GuidanceLaw law = GuidanceLaw::kLos;
  GuidanceParams params;
  Environment env{0.1, 0.1};
  AutopilotGains gains;
  double x0 = 0.0;
  double y0 = 0.0;
  double psi0 = 0.0;
  double w0 = 0.0;
  double speed = 0.5;       // desired surge speed relative to water, m/s
  double duration = 100.0;  // s
  double dt = 0.01;         // s
  /// Oracle mode: the heading snaps to the previous step's command instead
  /// of passing through the autopilot and yaw dynamics.
  bool perfect_heading = false;
};

struct LogRow {
  double t;          // s
  double x, y;       // m
  double psi;        // rad
  double r;          // rad/s
  double w;          // path variable
  double x_e, y_e;   // m
  double psi_d;      // rad
  double beta;       // true sideslip, rad
  double beta_hat;   // estimator output, rad
  double beta_star;  // TD-smoothed, rad
  double beta_sat;   // saturated, rad
  double torque;     // autopilot torque proxy, N*m
  double w_dot;      // 1/s
};

/// Uniformly sampled telemetry of one run. On divergence the log holds the
/// finite prefix and the flag and time are set.
struct RunLog {
  std::vector<LogRow> rows;
  bool diverged = false;
  double divergence_time = 0.0;
};

struct RunMetrics {
  std::string scenario;
  std::string law;
  double mae_xe = 0.0;             // m
  double mae_ye = 0.0;             // m
  double overshoot_ye = 0.0;       // m
  double mean_abs_torque = 0.0;    // N*m
  double max_sideslip_rate = 0.0;  // rad/s
  bool diverged = false;
  double divergence_time = 0.0;    // s, valid when diverged
  std::size_t rows = 0;
};

/// Execute the closed loop at a fixed step. Per step, in order: path frame
/// at w; tracking errors; tangent rate from the previous step's w_dot;
/// guidance (estimator chain, then heading); autopilot; plant step;
/// path-variable update; log. Divergence (|y_e| beyond ten times the larger
/// of |y_e(0)| and the path length scale, or any non-finite state) truncates
/// the log and sets the flag instead of throwing.
RunLog run(const Scenario& scenario);

/// Mean absolute along-track and cross-track errors over all logged rows.
/// Throws std::invalid_argument on an empty log.
std::pair<double, double> mae(const RunLog& log);

/// Largest excursion of y_e past the path to the side opposite its initial
/// sign: max(0, max_t(-sign(y_e(0)) * y_e(t))). Zero if y_e(0) == 0.
double overshoot(const RunLog& log);

/// Assemble the full metrics record for a completed run.
RunMetrics metrics(const Scenario& scenario, const RunLog& log);

/// Run every scenario and return one metrics row each, in input order.
std::vector<RunMetrics> compare(const std::vector<Scenario>& scenarios);

}  // namespace losim
