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

namespace losim {

/// Planar kinematic state. x points North, y East, psi is the heading
/// measured from North, positive toward East.
struct VehicleState {
  double x = 0.0;      // m
  double y = 0.0;      // m
  double psi = 0.0;    // rad, in (-pi, pi]
  double r = 0.0;      // yaw rate, rad/s
  double u_rel = 0.0;  // surge speed relative to the water, m/s
};

/// Body-frame velocities with the ambient current folded in.
struct KinematicSample {
  double u = 0.0;     // m/s
  double v = 0.0;     // m/s
  double U = 0.0;     // horizontal speed sqrt(u^2 + v^2), m/s
  double beta = 0.0;  // sideslip atan2(v, u), rad
};

/// Constant ambient current in the North-East frame.
struct Environment {
  double v_north = 0.0;  // m/s
  double v_east = 0.0;   // m/s
};

/// Heading autopilot gains: proportional heading loop over a first-order
/// yaw-rate response, plus a torque-proxy scale for logging.
struct AutopilotGains {
  double k_psi = 1.0;      // 1/s
  double t_r = 0.5;        // s
  double k_torque = 50.0;  // N*m*s/rad
};

struct AutopilotCommand {
  double r_cmd = 0.0;   // rad/s
  double torque = 0.0;  // N*m
};

/// Total body-frame velocities seen over ground. The current enters as a
/// constant NE vector rotated into the body frame; sway is current-induced
/// only (the vehicle has no sway actuation).
KinematicSample body_velocities(const VehicleState& state,
                                const Environment& env);

/// Proportional heading autopilot: r_cmd = k_psi * wrap(psi_d - psi).
/// The torque proxy is k_torque * (r_cmd - r).
AutopilotCommand autopilot(const VehicleState& state, double psi_d,
                           const AutopilotGains& gains);

/// One forward-Euler step of the kinematics:
///   x_dot = u cos psi - v sin psi, y_dot = u sin psi + v cos psi,
///   psi_dot = r, r_dot = (r_cmd - r) / t_r.
/// psi is wrapped after the update. Throws std::invalid_argument on
/// non-finite inputs or dt <= 0.
VehicleState step_vehicle(const VehicleState& state, double r_cmd,
                          const Environment& env, const AutopilotGains& gains,
                          double dt);

}  // namespace losim
