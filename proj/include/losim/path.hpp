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

#include <functional>

namespace losim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wrap an angle to (-pi, pi]. Throws std::invalid_argument on non-finite
/// input. Idempotent; the upper boundary is included (wrap(-pi) == +pi).
double wrap_angle(double theta);

/// One evaluated point of a parametric path: position, first and second
/// parametric derivatives, and the path-tangential angle.
struct PathFrame {
  double w = 0.0;                // path variable
  double x = 0.0, y = 0.0;       // m
  double dx = 0.0, dy = 0.0;     // m per unit w
  double ddx = 0.0, ddy = 0.0;   // m per unit w^2
  double alpha = 0.0;            // rad, atan2(dy, dx), in (-pi, pi]
};

/// Position error rotated into the path-tangential frame.
struct TrackingError {
  double x_e = 0.0;  // along-track, m
  double y_e = 0.0;  // cross-track, m
};

/// Raw sample returned by a custom path callback.
struct PathPoint {
  double x, y;
  double dx, dy;
  double ddx, ddy;
};

/// Planar parametric path. Built-in circle and line shapes plus a
/// closure-style escape hatch for custom curves. Evaluation requires a
/// regular parametrization: |(dx, dy)| >= 1e-9 everywhere it is sampled.
class ParametricPath {
 public:
  enum class Kind { kCircle, kLine, kCustom };

  /// Circle of given radius traversed counter-clockwise, one turn per 2*pi
  /// of path variable. Throws std::invalid_argument unless radius > 0.
  static ParametricPath circle(double radius, double cx = 0.0, double cy = 0.0);

  /// Straight line through (ox, oy) with the given course; the path
  /// variable is arc length in metres.
  static ParametricPath line(double ox, double oy, double heading);

  /// Arbitrary curve. `scale` is a characteristic length used by the
  /// divergence guard of the simulation loop.
  static ParametricPath custom(std::function<PathPoint(double)> fn,
                               double scale = 1.0);

  /// Sample the path at w. Throws std::domain_error if the parametrization
  /// is degenerate at w.
  PathFrame evaluate(double w) const;

  Kind kind() const { return kind_; }
  double length_scale() const { return scale_; }

  // Shape parameters (meaningful for the matching kind only).
  double radius() const { return radius_; }
  double center_x() const { return cx_; }
  double center_y() const { return cy_; }
  double origin_x() const { return ox_; }
  double origin_y() const { return oy_; }
  double heading() const { return heading_; }

 private:
  ParametricPath() = default;

  Kind kind_ = Kind::kCircle;
  double scale_ = 1.0;
  double radius_ = 1.0, cx_ = 0.0, cy_ = 0.0;
  double ox_ = 0.0, oy_ = 0.0, heading_ = 0.0;
  std::function<PathPoint(double)> fn_;
};

/// Rotate the world-frame offset (x - x_k, y - y_k) into the path-tangential
/// frame of `frame`.
TrackingError tracking_errors(const PathFrame& frame, double x, double y);

/// Rate of the path-tangential angle for a given path-variable rate:
/// alpha_dot = w_dot * (dx*ddy - dy*ddx) / (dx^2 + dy^2).
double tangent_rate(const PathFrame& frame, double w_dot);

/// Virtual-point update law: w_dot = (U*cos(psi_d - alpha_k) + kappa*x_e)
/// normalized by the parametric speed |(dx, dy)|.
double path_variable_rate(const PathFrame& frame, double psi_d, double U,
                          double x_e, double kappa);

}  // namespace losim
