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

#include "losim/path.hpp"  // kPi

namespace losim {

/// Sign function with sign(0) = 0, used consistently by fsg/fhan/saturate.
inline double sign0(double x) { return (x > 0.0) - (x < 0.0); }

/// fsg(x, d) = (sign(x + d) - sign(x - d)) / 2; takes values {0, 0.5, 1}
/// for d > 0.
double fsg(double x, double d);

/// Han's time-optimal synthesis function. r is the speed factor (rad/s^2),
/// h the filter factor (s). |fhan| <= r for all inputs.
double fhan(double v1, double v2, double r, double h);

/// Second-order tracking differentiator driven by fhan. v1 tracks the input,
/// v2 its derivative.
struct TdState {
  double v1 = 0.0;  // rad
  double v2 = 0.0;  // rad/s
  double r = 30.0;  // speed factor, rad/s^2
  double h = 0.05;  // filter factor, s
};

/// One Euler step:
///   a = fhan(v1 - input, v2, r, h); v1 += dt*v2; v2 += dt*a.
/// Throws std::invalid_argument on non-finite input or dt <= 0.
TdState td_step(const TdState& td, double input, double dt);

/// Anti-saturation stage: clip to +-beta_max with sign0 at the boundary.
double saturate(double beta_star, double beta_max = kPi);

}  // namespace losim
