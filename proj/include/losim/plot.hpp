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
#include <string>
#include <string_view>

#include "losim/telemetry.hpp"

namespace losim {

enum class PlotKind { kTrajectory, kCrossTrack, kSideslip, kTorque };

std::optional<PlotKind> parse_plot_kind(std::string_view name);

/// Render the requested quantity from parsed telemetry as a standalone SVG.
/// Trajectory plots y against x; the others plot against time. Throws
/// TelemetryError if a needed column is missing or the telemetry is empty.
std::string render_svg(const Telemetry& telemetry, PlotKind kind);

}  // namespace losim
