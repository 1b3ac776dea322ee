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

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "losim/sim.hpp"

namespace losim {

/// Telemetry column names, with units, in log-row order.
inline constexpr std::array<const char*, 15> kTelemetryColumns = {
    "t_s",         "x_m",          "y_m",           "psi_rad",
    "r_rad_per_s", "w",            "x_e_m",         "y_e_m",
    "psi_d_rad",   "beta_rad",     "beta_hat_rad",  "beta_star_rad",
    "beta_sat_rad", "u_psi_Nm",    "w_dot_per_s"};

struct TelemetryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Strict parse of a full token; throws TelemetryError on anything else.
double parse_double(std::string_view text);

/// Render the log as CSV: header row, then one row per step.
std::string emit_csv(const RunLog& log);

void write_csv(const std::filesystem::path& path, const RunLog& log);

/// Parsed telemetry with columns accessible by name.
struct Telemetry {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // rows[i][j] pairs with columns[j]

  /// Column values by name; throws TelemetryError if absent.
  std::vector<double> column(std::string_view name) const;
  bool has_column(std::string_view name) const;
};

/// Parse CSV text; throws TelemetryError on missing header, ragged rows, or
/// malformed numbers.
Telemetry parse_csv(std::string_view text);

Telemetry read_csv(const std::filesystem::path& path);

/// Key-value metrics block, deterministic key order.
std::string emit_metrics(const RunMetrics& m);

void write_metrics(const std::filesystem::path& path, const RunMetrics& m);

}  // namespace losim
