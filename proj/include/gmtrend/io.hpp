/*
 * Copyright 2026 The gmtrend Authors
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
 *
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gmtrend/forecast.hpp"
#include "gmtrend/metrics.hpp"
#include "gmtrend/series.hpp"

namespace gmtrend::io {

/// Shortest decimal text with 17 significant digits ("%.17g"); parses back
/// to the identical double.
std::string format_number(double value);

/// Data CSV: header `s,y1,...,ym`, one row per epoch.
void write_data_csv(const std::filesystem::path& path, const MultiSeries& series);
MultiSeries read_data_csv(const std::filesystem::path& path);

/// Forecast CSV: header `q,s_q,s_target,g1,...,gm`.
void write_forecast_csv(const std::filesystem::path& path, const ForecastSequence& forecasts,
                        const MultiSeries& series, int horizon);
ForecastSequence read_forecast_csv(const std::filesystem::path& path);

/// Metrics CSV: header `series,mase,anchors`. `labels` names each series
/// (1-based indices into the original data file).
void write_metrics_csv(const std::filesystem::path& path, const MaseReport& report,
                       const std::vector<int>& labels);

}  // namespace gmtrend::io
