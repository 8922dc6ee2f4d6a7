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

#include "gmtrend/experiments.hpp"

#include <array>
#include <iomanip>
#include <ostream>
#include <string>

#include "gmtrend/error.hpp"
#include "gmtrend/least_squares.hpp"
#include "gmtrend/metrics.hpp"
#include "gmtrend/taylor.hpp"

namespace gmtrend::experiments {

MultiSeries reference_data(bool noisy, std::uint64_t seed, int m) {
  TrendSpec trend;
  trend.m = m;
  trend.period = kPeriod;
  NoiseSpec noise;
  noise.mode = noisy ? NoiseMode::Common : NoiseMode::None;
  noise.std = kNoiseStd;
  noise.seed = seed;
  return generate(trend, noise, kSamples);
}

double TableResult::at(int window, int order, Method method) const {
  for (const TableCell& cell : cells) {
    if (cell.window == window && cell.order == order && cell.method == method) return cell.mase1;
  }
  throw Error(ErrorCode::IndexOutOfRange, "no table cell for n=" + std::to_string(window) +
                                              ", k=" + std::to_string(order));
}

TableResult reproduce_table(int table, std::uint64_t seed) {
  if (table != 1 && table != 2) {
    throw Error(ErrorCode::InvalidConfig, "only tables 1 and 2 exist");
  }
  const MultiSeries data = reference_data(table == 2, seed);

  TableResult result;
  result.table = table;
  result.seed = seed;
  for (int window : kWindows) {
    ForecastConfig config;
    config.window = window;
    config.horizon = kHorizon;

    config.method = Method::GaussMarkov;
    config.order = kOrders[std::size(kOrders) - 1];
    const GaussMarkovForecaster gm(data, config);

    for (int order : kOrders) {
      config.order = order;
      config.method = Method::LeastSquares;
      const double ls_value = mase(ls_forecast_all(data, config), data, config).values(0);
      config.method = Method::GaussMarkov;
      const double gm_value = mase(gm.forecast_all(order), data, config).values(0);
      result.cells.push_back({window, order, Method::LeastSquares, ls_value});
      result.cells.push_back({window, order, Method::GaussMarkov, gm_value});
    }
  }
  return result;
}

void print_table(std::ostream& out, const TableResult& result) {
  out << "Table " << result.table << ": MASE_1, p=" << kHorizon << ", m=" << kSeriesCount
      << ", N=" << kSamples;
  if (result.table == 2) {
    out << ", common noise std=" << kNoiseStd << ", seed=" << result.seed;
  } else {
    out << ", noise-free";
  }
  out << '\n';
  out << std::left << std::setw(6) << "n";
  for (int order : kOrders) {
    out << std::right << std::setw(12) << ("LS k=" + std::to_string(order)) << std::setw(12)
        << ("GM k=" + std::to_string(order));
  }
  out << '\n';
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(4);
  for (int window : kWindows) {
    out << std::left << std::setw(6) << window << std::right;
    for (int order : kOrders) {
      out << std::setw(12) << result.at(window, order, Method::LeastSquares) << std::setw(12)
          << result.at(window, order, Method::GaussMarkov);
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

FigureResult reproduce_figure(int figure, std::uint64_t seed) {
  FigureResult result;
  result.figure = figure;
  result.seed = seed;
  result.config.method = Method::GaussMarkov;
  result.config.horizon = kHorizon;
  switch (figure) {
    case 1:
      result.config.order = 3;
      result.config.window = 10;
      result.series_count = kSeriesCount;
      result.noisy = false;
      break;
    case 3:
      result.config.order = 1;
      result.config.window = 50;
      result.series_count = 1;
      result.noisy = true;
      break;
    case 4:
      result.config.order = 1;
      result.config.window = 50;
      result.series_count = kSeriesCount;
      result.noisy = true;
      break;
    case 5:
      result.config.order = 5;
      result.config.window = 50;
      result.series_count = kSeriesCount;
      result.noisy = true;
      break;
    default:
      throw Error(ErrorCode::InvalidConfig, "figure must be one of 1, 3, 4, 5");
  }

  // The univariate case uses column 1 of the same ten-series realization.
  MultiSeries data = reference_data(result.noisy, seed);
  if (result.series_count == 1) {
    const std::array<int, 1> first{1};
    data = data.select_columns(first);
  }

  const ForecastSequence forecasts = gm_forecast_all(data, result.config);
  result.mase1 = mase(forecasts, data, result.config).values(0);

  TrendSpec trend;
  trend.m = kSeriesCount;
  trend.period = kPeriod;
  result.rows.reserve(forecasts.size());
  for (const AnchoredForecast& f : forecasts) {
    const Index target = f.anchor + result.config.horizon;
    const double epoch = data.epoch(target);
    result.rows.push_back(
        {f.anchor, epoch, f.value(0), data.samples()(target - 1, 0), true_trend(trend, epoch, 0)(0)});
  }
  return result;
}

}  // namespace gmtrend::experiments
