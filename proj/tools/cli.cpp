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

#include "cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "gmtrend/datagen.hpp"
#include "gmtrend/error.hpp"
#include "gmtrend/experiments.hpp"
#include "gmtrend/forecast.hpp"
#include "gmtrend/io.hpp"
#include "gmtrend/manifest.hpp"
#include "gmtrend/metrics.hpp"

namespace gmtrend::cli {

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidConfig:
    case ErrorCode::SeriesTooShort:
    case ErrorCode::Underdetermined:
    case ErrorCode::BadCount:
      return kExitUsage;
    default:
      return kExitRuntime;
  }
}

std::vector<int> all_columns(Index m) {
  std::vector<int> cols(static_cast<std::size_t>(m));
  for (Index j = 0; j < m; ++j) cols[static_cast<std::size_t>(j)] = static_cast<int>(j + 1);
  return cols;
}

struct GenerateArgs {
  std::string trend = "sin";
  int m = 10;
  long long samples = 4000;
  double period = 1000.0;
  std::string noise = "none";
  double std = 0.125;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct ForecastArgs {
  std::string method = "gm";
  int order = 1;
  int window = 10;
  int horizon = 100;
  std::vector<int> series;
  bool skip_warmup = false;
  std::string in;
  std::string out;
};

struct EvaluateArgs {
  std::optional<std::string> method;
  std::optional<int> order;
  std::optional<int> window;
  std::optional<int> horizon;
  std::vector<int> series;
  bool skip_warmup = false;
  std::string in;
  std::string forecasts;
  std::string out;
};

struct ReproduceArgs {
  std::optional<int> table;
  std::optional<int> figure;
  std::uint64_t seed = 42;
  std::string out = ".";
};

int do_generate(const GenerateArgs& a, std::ostream& out) {
  if (a.trend != "sin") throw UsageError("unsupported --trend '" + a.trend + "' (only 'sin')");
  TrendSpec trend;
  trend.m = a.m;
  trend.period = a.period;
  NoiseSpec noise;
  noise.mode = parse_noise_mode(a.noise);
  noise.std = a.std;
  if (noise.mode != NoiseMode::None) {
    if (!a.seed) throw UsageError("--seed is required when --noise is not 'none'");
    noise.seed = *a.seed;
  }
  const MultiSeries series = generate(trend, noise, static_cast<Index>(a.samples));

  const fs::path path = a.out;
  io::write_data_csv(path, series);

  RunManifest manifest;
  manifest.command = "generate";
  manifest.parameters["trend"] = a.trend;
  manifest.parameters["m"] = a.m;
  manifest.parameters["samples"] = a.samples;
  manifest.parameters["period"] = a.period;
  manifest.parameters["noise"] = noise_mode_name(noise.mode);
  if (noise.mode != NoiseMode::None) {
    manifest.parameters["std"] = a.std;
    manifest.seed = noise.seed;
  }
  manifest.add_output(path);
  write_manifest(manifest, path);
  out << "wrote " << series.size() << " rows x " << series.dim() << " series to " << a.out
      << '\n';
  return kExitOk;
}

int do_forecast(const ForecastArgs& a, std::ostream& out) {
  ForecastConfig config;
  config.method = parse_method(a.method);
  config.order = a.order;
  config.window = a.window;
  config.horizon = a.horizon;
  config.skip_warmup = a.skip_warmup;

  const fs::path in_path = a.in;
  MultiSeries data = io::read_data_csv(in_path);
  const std::vector<int> columns = a.series.empty() ? all_columns(data.dim()) : a.series;
  if (!a.series.empty()) data = data.select_columns(columns);

  const ForecastSequence forecasts = forecast_all(data, config);
  const fs::path out_path = a.out;
  io::write_forecast_csv(out_path, forecasts, data, config.horizon);

  RunManifest manifest;
  manifest.command = "forecast";
  manifest.parameters["method"] = method_name(config.method);
  manifest.parameters["order"] = config.order;
  manifest.parameters["window"] = config.window;
  manifest.parameters["horizon"] = config.horizon;
  manifest.parameters["series"] = columns;
  manifest.parameters["skip_warmup"] = config.skip_warmup;
  manifest.add_input(in_path);
  manifest.add_output(out_path);
  write_manifest(manifest, out_path);
  out << "wrote " << forecasts.size() << " forecasts to " << a.out << '\n';
  return kExitOk;
}

int do_evaluate(const EvaluateArgs& a, std::ostream& out) {
  const fs::path data_path = a.in;
  const fs::path forecast_path = a.forecasts;
  const std::optional<RunManifest> source = read_manifest_for(forecast_path);
  const nlohmann::ordered_json params =
      source ? source->parameters : nlohmann::ordered_json::object();

  auto pick_int = [&](const std::optional<int>& flag, const char* key) -> int {
    if (flag) return *flag;
    if (params.contains(key)) return params.at(key).get<int>();
    throw UsageError(std::string("--") + key +
                     " is required (no forecast manifest provides it)");
  };

  ForecastConfig config;
  config.window = pick_int(a.window, "window");
  config.horizon = pick_int(a.horizon, "horizon");
  config.order = a.order ? *a.order : params.value("order", 0);
  config.method = parse_method(a.method ? *a.method : params.value("method", std::string("gm")));
  config.skip_warmup = a.skip_warmup || params.value("skip_warmup", false);

  MultiSeries data = io::read_data_csv(data_path);
  std::vector<int> columns = a.series;
  if (columns.empty() && params.contains("series")) {
    columns = params.at("series").get<std::vector<int>>();
  }
  if (columns.empty()) columns = all_columns(data.dim());
  data = data.select_columns(columns);

  const ForecastSequence forecasts = io::read_forecast_csv(forecast_path);
  const MaseReport report = mase(forecasts, data, config);

  const fs::path out_path = a.out;
  io::write_metrics_csv(out_path, report, columns);

  RunManifest manifest;
  manifest.command = "evaluate";
  manifest.parameters["method"] = method_name(config.method);
  manifest.parameters["order"] = config.order;
  manifest.parameters["window"] = config.window;
  manifest.parameters["horizon"] = config.horizon;
  manifest.parameters["series"] = columns;
  manifest.parameters["skip_warmup"] = config.skip_warmup;
  manifest.add_input(data_path);
  manifest.add_input(forecast_path);
  manifest.add_output(out_path);
  write_manifest(manifest, out_path);

  out << "series,mase,anchors\n";
  for (Index j = 0; j < report.values.size(); ++j) {
    out << columns[static_cast<std::size_t>(j)] << ',' << io::format_number(report.values(j))
        << ',' << report.anchor_count << '\n';
  }
  return kExitOk;
}

int do_reproduce(const ReproduceArgs& a, std::ostream& out) {
  if (a.table.has_value() == a.figure.has_value()) {
    throw UsageError("give exactly one of --table or --figure");
  }
  const fs::path dir = a.out;
  fs::create_directories(dir);

  RunManifest manifest;
  manifest.command = "reproduce";
  fs::path path;
  if (a.table) {
    if (*a.table != 1 && *a.table != 2) throw UsageError("--table must be 1 or 2");
    const auto result = experiments::reproduce_table(*a.table, a.seed);
    experiments::print_table(out, result);

    path = dir / ("table" + std::to_string(*a.table) + ".csv");
    std::ofstream csv(path, std::ios::binary | std::ios::trunc);
    if (!csv) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
    csv << "window,order,method,mase1\n";
    for (const auto& cell : result.cells) {
      csv << cell.window << ',' << cell.order << ',' << method_name(cell.method) << ','
          << io::format_number(cell.mase1) << '\n';
    }
    csv.close();
    manifest.parameters["table"] = *a.table;
    if (*a.table == 2) manifest.seed = a.seed;
  } else {
    const auto result = experiments::reproduce_figure(*a.figure, a.seed);
    out << "Figure " << result.figure << ": Gauss-Markov order " << result.config.order
        << ", n=" << result.config.window << ", p=" << result.config.horizon
        << ", m=" << result.series_count << (result.noisy ? ", common noise" : ", noise-free")
        << "\nMASE_1 = " << io::format_number(result.mase1) << '\n';

    path = dir / ("figure" + std::to_string(*a.figure) + ".csv");
    std::ofstream csv(path, std::ios::binary | std::ios::trunc);
    if (!csv) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
    csv << "q,s_target,forecast,sample,trend\n";
    for (const auto& row : result.rows) {
      csv << row.anchor << ',' << io::format_number(row.target_epoch) << ','
          << io::format_number(row.forecast) << ',' << io::format_number(row.sample) << ','
          << io::format_number(row.trend) << '\n';
    }
    csv.close();
    manifest.parameters["figure"] = *a.figure;
    if (result.noisy) manifest.seed = a.seed;
    manifest.parameters["mase1"] = result.mase1;
  }
  manifest.add_output(path);
  write_manifest(manifest, path);
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local polynomial trend forecasting with Gauss-Markov regression", "gmtrend"};
  app.set_version_flag("--version", GMTREND_VERSION);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write synthetic sinusoidal data");
  generate_cmd->add_option("--trend", gen.trend, "Trend family")->capture_default_str();
  generate_cmd->add_option("--m", gen.m, "Number of series")->capture_default_str();
  generate_cmd->add_option("--samples", gen.samples, "Number of epochs N")->capture_default_str();
  generate_cmd->add_option("--period", gen.period, "Sinusoid period")->capture_default_str();
  generate_cmd->add_option("--noise", gen.noise, "none | common | independent")
      ->check(CLI::IsMember({"none", "common", "independent"}))
      ->capture_default_str();
  generate_cmd->add_option("--std", gen.std, "Noise standard deviation")->capture_default_str();
  generate_cmd->add_option("--seed", gen.seed, "Noise seed (required with noise)");
  generate_cmd->add_option("--out", gen.out, "Output data CSV")->required();

  ForecastArgs fc;
  auto* forecast_cmd = app.add_subcommand("forecast", "Forecast every anchor of a data CSV");
  forecast_cmd->add_option("--method", fc.method, "gm | ls | naive")
      ->check(CLI::IsMember({"gm", "ls", "naive"}))
      ->capture_default_str();
  forecast_cmd->add_option("--order", fc.order, "Polynomial order k")->capture_default_str();
  forecast_cmd->add_option("--window", fc.window, "Memory n")->capture_default_str();
  forecast_cmd->add_option("--horizon", fc.horizon, "Horizon p")->capture_default_str();
  forecast_cmd->add_option("--series", fc.series, "1-based columns to use, e.g. 1,3")
      ->delimiter(',');
  forecast_cmd->add_flag("--skip-warmup", fc.skip_warmup,
                         "Only anchors whose recursive windows have no padding");
  forecast_cmd->add_option("--in", fc.in, "Input data CSV")->required();
  forecast_cmd->add_option("--out", fc.out, "Output forecast CSV")->required();

  EvaluateArgs ev;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "MASE of a forecast CSV");
  evaluate_cmd->add_option("--method", ev.method, "Overrides the forecast manifest")
      ->check(CLI::IsMember({"gm", "ls", "naive"}));
  evaluate_cmd->add_option("--order", ev.order, "Overrides the forecast manifest");
  evaluate_cmd->add_option("--window", ev.window, "Overrides the forecast manifest");
  evaluate_cmd->add_option("--horizon", ev.horizon, "Overrides the forecast manifest");
  evaluate_cmd->add_option("--series", ev.series, "Overrides the forecast manifest")
      ->delimiter(',');
  evaluate_cmd->add_flag("--skip-warmup", ev.skip_warmup, "Evaluate only warm anchors");
  evaluate_cmd->add_option("--in", ev.in, "Data CSV")->required();
  evaluate_cmd->add_option("--forecasts", ev.forecasts, "Forecast CSV")->required();
  evaluate_cmd->add_option("--out", ev.out, "Output metrics CSV")->required();

  ReproduceArgs rp;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a reference experiment");
  auto* table_opt = reproduce_cmd->add_option("--table", rp.table, "1 or 2");
  auto* figure_opt = reproduce_cmd->add_option("--figure", rp.figure, "1, 3, 4 or 5");
  table_opt->excludes(figure_opt);
  reproduce_cmd->add_option("--seed", rp.seed, "Noise seed")->capture_default_str();
  reproduce_cmd->add_option("--out", rp.out, "Output directory")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate_cmd->parsed()) return do_generate(gen, out);
    if (forecast_cmd->parsed()) return do_forecast(fc, out);
    if (evaluate_cmd->parsed()) return do_evaluate(ev, out);
    if (reproduce_cmd->parsed()) return do_reproduce(rp, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace gmtrend::cli
