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

#include "gmtrend/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gmtrend/error.hpp"

namespace gmtrend::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
  return out;
}

void close_out(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "failed writing " + path.string());
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& text, const std::filesystem::path& path, std::size_t line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::MalformedInput, path.string() + ":" + std::to_string(line) +
                                               ": not a number: '" + text + "'");
  }
  return value;
}

// Reads a CSV with a fixed header prefix into rows of numbers.
std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path,
                                                  const std::vector<std::string>& fixed_header,
                                                  const std::string& series_prefix,
                                                  std::size_t& series_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::MalformedInput, path.string() + ": empty file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split(line);
  if (header.size() <= fixed_header.size()) {
    throw Error(ErrorCode::MalformedInput, path.string() + ": header has no series columns");
  }
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string expected = c < fixed_header.size()
                                     ? fixed_header[c]
                                     : series_prefix + std::to_string(c - fixed_header.size() + 1);
    if (header[c] != expected) {
      throw Error(ErrorCode::MalformedInput, path.string() + ": header column " +
                                                 std::to_string(c + 1) + " should be '" +
                                                 expected + "', found '" + header[c] + "'");
    }
  }
  series_count = header.size() - fixed_header.size();

  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::MalformedInput, path.string() + ":" + std::to_string(line_no) +
                                                 ": expected " + std::to_string(header.size()) +
                                                 " fields, found " +
                                                 std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) row.push_back(parse_number(f, path, line_no));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string format_number(double value) {
  char buffer[40];
  const int len = std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return std::string(buffer, static_cast<std::size_t>(len));
}

void write_data_csv(const std::filesystem::path& path, const MultiSeries& series) {
  std::ofstream out = open_out(path);
  out << 's';
  for (Index j = 1; j <= series.dim(); ++j) out << ",y" << j;
  out << '\n';
  for (Index i = 0; i < series.size(); ++i) {
    out << format_number(series.epochs()(i));
    for (Index j = 0; j < series.dim(); ++j) out << ',' << format_number(series.samples()(i, j));
    out << '\n';
  }
  close_out(out, path);
}

MultiSeries read_data_csv(const std::filesystem::path& path) {
  std::size_t m = 0;
  const auto rows = read_numeric_csv(path, {"s"}, "y", m);
  Eigen::VectorXd epochs(static_cast<Index>(rows.size()));
  Eigen::MatrixXd samples(static_cast<Index>(rows.size()), static_cast<Index>(m));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    epochs(static_cast<Index>(i)) = rows[i][0];
    for (std::size_t j = 0; j < m; ++j) {
      samples(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j + 1];
    }
  }
  try {
    return validate_series(std::move(epochs), std::move(samples));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedInput, path.string() + ": " + e.what());
  }
}

void write_forecast_csv(const std::filesystem::path& path, const ForecastSequence& forecasts,
                        const MultiSeries& series, int horizon) {
  std::ofstream out = open_out(path);
  const Index m = forecasts.empty() ? series.dim() : forecasts.front().value.size();
  out << "q,s_q,s_target";
  for (Index j = 1; j <= m; ++j) out << ",g" << j;
  out << '\n';
  for (const AnchoredForecast& f : forecasts) {
    out << f.anchor << ',' << format_number(series.epoch(f.anchor)) << ','
        << format_number(series.epoch(f.anchor + horizon));
    for (Index j = 0; j < f.value.size(); ++j) out << ',' << format_number(f.value(j));
    out << '\n';
  }
  close_out(out, path);
}

ForecastSequence read_forecast_csv(const std::filesystem::path& path) {
  std::size_t m = 0;
  const auto rows = read_numeric_csv(path, {"q", "s_q", "s_target"}, "g", m);
  ForecastSequence out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const double q = row[0];
    if (q != static_cast<double>(static_cast<Index>(q)) || q < 1) {
      throw Error(ErrorCode::MalformedInput, path.string() + ": anchor is not a positive integer");
    }
    AnchoredForecast f;
    f.anchor = static_cast<Index>(q);
    f.value.resize(static_cast<Index>(m));
    for (std::size_t j = 0; j < m; ++j) f.value(static_cast<Index>(j)) = row[j + 3];
    out.push_back(std::move(f));
  }
  return out;
}

void write_metrics_csv(const std::filesystem::path& path, const MaseReport& report,
                       const std::vector<int>& labels) {
  std::ofstream out = open_out(path);
  out << "series,mase,anchors\n";
  for (Index j = 0; j < report.values.size(); ++j) {
    const int label = static_cast<std::size_t>(j) < labels.size()
                          ? labels[static_cast<std::size_t>(j)]
                          : static_cast<int>(j + 1);
    out << label << ',' << format_number(report.values(j)) << ',' << report.anchor_count << '\n';
  }
  close_out(out, path);
}

}  // namespace gmtrend::io
