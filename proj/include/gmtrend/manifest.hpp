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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gmtrend {

std::string sha256_file(const std::filesystem::path& path);

/// Everything needed to replay a run. Written next to each output as
/// `<output>.manifest.json`; contains no timestamps or absolute paths so that
/// identical runs produce identical bytes.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  std::string version = GMTREND_VERSION;
  std::vector<std::pair<std::string, std::string>> inputs;   // file name, sha256
  std::vector<std::pair<std::string, std::string>> outputs;  // file name, sha256

  void add_input(const std::filesystem::path& path);
  void add_output(const std::filesystem::path& path);

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::ordered_json& j);
};

std::filesystem::path manifest_path_for(const std::filesystem::path& output);

/// Writes the manifest beside `output`, returning the manifest's path.
std::filesystem::path write_manifest(const RunManifest& manifest,
                                     const std::filesystem::path& output);

std::optional<RunManifest> read_manifest_for(const std::filesystem::path& output);

}  // namespace gmtrend
