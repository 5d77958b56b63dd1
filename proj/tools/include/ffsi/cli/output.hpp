// Copyright 2026 The ffsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FFSI_CLI_OUTPUT_HPP
#define FFSI_CLI_OUTPUT_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace ffsi::cli {

std::string_view tool_version() noexcept;

/// Writes content to a sibling temporary file and renames it over path,
/// so readers never observe a partial file.
void atomic_write(const std::string& path, std::string_view content);

/// Manifest for a run: command, parameters, tool version and a UTC
/// timestamp. Replaying the parameters reproduces the payload bytes.
nlohmann::json make_manifest(std::string_view command, const nlohmann::json& params);

/// Path of the manifest written next to an output file.
std::string manifest_path(const std::string& output_path);

}  // namespace ffsi::cli

#endif  // FFSI_CLI_OUTPUT_HPP
