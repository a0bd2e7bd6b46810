// Copyright 2026 The commq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COMMQ_MANIFEST_H
#define COMMQ_MANIFEST_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace commq {

inline constexpr const char *kVersion = "0.1.0";

/// Hex SHA-256 of a file's bytes. Throws ContractError if it cannot be read.
std::string sha256_file(const std::string &path);
std::string sha256_hex(const std::string &bytes);

struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    std::optional<std::uint64_t> seed;
    std::string version = kVersion;
    /// (path, sha256) per input file.
    std::vector<std::pair<std::string, std::string>> inputs;
    double elapsed_seconds = 0;

    void add_input(const std::string &path);
    nlohmann::json to_json() const;
};

}  // namespace commq

#endif
