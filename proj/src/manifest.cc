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

#include "commq/manifest.h"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "commq/error.h"

namespace commq {

std::string sha256_hex(const std::string &bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr)) {
        throw ConsistencyError("sha256 failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; i++) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return out.str();
}

std::string sha256_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ContractError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return sha256_hex(buf.str());
}

void RunManifest::add_input(const std::string &path) {
    inputs.emplace_back(path, sha256_file(path));
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["arguments"] = arguments;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["version"] = version;
    nlohmann::json ins = nlohmann::json::array();
    for (const auto &[path, digest] : inputs) {
        ins.push_back({{"path", path}, {"sha256", digest}});
    }
    j["inputs"] = std::move(ins);
    j["elapsed_seconds"] = elapsed_seconds;
    return j;
}

}  // namespace commq
