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

#include "commq/error.h"

#include <sstream>

namespace commq {

namespace {

std::string join_diagnostics(const std::vector<std::string> &diagnostics) {
    std::ostringstream out;
    out << "invalid circuit";
    for (const auto &d : diagnostics) {
        out << "\n  " << d;
    }
    return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {
}

ParseError::ParseError(const std::string &message, std::string position)
    : Error("parse error at " + position + ": " + message), position_(std::move(position)) {
}

UnconditionableError::UnconditionableError(double probability)
    : Error("unconditionable: condition has probability " + std::to_string(probability)),
      probability_(probability) {
}

}  // namespace commq
