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

#ifndef COMMQ_BITS_H
#define COMMQ_BITS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace commq {

using Qubit = std::uint32_t;

/// Classical bit string, one entry (0 or 1) per position.
using Bits = std::vector<std::uint8_t>;

/// Parses "0110". Throws ContractError on any other character.
Bits parse_bits(std::string_view text);
std::string to_string(const Bits &bits);

/// Outcome index convention used across the library: character i of an
/// outcome string is bit i of the index.
std::uint64_t bits_to_index(std::string_view bits);
std::string index_to_bits(std::uint64_t index, std::size_t width);

/// Parses "0,3,5" into qubit indices. Empty text gives an empty list.
std::vector<Qubit> parse_qubit_list(std::string_view text);

}  // namespace commq

#endif
