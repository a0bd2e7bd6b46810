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

#include "commq/bits.h"

#include <charconv>

#include "commq/error.h"

namespace commq {

Bits parse_bits(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw ContractError("bad bit '" + std::string(1, c) + "' at position " + std::to_string(i) + " of '" +
                                std::string(text) + "'");
        }
        out.push_back(c == '1');
    }
    return out;
}

std::string to_string(const Bits &bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

std::uint64_t bits_to_index(std::string_view bits) {
    if (bits.size() > 64) {
        throw ContractError("bit string longer than 64");
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            index |= std::uint64_t{1} << i;
        } else if (bits[i] != '0') {
            throw ContractError("bad bit '" + std::string(1, bits[i]) + "' in '" + std::string(bits) + "'");
        }
    }
    return index;
}

std::string index_to_bits(std::uint64_t index, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; i++) {
        if ((index >> i) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

std::vector<Qubit> parse_qubit_list(std::string_view text) {
    std::vector<Qubit> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto item = text.substr(pos, end - pos);
        Qubit q = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), q);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
            throw ContractError("bad qubit index '" + std::string(item) + "'");
        }
        out.push_back(q);
        pos = end + 1;
    }
    return out;
}

}  // namespace commq
