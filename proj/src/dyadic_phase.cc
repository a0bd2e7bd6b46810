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

#include "commq/dyadic_phase.h"

#include <bit>
#include <cmath>
#include <numbers>

#include "commq/error.h"

namespace commq {

namespace {
constexpr std::uint64_t kFull = std::uint64_t{1} << kMaxPhaseLevel;
}  // namespace

DyadicPhase DyadicPhase::elementary(int sign, int level) {
    if (sign != 1 && sign != -1) {
        throw DomainError("phase sign must be +1 or -1, got " + std::to_string(sign));
    }
    if (level < 0 || level > kMaxPhaseLevel) {
        throw DomainError("phase level " + std::to_string(level) + " outside [0, " + std::to_string(kMaxPhaseLevel) + "]");
    }
    auto p = from_turns(kFull >> level);
    return sign > 0 ? p : -p;
}

std::optional<DyadicPhase> DyadicPhase::snap(double radians, int max_level, double tolerance) {
    if (!std::isfinite(radians)) {
        return std::nullopt;
    }
    double turns = radians / (2 * std::numbers::pi);
    turns -= std::floor(turns);
    max_level = std::min(max_level, kMaxPhaseLevel);
    for (int level = 0; level <= max_level; level++) {
        double scale = std::ldexp(1.0, level);
        double n = std::round(turns * scale);
        double err = std::abs(turns - n / scale) * 2 * std::numbers::pi;
        if (err <= tolerance) {
            auto steps = static_cast<std::uint64_t>(n);
            return from_turns(steps << (kMaxPhaseLevel - level));
        }
    }
    return std::nullopt;
}

int DyadicPhase::level() const {
    if (turns_ == 0) {
        return 0;
    }
    return kMaxPhaseLevel - std::countr_zero(turns_);
}

double DyadicPhase::radians() const {
    return std::ldexp(static_cast<double>(turns_), -kMaxPhaseLevel) * 2 * std::numbers::pi;
}

std::complex<double> DyadicPhase::unit() const {
    switch (turns_) {
        case 0:
            return {1, 0};
        case kFull / 4:
            return {0, 1};
        case kFull / 2:
            return {-1, 0};
        case 3 * (kFull / 4):
            return {0, -1};
        default:
            break;
    }
    // angle in (-pi, pi] keeps the argument small
    double r = turns_ > kFull / 2 ? -std::ldexp(static_cast<double>(kFull - turns_), -kMaxPhaseLevel) * 2 * std::numbers::pi
                                  : radians();
    return std::polar(1.0, r);
}

std::string DyadicPhase::str() const {
    if (turns_ == 0) {
        return "0";
    }
    int l = level();
    std::uint64_t num = turns_ >> (kMaxPhaseLevel - l);
    return std::to_string(num) + "/" + (l < 63 ? std::to_string(std::uint64_t{1} << l) : std::string("2^62"));
}

}  // namespace commq
