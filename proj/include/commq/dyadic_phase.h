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

#ifndef COMMQ_DYADIC_PHASE_H
#define COMMQ_DYADIC_PHASE_H

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace commq {

/// Largest level k for which 2*pi/2^k is representable.
inline constexpr int kMaxPhaseLevel = 62;

/// An angle that is an integer multiple of 2*pi/2^62, kept reduced mod 2*pi.
///
/// Elementary phase-shift angles +-2*pi/2^k are the generators; sums of them
/// stay exact because the representation is a 62-bit integer numerator over a
/// fixed power-of-two denominator. Floating point only appears in `radians()`
/// and `unit()`.
class DyadicPhase {
   public:
    constexpr DyadicPhase() = default;

    /// sign * 2*pi / 2^level. Throws DomainError for |sign| != 1 or level outside [0, 62].
    static DyadicPhase elementary(int sign, int level);

    /// numerator * 2*pi / 2^62, reduced.
    static constexpr DyadicPhase from_turns(std::uint64_t numerator) {
        DyadicPhase p;
        p.turns_ = numerator & kMask;
        return p;
    }

    /// Nearest phase of level <= max_level within `tolerance` radians of `radians`, coarsest level first.
    static std::optional<DyadicPhase> snap(double radians, int max_level, double tolerance);

    std::uint64_t turns() const {
        return turns_;
    }
    bool is_zero() const {
        return turns_ == 0;
    }
    /// Smallest k such that the angle is a multiple of 2*pi/2^k.
    int level() const;

    /// Angle in [0, 2*pi).
    double radians() const;
    /// e^{i*angle}; exact for multiples of pi/2.
    std::complex<double> unit() const;

    DyadicPhase operator+(DyadicPhase other) const {
        return from_turns(turns_ + other.turns_);
    }
    DyadicPhase operator-(DyadicPhase other) const {
        return from_turns(turns_ - other.turns_);
    }
    DyadicPhase operator-() const {
        return from_turns(0 - turns_);
    }
    DyadicPhase &operator+=(DyadicPhase other) {
        turns_ = (turns_ + other.turns_) & kMask;
        return *this;
    }
    bool operator==(const DyadicPhase &other) const = default;

    /// "k/2^L turns" in lowest terms, e.g. "1/4" for pi/2.
    std::string str() const;

   private:
    static constexpr std::uint64_t kMask = (std::uint64_t{1} << kMaxPhaseLevel) - 1;
    std::uint64_t turns_ = 0;
};

}  // namespace commq

#endif
