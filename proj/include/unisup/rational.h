// Copyright 2026 The unisup Authors
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

#ifndef UNISUP_RATIONAL_H
#define UNISUP_RATIONAL_H

#include <cstdint>
#include <string>
#include <string_view>

namespace unisup {

/// Exact non-negative fraction, always stored in lowest terms.
///
/// Rotation probabilities produced by the synthesizer are ratios of a power
/// of two to an odd residual, so they are kept exact until a circuit is lowered
/// to angles.
class Rational {
   public:
    constexpr Rational() = default;

    /// Throws std::invalid_argument if den == 0.
    Rational(std::uint64_t num, std::uint64_t den);

    std::uint64_t num() const {
        return num_;
    }
    std::uint64_t den() const {
        return den_;
    }

    double to_double() const;

    /// True iff 0 <= value <= 1.
    bool is_probability() const {
        return num_ <= den_;
    }

    /// "num/den", or just "num" when den == 1.
    std::string str() const;

    /// Inverse of str(). Accepts "a/b" or "a"; whitespace is not allowed.
    static Rational parse(std::string_view text);

    friend bool operator==(const Rational &, const Rational &) = default;

   private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace unisup

#endif
