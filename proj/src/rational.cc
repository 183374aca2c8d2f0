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

#include "unisup/rational.h"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace unisup {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    std::uint64_t d = std::gcd(num, den);
    num_ = num / d;
    den_ = den / d;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::uint64_t parse_u64(std::string_view part, std::string_view whole) {
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_u64(text, text), 1);
    }
    return Rational(parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text));
}

}  // namespace unisup
