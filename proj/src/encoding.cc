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

#include "unisup/encoding.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "unisup/synthesis.h"

namespace unisup {

namespace {

using json = nlohmann::ordered_json;

std::uint32_t index_width(std::uint64_t N) {
    return std::max<std::uint32_t>(1, ceil_log2(N));
}

// Uniform draw in [0, bound) by rejection on the top of the 64-bit range.
std::uint64_t bounded(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % bound);
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

[[noreturn]] void bad_document(const std::string &why) {
    throw std::runtime_error("malformed mapping document: " + why);
}

}  // namespace

Dataset parse_dataset(std::string_view text) {
    Dataset dataset;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        dataset.records.emplace_back(line);
        start = end + 1;
    }
    return dataset;
}

Dataset load_dataset(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read dataset " + path.string());
    }
    std::ostringstream content;
    content << in.rdbuf();
    Dataset dataset = parse_dataset(content.str());
    if (dataset.records.empty()) {
        throw std::runtime_error("dataset " + path.string() + " has no records");
    }
    return dataset;
}

std::string to_bitstring(std::uint64_t value, std::uint32_t width) {
    std::string bits(width, '0');
    for (std::uint32_t i = 0; i < width; i++) {
        if ((value >> (width - 1 - i)) & 1) {
            bits[i] = '1';
        }
    }
    return bits;
}

IndexSet build_indices(std::uint64_t N) {
    if (N == 0) {
        throw std::invalid_argument("N must be positive");
    }
    IndexSet result{index_width(N), {}};
    result.labels.reserve(N);
    for (std::uint64_t i = 0; i < N; i++) {
        result.labels.push_back(to_bitstring(i, result.n));
    }
    return result;
}

AddressMap::AddressMap(std::vector<std::uint64_t> index_to_address, std::uint64_t seed)
    : seed_(seed), forward_(std::move(index_to_address)) {
    if (forward_.empty()) {
        throw std::invalid_argument("mapping must hold at least one pair");
    }
    bits_ = index_width(forward_.size());
    constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
    reverse_.assign(forward_.size(), unset);
    for (std::uint64_t index = 0; index < forward_.size(); index++) {
        std::uint64_t address = forward_[index];
        if (address >= forward_.size() || reverse_[address] != unset) {
            throw std::invalid_argument("mapping not bijective");
        }
        reverse_[address] = index;
    }
}

std::uint64_t AddressMap::resolve(std::string_view bits) const {
    if (bits.size() != bits_) {
        throw std::invalid_argument(
            "bit string '" + std::string(bits) + "' has width " + std::to_string(bits.size()) + ", expected " +
            std::to_string(bits_));
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string '" + std::string(bits) + "' is not binary");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c - '0');
    }
    if (index >= forward_.size()) {
        throw std::out_of_range("index not in B: '" + std::string(bits) + "'");
    }
    return forward_[index];
}

std::string AddressMap::inverse(std::uint64_t address) const {
    if (address >= reverse_.size()) {
        throw std::out_of_range("address " + std::to_string(address) + " not in mapping");
    }
    return to_bitstring(reverse_[address], bits_);
}

std::vector<std::pair<std::string, std::uint64_t>> AddressMap::pairs() const {
    std::vector<std::pair<std::string, std::uint64_t>> result;
    result.reserve(forward_.size());
    for (std::uint64_t index = 0; index < forward_.size(); index++) {
        result.emplace_back(to_bitstring(index, bits_), forward_[index]);
    }
    return result;
}

AddressMap build_mapping(std::uint64_t N, std::uint64_t seed) {
    if (N == 0) {
        throw std::invalid_argument("cannot map an empty dataset");
    }
    std::vector<std::uint64_t> perm(N);
    for (std::uint64_t i = 0; i < N; i++) {
        perm[i] = i;
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = N - 1; i > 0; i--) {
        std::swap(perm[i], perm[bounded(rng, i + 1)]);
    }
    return AddressMap(std::move(perm), seed);
}

AddressMap build_mapping(const Dataset &dataset, std::uint64_t seed) {
    return build_mapping(dataset.size(), seed);
}

std::string serialize(const AddressMap &map) {
    json doc;
    doc["version"] = MAPPING_FORMAT_VERSION;
    doc["N"] = map.size();
    doc["n"] = map.bits();
    doc["seed"] = map.seed();
    json pairs = json::array();
    for (const auto &[bits, address] : map.pairs()) {
        pairs.push_back(json::array({bits, address}));
    }
    doc["pairs"] = std::move(pairs);
    return doc.dump(2) + "\n";
}

AddressMap deserialize(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        bad_document(e.what());
    }
    if (!doc.is_object()) {
        bad_document("top level is not an object");
    }
    for (const char *key : {"version", "N", "n", "seed", "pairs"}) {
        if (!doc.contains(key)) {
            bad_document(std::string("missing field '") + key + "'");
        }
    }
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != MAPPING_FORMAT_VERSION) {
        throw std::runtime_error(
            "mapping document version mismatch: expected " + std::to_string(MAPPING_FORMAT_VERSION) + ", got " +
            doc["version"].dump());
    }
    for (const char *key : {"N", "n", "seed"}) {
        if (!doc[key].is_number_unsigned()) {
            bad_document(std::string("field '") + key + "' is not a non-negative integer");
        }
    }
    const auto N = doc["N"].get<std::uint64_t>();
    const auto n = doc["n"].get<std::uint64_t>();
    const auto seed = doc["seed"].get<std::uint64_t>();
    if (N == 0) {
        bad_document("N must be positive");
    }
    if (n != index_width(N)) {
        bad_document("n = " + std::to_string(n) + " inconsistent with N = " + std::to_string(N));
    }
    const json &pairs = doc["pairs"];
    if (!pairs.is_array()) {
        bad_document("'pairs' is not a list");
    }
    if (pairs.size() != N) {
        bad_document("expected " + std::to_string(N) + " pairs, found " + std::to_string(pairs.size()));
    }

    constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> forward(N, unset);
    for (const auto &pair : pairs) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_number_unsigned()) {
            bad_document("each pair must be [bitstring, address]");
        }
        const auto &bits = pair[0].get_ref<const std::string &>();
        if (bits.size() != n || bits.find_first_not_of("01") != std::string::npos) {
            bad_document("'" + bits + "' is not a " + std::to_string(n) + "-bit string");
        }
        std::uint64_t index = std::stoull(bits, nullptr, 2);
        if (index >= N) {
            bad_document("index '" + bits + "' not in B");
        }
        if (forward[index] != unset) {
            throw std::runtime_error("mapping not bijective: duplicate bit string '" + bits + "'");
        }
        forward[index] = pair[1].get<std::uint64_t>();
    }
    try {
        return AddressMap(std::move(forward), seed);
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(e.what());
    }
}

}  // namespace unisup
