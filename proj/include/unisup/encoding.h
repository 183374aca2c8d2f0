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

#ifndef UNISUP_ENCODING_H
#define UNISUP_ENCODING_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace unisup {

/// Classical side of the encoder: records are addressed by their position,
/// each address is paired with one n-bit index in {0..N-1}, and the prepared
/// quantum state is the uniform superposition over those indices. The pairing
/// is an arbitrary (seeded) permutation, recorded so that measured indices
/// can be resolved back to records afterwards.

/// Ordered opaque records. Address i refers to records[i].
struct Dataset {
    std::vector<std::string> records;

    std::size_t size() const {
        return records.size();
    }
};

/// Splits newline-delimited text into records. A trailing newline does not
/// start an extra record and a trailing '\r' is stripped from each line.
Dataset parse_dataset(std::string_view text);

/// Reads a newline-delimited record file. Throws std::runtime_error if the
/// file cannot be read or holds no records.
Dataset load_dataset(const std::filesystem::path &path);

struct IndexSet {
    std::uint32_t n;                  // bits per index
    std::vector<std::string> labels;  // binary spellings of 0..N-1, MSB first
};

/// n = max(1, ceil(log2 N)). Throws std::invalid_argument for N == 0.
IndexSet build_indices(std::uint64_t N);

/// n-bit binary spelling of value, most significant bit first.
std::string to_bitstring(std::uint64_t value, std::uint32_t width);

/// Bijection between N bit-string indices and N record addresses.
class AddressMap {
   public:
    /// Throws std::invalid_argument unless index_to_address is a permutation
    /// of 0..N-1 with N >= 1.
    AddressMap(std::vector<std::uint64_t> index_to_address, std::uint64_t seed);

    std::uint64_t size() const {
        return forward_.size();
    }
    std::uint32_t bits() const {
        return bits_;
    }
    std::uint64_t seed() const {
        return seed_;
    }

    /// Address paired with the bit string. Throws std::invalid_argument for a
    /// wrong-width or non-binary string and std::out_of_range for an index
    /// outside 0..N-1.
    std::uint64_t resolve(std::string_view bits) const;

    /// Bit string paired with the address. Throws std::out_of_range if
    /// address >= N.
    std::string inverse(std::uint64_t address) const;

    /// (bit string, address) pairs in ascending index order.
    std::vector<std::pair<std::string, std::uint64_t>> pairs() const;

    friend bool operator==(const AddressMap &, const AddressMap &) = default;

   private:
    std::uint32_t bits_;
    std::uint64_t seed_;
    std::vector<std::uint64_t> forward_;  // index -> address
    std::vector<std::uint64_t> reverse_;  // address -> index
};

/// Seeded Fisher-Yates permutation over a 64-bit Mersenne Twister, with
/// rejection sampling for the bounded draws so the result depends only on
/// (N, seed) and not on the standard library implementation.
AddressMap build_mapping(const Dataset &dataset, std::uint64_t seed);
AddressMap build_mapping(std::uint64_t N, std::uint64_t seed);

constexpr int MAPPING_FORMAT_VERSION = 1;

/// JSON document {version, N, n, seed, pairs: [[bitstring, address], ...]}.
std::string serialize(const AddressMap &map);

/// Throws std::runtime_error for malformed documents, version mismatches and
/// pair lists that are not a bijection onto 0..N-1.
AddressMap deserialize(std::string_view text);

}  // namespace unisup

#endif
