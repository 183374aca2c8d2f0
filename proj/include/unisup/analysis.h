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

#ifndef UNISUP_ANALYSIS_H
#define UNISUP_ANALYSIS_H

#include <cstdint>
#include <map>
#include <ostream>
#include <string_view>
#include <vector>

namespace unisup {

/// Closed-form CNOT cost: g + m - 3 when popcount(M) = g >= 2, else 0, where
/// M is the odd part of N and m = ceil(log2 M). Throws for N == 0.
std::uint32_t cnot_count(std::uint64_t N);

/// Structural families of N with distinct CNOT behaviour.
///   I    power of two                        0
///   II   odd, 2^(n-1) + 1                    n - 1
///   III  2^n - 1                             2n - 3
///   IV   other odd N                         <= 2n - 4
///   V    even, not a power of two            <= 2n - 5
enum class Case : std::uint8_t { I, II, III, IV, V };

std::string_view case_name(Case c);

/// Symbolic bound as printed in reports, e.g. "<=2n-4".
std::string_view case_bound(Case c);

/// Throws std::invalid_argument for N < 2.
Case classify(std::uint64_t N);

struct ResourceReport {
    std::uint64_t N;
    std::uint32_t n;
    std::uint32_t g;
    std::uint32_t m;
    std::uint32_t cnot_count;
    Case case_label;
    std::size_t depth;  // of the lowered circuit
};

/// Synthesizes and lowers N to measure depth; the CNOT count is closed form.
/// Throws std::invalid_argument for N < 2.
ResourceReport resource_report(std::uint64_t N);

struct ScanRow {
    std::uint64_t N;
    std::uint32_t n;
    std::uint32_t xi;
    std::uint64_t M;
    std::uint32_t g;
    std::uint32_t m;
    std::uint32_t cnot;
    Case case_label;
};

struct ScanSummary {
    std::uint32_t n;
    std::uint32_t max_count;
    std::uint64_t argmax;  // smallest N attaining max_count
    double mean_count;
    std::map<std::uint32_t, std::uint64_t> histogram;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::vector<ScanSummary> summary;
};

constexpr std::uint32_t MAX_SCAN_N = 20;

/// For each n in [2, n_max], every N in (2^(n-1), 2^n]. Throws
/// std::out_of_range unless 2 <= n_max <= 20. With keep_rows == false only
/// the summaries are filled.
ScanResult scan(std::uint32_t n_max, bool keep_rows = true);

/// Header "N,n,xi,M,g,m,cnot,case".
void write_scan_csv(std::ostream &out, const std::vector<ScanRow> &rows);

/// Header "n,max,mean".
void write_summary_csv(std::ostream &out, const std::vector<ScanSummary> &summary);

struct LineFit {
    double slope;
    double intercept;
};

/// Ordinary least squares y = slope * x + intercept. Throws
/// std::invalid_argument for fewer than two points or mismatched sizes.
LineFit fit_line(const std::vector<double> &xs, const std::vector<double> &ys);

}  // namespace unisup

#endif
