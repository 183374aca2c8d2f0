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

#include "unisup/analysis.h"

#include <bit>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "unisup/circuit.h"
#include "unisup/lowering.h"
#include "unisup/synthesis.h"

namespace unisup {

std::uint32_t cnot_count(std::uint64_t N) {
    auto [xi, M] = factor(N);
    auto g = static_cast<std::uint32_t>(std::popcount(M));
    if (g < 2) {
        return 0;
    }
    return g + ceil_log2(M) - 3;
}

std::string_view case_name(Case c) {
    switch (c) {
        case Case::I:
            return "I";
        case Case::II:
            return "II";
        case Case::III:
            return "III";
        case Case::IV:
            return "IV";
        case Case::V:
            return "V";
    }
    return "?";
}

std::string_view case_bound(Case c) {
    switch (c) {
        case Case::I:
            return "0";
        case Case::II:
            return "n-1";
        case Case::III:
            return "2n-3";
        case Case::IV:
            return "<=2n-4";
        case Case::V:
            return "<=2n-5";
    }
    return "?";
}

Case classify(std::uint64_t N) {
    if (N < 2) {
        throw std::invalid_argument("classify needs N >= 2, got " + std::to_string(N));
    }
    auto g = static_cast<std::uint32_t>(std::popcount(N));
    if (g == 1) {
        return Case::I;
    }
    if (N % 2 == 0) {
        return Case::V;
    }
    if (g == 2) {
        return Case::II;
    }
    if (g == ceil_log2(N)) {
        return Case::III;
    }
    return Case::IV;
}

ResourceReport resource_report(std::uint64_t N) {
    Case c = classify(N);
    auto p = plan(N);
    auto lowered = lower(synthesize(p));
    return {N, p.n, p.g, p.m, cnot_count(N), c, depth(lowered.circuit)};
}

ScanResult scan(std::uint32_t n_max, bool keep_rows) {
    if (n_max < 2 || n_max > MAX_SCAN_N) {
        throw std::out_of_range(
            "n_max must be in [2, " + std::to_string(MAX_SCAN_N) + "], got " + std::to_string(n_max));
    }
    ScanResult result;
    for (std::uint32_t n = 2; n <= n_max; n++) {
        ScanSummary summary{n, 0, 0, 0.0, {}};
        std::uint64_t lo = (std::uint64_t{1} << (n - 1)) + 1;
        std::uint64_t hi = std::uint64_t{1} << n;
        std::uint64_t total = 0;
        for (std::uint64_t N = lo; N <= hi; N++) {
            std::uint32_t count = cnot_count(N);
            total += count;
            summary.histogram[count]++;
            if (count > summary.max_count || summary.argmax == 0) {
                summary.max_count = count;
                summary.argmax = N;
            }
            if (keep_rows) {
                auto [xi, M] = factor(N);
                result.rows.push_back({N, n, xi, M, static_cast<std::uint32_t>(std::popcount(M)), ceil_log2(M),
                                       count, classify(N)});
            }
        }
        summary.mean_count = static_cast<double>(total) / static_cast<double>(hi - lo + 1);
        result.summary.push_back(std::move(summary));
    }
    return result;
}

void write_scan_csv(std::ostream &out, const std::vector<ScanRow> &rows) {
    out << "N,n,xi,M,g,m,cnot,case\n";
    for (const auto &r : rows) {
        out << r.N << ',' << r.n << ',' << r.xi << ',' << r.M << ',' << r.g << ',' << r.m << ',' << r.cnot << ','
            << case_name(r.case_label) << '\n';
    }
}

void write_summary_csv(std::ostream &out, const std::vector<ScanSummary> &summary) {
    out << "n,max,mean\n";
    char buf[64];
    for (const auto &s : summary) {
        std::snprintf(buf, sizeof(buf), "%.10g", s.mean_count);
        out << s.n << ',' << s.max_count << ',' << buf << '\n';
    }
}

LineFit fit_line(const std::vector<double> &xs, const std::vector<double> &ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("fit_line needs at least two paired points");
    }
    const double count = static_cast<double>(xs.size());
    double mean_x = 0;
    double mean_y = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    if (sxx == 0) {
        throw std::invalid_argument("fit_line needs distinct x values");
    }
    double slope = sxy / sxx;
    return {slope, mean_y - slope * mean_x};
}

}  // namespace unisup
