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

#include "unisup/cli.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "unisup/analysis.h"
#include "unisup/circuit_document.h"
#include "unisup/encoding.h"
#include "unisup/lowering.h"
#include "unisup/qasm.h"
#include "unisup/simulator.h"
#include "unisup/synthesis.h"

namespace unisup {

namespace {

void write_output(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write " + path);
    }
    file << content;
    if (!file) {
        throw std::runtime_error("cannot write " + path);
    }
}

std::string read_file(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream content;
    content << file.rdbuf();
    return content.str();
}

std::string render(const Circuit &circuit, const std::string &format) {
    if (format == "qasm") {
        return emit_qasm(circuit);
    }
    return emit_document(circuit);
}

std::string format_double(double value) {
    std::ostringstream s;
    s.precision(3);
    s << value;
    return s.str();
}

int cmd_synth(std::uint64_t N, bool lower_flag, const std::string &format, const std::string &path,
              std::ostream &out, std::ostream &err) {
    if (format == "qasm" && !lower_flag) {
        err << "error: --format qasm requires --lower\n";
        return EXIT_INVALID;
    }
    Circuit circuit = synthesize(N);
    if (lower_flag) {
        circuit = lower(circuit).circuit;
    }
    write_output(path, render(circuit, format), out);
    return EXIT_OK;
}

int cmd_lower(const std::string &input, const std::string &format, const std::string &path, std::ostream &out) {
    Circuit circuit = parse_document(read_file(input));
    if (circuit.level() == Level::Abstract) {
        circuit = lower(circuit).circuit;
    }
    write_output(path, render(circuit, format), out);
    return EXIT_OK;
}

int cmd_verify(std::uint64_t N, double tolerance, std::ostream &out, std::ostream &err) {
    if (N == 0 || N > (std::uint64_t{1} << MAX_SIM_QUBITS)) {
        err << "error: N must be in [1, 2^" << MAX_SIM_QUBITS << "]\n";
        return EXIT_INVALID;
    }
    Circuit abstract = synthesize(N);
    LoweredCircuit lowered = lower(abstract);
    double abstract_distance = uniform_distance(run(abstract), N);
    double lowered_distance = uniform_distance(run(lowered.circuit), N);
    bool pass = abstract_distance <= tolerance && lowered_distance <= tolerance;
    out << "N=" << N << " n=" << abstract.num_qubits() << " entanglers=" << entangler_count(lowered.circuit) << "\n";
    out << "abstract distance=" << format_double(abstract_distance) << "\n";
    out << "lowered distance=" << format_double(lowered_distance) << "\n";
    out << "tolerance=" << format_double(tolerance) << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? EXIT_OK : EXIT_VERIFY_FAILED;
}

int cmd_count(std::uint64_t N, std::ostream &out) {
    auto p = plan(N);
    out << "N=" << N << " n=" << p.n << " xi=" << p.xi << " M=" << p.M << " g=" << p.g << " m=" << p.m;
    out << " cnot=" << cnot_count(N);
    if (N >= 2) {
        auto report = resource_report(N);
        out << " case=" << case_name(report.case_label) << " bound=" << case_bound(report.case_label)
            << " depth=" << report.depth;
    }
    out << "\n";
    return EXIT_OK;
}

int cmd_scan(std::uint32_t n_max, const std::string &csv_path, const std::string &summary_path, std::ostream &out) {
    ScanResult result = scan(n_max, !csv_path.empty());
    if (!csv_path.empty()) {
        std::ostringstream rows;
        write_scan_csv(rows, result.rows);
        write_output(csv_path, rows.str(), out);
    }
    std::ostringstream summary;
    write_summary_csv(summary, result.summary);
    write_output(summary_path, summary.str(), out);
    return EXIT_OK;
}

int cmd_encode(const std::string &dataset_path, std::uint64_t seed, const std::string &mapping_path,
               const std::string &circuit_path, const std::string &format, std::ostream &out) {
    Dataset dataset = load_dataset(dataset_path);
    AddressMap mapping = build_mapping(dataset, seed);
    LoweredCircuit lowered = lower(synthesize(dataset.size()));
    write_output(mapping_path, serialize(mapping), out);
    write_output(circuit_path, render(lowered.circuit, format), out);
    out << "N=" << dataset.size() << " n=" << mapping.bits() << " cnot=" << entangler_count(lowered.circuit)
        << "\n";
    return EXIT_OK;
}

int cmd_resolve(const std::string &mapping_path, const std::string &bits, std::ostream &out) {
    AddressMap mapping = deserialize(read_file(mapping_path));
    out << mapping.resolve(bits) << "\n";
    return EXIT_OK;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Uniform superposition circuit synthesis toolkit", "unisup"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"doc", "qasm"};

    std::uint64_t N = 0;
    bool lower_flag = false;
    std::string format = "doc";
    std::string output;
    auto *synth = app.add_subcommand("synth", "Synthesize the circuit preparing the uniform state over 0..N-1");
    synth->add_option("N", N, "Number of basis states")->required();
    synth->add_flag("--lower", lower_flag, "Lower to {H, X, Z, Ry, CNOT, CZ}");
    synth->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    synth->add_option("-o,--output", output, "Output path (default stdout)");

    std::string input;
    auto *lower_cmd = app.add_subcommand("lower", "Lower a circuit document");
    lower_cmd->add_option("document", input, "Circuit document path")->required();
    lower_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    lower_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    auto *export_cmd = app.add_subcommand("export", "Write a circuit document as OpenQASM 2.0, lowering if needed");
    export_cmd->add_option("document", input, "Circuit document path")->required();
    export_cmd->add_option("-o,--output", output, "Output path (default stdout)");

    double tolerance = 1e-10;
    auto *verify = app.add_subcommand("verify", "Simulate abstract and lowered circuits against the target state");
    verify->add_option("N", N, "Number of basis states")->required();
    verify->add_option("--tolerance", tolerance, "Maximum allowed amplitude error");

    auto *count = app.add_subcommand("count", "Closed-form CNOT count and case of N");
    count->add_option("N", N, "Number of basis states")->required();

    std::uint32_t n_max = 0;
    std::string csv_path;
    std::string summary_path;
    auto *scan_cmd = app.add_subcommand("scan", "CNOT counts for every N up to 2^n_max");
    scan_cmd->add_option("--n-max", n_max, "Largest register width")->required();
    scan_cmd->add_option("--csv", csv_path, "Per-N CSV output path");
    scan_cmd->add_option("--summary", summary_path, "Per-n summary CSV path (default stdout)");

    std::string dataset_path;
    std::uint64_t seed = 0;
    std::string mapping_path;
    std::string circuit_path;
    auto *encode = app.add_subcommand("encode", "Map records to indices and emit the superposing circuit");
    encode->add_option("dataset", dataset_path, "Newline-delimited record file")->required();
    encode->add_option("--seed", seed, "Permutation seed");
    encode->add_option("--mapping-out", mapping_path, "Mapping document path")->required();
    encode->add_option("--circuit-out", circuit_path, "Lowered circuit path")->required();
    encode->add_option("--format", format, "Circuit format")->check(CLI::IsMember(formats));

    std::string bits;
    auto *resolve_cmd = app.add_subcommand("resolve", "Look up the record address of a bit-string index");
    resolve_cmd->add_option("mapping", mapping_path, "Mapping document path")->required();
    resolve_cmd->add_option("bitstring", bits, "Index, most significant bit first")->required();

    std::vector<const char *> argv{"unisup"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return EXIT_INVALID;
    }

    try {
        if (synth->parsed()) {
            if (N == 0) {
                err << "error: N must be positive\n";
                return EXIT_INVALID;
            }
            return cmd_synth(N, lower_flag, format, output, out, err);
        }
        if (lower_cmd->parsed()) {
            return cmd_lower(input, format, output, out);
        }
        if (export_cmd->parsed()) {
            return cmd_lower(input, "qasm", output, out);
        }
        if (verify->parsed()) {
            return cmd_verify(N, tolerance, out, err);
        }
        if (count->parsed()) {
            if (N == 0) {
                err << "error: N must be positive\n";
                return EXIT_INVALID;
            }
            return cmd_count(N, out);
        }
        if (scan_cmd->parsed()) {
            if (n_max < 2 || n_max > MAX_SCAN_N) {
                err << "error: --n-max must be in [2, " << MAX_SCAN_N << "]\n";
                return EXIT_INVALID;
            }
            return cmd_scan(n_max, csv_path, summary_path, out);
        }
        if (encode->parsed()) {
            return cmd_encode(dataset_path, seed, mapping_path, circuit_path, format, out);
        }
        if (resolve_cmd->parsed()) {
            return cmd_resolve(mapping_path, bits, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    }
    return EXIT_INVALID;
}

}  // namespace unisup
