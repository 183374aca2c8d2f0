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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "unisup/circuit_document.h"
#include "unisup/encoding.h"
#include "unisup/qasm.h"

using namespace unisup;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines_starting_with(const std::string &text, const std::vector<std::string> &prefixes) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        for (const auto &p : prefixes) {
            if (line.rfind(p, 0) == 0) {
                n++;
                break;
            }
        }
    }
    return n;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliFiles : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("unisup_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    fs::path write(const std::string &name, const std::string &content) {
        fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }

    fs::path dir_;
};

}  // namespace

TEST(cli, synth_n7_qasm) {
    auto r = cli({"synth", "7", "--lower", "--format", "qasm"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_EQ(count_lines_starting_with(r.out, {"cx ", "cz "}), 3u);
    EXPECT_NO_THROW(parse_qasm(r.out));
}

TEST(cli, synth_n16_document) {
    auto r = cli({"synth", "16", "--format", "doc"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    Circuit c = parse_document(r.out);
    EXPECT_EQ(c.size(), 4u);
    for (const auto &g : c) {
        EXPECT_EQ(g.kind, GateKind::H);
    }
}

TEST(cli, synth_rejects_zero) {
    EXPECT_EQ(cli({"synth", "0"}).code, EXIT_INVALID);
}

TEST(cli, synth_qasm_needs_lower) {
    auto r = cli({"synth", "7", "--format", "qasm"});
    EXPECT_EQ(r.code, EXIT_INVALID);
    EXPECT_NE(r.err.find("--lower"), std::string::npos);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(cli({}).code, EXIT_INVALID);
    EXPECT_EQ(cli({"frobnicate"}).code, EXIT_INVALID);
    EXPECT_EQ(cli({"synth", "seven"}).code, EXIT_INVALID);
    EXPECT_EQ(cli({"synth", "7", "--format", "svg"}).code, EXIT_INVALID);
    EXPECT_EQ(cli({"--help"}).code, EXIT_OK);
}

TEST(cli, verify_n7) {
    auto r = cli({"verify", "7"});
    EXPECT_EQ(r.code, EXIT_OK);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_NE(r.out.find("entanglers=3"), std::string::npos);
}

TEST(cli, verify_twenty_qubit_power_of_two) {
    auto r = cli({"verify", "1048576"});
    EXPECT_EQ(r.code, EXIT_OK);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_NE(r.out.find("entanglers=0"), std::string::npos);
}

TEST(cli, verify_tolerance_below_noise_fails) {
    auto r = cli({"verify", "29", "--tolerance", "1e-30"});
    EXPECT_EQ(r.code, EXIT_VERIFY_FAILED);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, verify_cap) {
    EXPECT_EQ(cli({"verify", "16777217"}).code, EXIT_INVALID);
    EXPECT_EQ(cli({"verify", "0"}).code, EXIT_INVALID);
}

TEST(cli, count) {
    auto r = cli({"count", "29"});
    ASSERT_EQ(r.code, EXIT_OK);
    EXPECT_NE(r.out.find("cnot=6"), std::string::npos);
    EXPECT_NE(r.out.find("case=IV"), std::string::npos);
    EXPECT_NE(r.out.find("bound=<=2n-4"), std::string::npos);
    EXPECT_EQ(cli({"count", "1"}).code, EXIT_OK);
    EXPECT_EQ(cli({"count", "0"}).code, EXIT_INVALID);
}

TEST(cli, scan_summary_to_stdout) {
    auto r = cli({"scan", "--n-max", "5"});
    ASSERT_EQ(r.code, EXIT_OK);
    EXPECT_NE(r.out.find("\n5,7,"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.rfind("n,max,mean\n", 0), 0u);
}

TEST(cli, scan_range_error) {
    EXPECT_EQ(cli({"scan", "--n-max", "1"}).code, EXIT_INVALID);
    EXPECT_EQ(cli({"scan", "--n-max", "21"}).code, EXIT_INVALID);
}

TEST_F(CliFiles, scan_writes_csv) {
    auto r = cli({"scan", "--n-max", "3", "--csv", path("rows.csv"), "--summary", path("summary.csv")});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    std::string rows = slurp(path("rows.csv"));
    EXPECT_NE(rows.find("5,3,0,5,2,3,2,II\n6,3,1,3,2,2,1,V\n7,3,0,7,3,3,3,III\n8,3,3,1,1,0,0,I\n"),
              std::string::npos)
        << rows;
    EXPECT_EQ(slurp(path("summary.csv")), "n,max,mean\n2,1,0.5\n3,3,1.5\n");
}

TEST_F(CliFiles, encode_quantum) {
    auto dataset = write("letters.txt", "Q\nU\nA\nN\nT\nU\nM\n");
    auto r = cli({"encode", dataset.string(), "--seed", "17", "--mapping-out", path("map.json"), "--circuit-out",
                  path("circuit.qasm"), "--format", "qasm"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_NE(r.out.find("N=7 n=3 cnot=3"), std::string::npos) << r.out;
    auto map = deserialize(slurp(path("map.json")));
    EXPECT_EQ(map.size(), 7u);
    EXPECT_EQ(map.seed(), 17u);
    Circuit c = parse_qasm(slurp(path("circuit.qasm")));
    EXPECT_EQ(c.num_qubits(), 3u);

    auto resolved = cli({"resolve", path("map.json"), "010"});
    ASSERT_EQ(resolved.code, EXIT_OK);
    EXPECT_EQ(resolved.out, std::to_string(map.resolve("010")) + "\n");
    EXPECT_EQ(cli({"resolve", path("map.json"), "111"}).code, EXIT_INVALID);
}

TEST_F(CliFiles, encode_single_record) {
    auto dataset = write("one.txt", "only\n");
    auto r = cli({"encode", dataset.string(), "--mapping-out", path("map.json"), "--circuit-out", path("c.json")});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_NE(r.out.find("N=1 n=1 cnot=0"), std::string::npos);
    Circuit c = parse_document(slurp(path("c.json")));
    EXPECT_EQ(c.num_qubits(), 1u);
    EXPECT_TRUE(c.empty());
    EXPECT_EQ(deserialize(slurp(path("map.json"))).pairs(),
              (std::vector<std::pair<std::string, std::uint64_t>>{{"0", 0}}));
}

TEST_F(CliFiles, encode_deterministic) {
    auto dataset = write("letters.txt", "Q\nU\nA\nN\nT\nU\nM\n");
    for (const char *name : {"a.json", "b.json"}) {
        ASSERT_EQ(cli({"encode", dataset.string(), "--seed", "5", "--mapping-out", path(name), "--circuit-out",
                       path("c.json")})
                      .code,
                  EXIT_OK);
    }
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(CliFiles, encode_errors) {
    auto empty = write("empty.txt", "");
    EXPECT_EQ(cli({"encode", empty.string(), "--mapping-out", path("m"), "--circuit-out", path("c")}).code,
              EXIT_INVALID);
    auto dataset = write("d.txt", "a\nb\n");
    auto r = cli({"encode", dataset.string(), "--mapping-out", path("missing/dir/m.json"), "--circuit-out",
                  path("c")});
    EXPECT_EQ(r.code, EXIT_INVALID);
    EXPECT_NE(r.err.find("cannot write"), std::string::npos);
    EXPECT_EQ(cli({"encode", path("nope.txt"), "--mapping-out", path("m"), "--circuit-out", path("c")}).code,
              EXIT_INVALID);
}

TEST_F(CliFiles, lower_and_export) {
    ASSERT_EQ(cli({"synth", "29", "-o", path("abstract.json")}).code, EXIT_OK);
    auto lowered = cli({"lower", path("abstract.json")});
    ASSERT_EQ(lowered.code, EXIT_OK) << lowered.err;
    Circuit c = parse_document(lowered.out);
    EXPECT_EQ(c.level(), Level::Lowered);
    EXPECT_EQ(entangler_count(c), 6u);

    auto exported = cli({"export", path("abstract.json")});
    ASSERT_EQ(exported.code, EXIT_OK);
    EXPECT_EQ(parse_qasm(exported.out), c);

    write("bad.json", "{");
    EXPECT_EQ(cli({"lower", path("bad.json")}).code, EXIT_INVALID);
}
