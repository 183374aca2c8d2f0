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

#ifndef UNISUP_CLI_H
#define UNISUP_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace unisup {

constexpr int EXIT_OK = 0;
constexpr int EXIT_INVALID = 1;       // bad arguments, unreadable/unwritable files, malformed input
constexpr int EXIT_VERIFY_FAILED = 2;

/// Entry point shared by the `unisup` binary and the tests. `args` excludes
/// the program name. Output and diagnostics go to the given streams; files
/// named by -o/--csv/--summary/--*-out flags are written directly.
///
///   synth N [--lower] [--format doc|qasm] [-o PATH]
///   lower DOC [--format doc|qasm] [-o PATH]
///   export DOC [-o PATH]
///   verify N [--tolerance T]
///   count N
///   scan --n-max K [--csv PATH] [--summary PATH]
///   encode DATASET --mapping-out PATH --circuit-out PATH [--seed S] [--format doc|qasm]
///   resolve MAPPING BITSTRING
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace unisup

#endif
