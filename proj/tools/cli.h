// Copyright 2026 The QCA Authors
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

#ifndef QCA_TOOLS_CLI_H
#define QCA_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qca/lattice.h"

namespace qca::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitParse = 2,
    kExitSemantic = 3,
    kExitResource = 4,
};

struct RunConfig {
    std::string backend = "factored";  // dense | factored
    Topology topology = Topology::torus;
    uint64_t seed = 0;
    std::optional<uint64_t> steps;  // empty means r
    size_t samples = 0;
    std::string out;         // empty writes to stdout
    std::string dump_state;  // optional amplitude dump path
};

struct VerifyConfig {
    Topology topology = Topology::torus;
    std::string out;
    std::optional<int> inject_fault;  // flips row 0 of this column in the dense run only
};

int cmd_compile(const std::string &circuit_path, const std::string &out_path, std::ostream &out, std::ostream &err);
int cmd_run(const std::string &program_path, const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_verify(const std::string &program_path, const VerifyConfig &config, std::ostream &out, std::ostream &err);
int cmd_tau(bool dump, std::ostream &out);

/// Full command line (without the program name). Never throws; returns an ExitCode.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qca::cli

#endif
