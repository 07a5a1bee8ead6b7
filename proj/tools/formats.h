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

#ifndef QCA_TOOLS_FORMATS_H
#define QCA_TOOLS_FORMATS_H

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qca/compiler.h"
#include "qca/gatekit.h"

namespace qca::cli {

/// Malformed input text: bad JSON, missing keys, wrong value types.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {"rows": 2s, "gates": [{"g": "H", "q": 0}, {"g": "CZ", "q": [0, 1]}, {"g": "CNOT", "c": 1, "t": 0}]}
Circuit parse_circuit(const std::string &text);
nlohmann::json circuit_to_json(const Circuit &circuit);

struct ProgramFile {
    int s = 0;
    int r = 0;
    std::vector<ProgramColumn> columns;       // p_1..p_r
    std::vector<std::vector<Complex>> data;   // optional initial registers, possibly fewer than r
};

/// {"s": s, "r": r, "columns": ["<2s bits, row 0 first>", ...], "data": [[[re, im], ...], ...]}
ProgramFile parse_program(const std::string &text);
nlohmann::json program_to_json(const ProgramFile &program);

nlohmann::json amplitudes_to_json(std::span<const Complex> amplitudes);
std::vector<Complex> amplitudes_from_json(const nlohmann::json &j);

}  // namespace qca::cli

#endif
