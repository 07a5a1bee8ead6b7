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

#include "formats.h"

namespace qca::cli {

using nlohmann::json;

namespace {

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

int get_int(const json &obj, const char *key) {
    if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
        throw ParseError(std::string("expected integer field '") + key + "'");
    }
    return obj.at(key).get<int>();
}

GateKind gate_kind(const std::string &name) {
    static const std::pair<const char *, GateKind> table[] = {
        {"H", GateKind::H},       {"T", GateKind::T},       {"I", GateKind::I},
        {"CZ", GateKind::CZ},     {"CNOT", GateKind::CNOT}, {"SWAP", GateKind::SWAP},
    };
    for (const auto &[n, k] : table) {
        if (name == n) {
            return k;
        }
    }
    throw ParseError("unknown gate '" + name + "'");
}

}  // namespace

Circuit parse_circuit(const std::string &text) {
    json doc = parse_json(text);
    if (!doc.is_object()) {
        throw ParseError("circuit file must hold a JSON object");
    }
    Circuit c;
    c.width = get_int(doc, "rows");
    if (!doc.contains("gates") || !doc.at("gates").is_array()) {
        throw ParseError("expected array field 'gates'");
    }
    for (const auto &g : doc.at("gates")) {
        if (!g.is_object() || !g.contains("g") || !g.at("g").is_string()) {
            throw ParseError("every gate needs a string field 'g'");
        }
        GateKind kind = gate_kind(g.at("g").get<std::string>());
        switch (kind) {
            case GateKind::H:
            case GateKind::T:
            case GateKind::I:
                c.gates.push_back({kind, get_int(g, "q")});
                break;
            case GateKind::CNOT:
                c.gates.push_back({kind, get_int(g, "c"), get_int(g, "t")});
                break;
            case GateKind::CZ:
            case GateKind::SWAP: {
                const auto &q = g.contains("q") ? g.at("q") : json();
                if (!q.is_array() || q.size() != 2 || !q[0].is_number_integer() || !q[1].is_number_integer()) {
                    throw ParseError(std::string(gate_name(kind)) + " needs \"q\": [a, b]");
                }
                c.gates.push_back({kind, q[0].get<int>(), q[1].get<int>()});
                break;
            }
        }
    }
    return c;
}

json circuit_to_json(const Circuit &circuit) {
    json gates = json::array();
    for (const auto &g : circuit.gates) {
        std::string name(gate_name(g.kind));
        switch (g.kind) {
            case GateKind::CNOT:
                gates.push_back({{"g", name}, {"c", g.a}, {"t", g.b}});
                break;
            case GateKind::CZ:
            case GateKind::SWAP:
                gates.push_back({{"g", name}, {"q", {g.a, g.b}}});
                break;
            default:
                gates.push_back({{"g", name}, {"q", g.a}});
                break;
        }
    }
    return {{"rows", circuit.width}, {"gates", gates}};
}

json amplitudes_to_json(std::span<const Complex> amplitudes) {
    json out = json::array();
    for (auto a : amplitudes) {
        out.push_back({a.real() + 0.0, a.imag() + 0.0});
    }
    return out;
}

std::vector<Complex> amplitudes_from_json(const json &j) {
    if (!j.is_array()) {
        throw ParseError("amplitudes must be an array of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto &pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw ParseError("amplitudes must be an array of [re, im] pairs");
        }
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

ProgramFile parse_program(const std::string &text) {
    json doc = parse_json(text);
    if (!doc.is_object()) {
        throw ParseError("program file must hold a JSON object");
    }
    ProgramFile p;
    p.s = get_int(doc, "s");
    p.r = get_int(doc, "r");
    if (!doc.contains("columns") || !doc.at("columns").is_array()) {
        throw ParseError("expected array field 'columns'");
    }
    for (const auto &c : doc.at("columns")) {
        if (!c.is_string()) {
            throw ParseError("program columns are bit strings");
        }
        try {
            p.columns.push_back(ProgramColumn::from_string(c.get<std::string>()));
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
    }
    if (doc.contains("data") && !doc.at("data").is_null()) {
        if (!doc.at("data").is_array()) {
            throw ParseError("'data' must be an array of registers");
        }
        for (const auto &reg : doc.at("data")) {
            p.data.push_back(amplitudes_from_json(reg));
        }
    }
    return p;
}

json program_to_json(const ProgramFile &program) {
    json cols = json::array();
    for (const auto &c : program.columns) {
        cols.push_back(c.to_string());
    }
    json out = {{"s", program.s}, {"r", program.r}, {"columns", cols}};
    if (!program.data.empty()) {
        json data = json::array();
        for (const auto &reg : program.data) {
            data.push_back(amplitudes_to_json(reg));
        }
        out["data"] = data;
    }
    return out;
}

}  // namespace qca::cli
