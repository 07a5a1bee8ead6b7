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

#include "qca/compiler.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qca/errors.h"

namespace qca {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::T:
            return "T";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::I:
            return "I";
    }
    return "?";
}

SmallUnitary sequence_unitary(std::string_view bits) {
    if (bits.size() != static_cast<size_t>(kSlotsPerWindow)) {
        throw ContractError("an opportunity sequence has exactly 10 bits, got " + std::to_string(bits.size()));
    }
    static const SmallUnitary h = gates::hadamard();
    static const SmallUnitary t = gates::phase_pi8();
    // H^2 = I, so only the parity of a run of Hadamards matters; this keeps I and T exact.
    SmallUnitary u = SmallUnitary::identity(2);
    int pending_h = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ContractError("opportunity bits must be '0' or '1'");
        }
        if (c == '1') {
            if (pending_h % 2) {
                u = h * u;
            }
            pending_h = 0;
            u = t * u;
        }
        pending_h++;
    }
    if (pending_h % 2) {
        u = h * u;
    }
    return u;
}

std::string_view pair_target_name(PairTarget target) {
    switch (target) {
        case PairTarget::cz:
            return "CZ";
        case PairTarget::cnot_down:
            return "CNOT(q->q+1)";
        case PairTarget::cnot_up:
            return "CNOT(q+1->q)";
    }
    return "?";
}

SmallUnitary pair_target_unitary(PairTarget target) {
    // Index = bit(q) | bit(q+1) << 1.
    std::vector<Complex> m(16, 0.0);
    auto set = [&](size_t from, size_t to) { m[to * 4 + from] = 1.0; };
    switch (target) {
        case PairTarget::cz:
            return gates::cz();
        case PairTarget::cnot_down:
            set(0, 0), set(1, 3), set(2, 2), set(3, 1);
            break;
        case PairTarget::cnot_up:
            set(0, 0), set(1, 1), set(2, 3), set(3, 2);
            break;
    }
    return SmallUnitary(4, std::move(m));
}

namespace {

// Gates of one window on a two-row register: local row 0 is q, local row 1 is q+1.
void append_pair_window(const PairWindow &w, int pair_parity, std::vector<ColumnGate> &out) {
    for (int l = 0; l < kWindowSteps; l++) {
        int m = l / 2;
        if (l % 2 == pair_parity) {
            if (w.cz_slot == m) {
                out.push_back({ColumnGate::Kind::cz, 0, 1});
            }
            if (w.upper_bits[static_cast<size_t>(m)] == '1') {
                out.push_back({ColumnGate::Kind::phase, 0});
            }
            out.push_back({ColumnGate::Kind::hadamard, 0});
        } else {
            if (w.lower_bits[static_cast<size_t>(m)] == '1') {
                out.push_back({ColumnGate::Kind::phase, 1});
            }
            out.push_back({ColumnGate::Kind::hadamard, 1});
        }
    }
}

constexpr std::array<std::string_view, 2> kSearchSequences = {sequences::identity, sequences::hadamard};
constexpr std::array<PairTarget, 3> kPairTargets = {PairTarget::cz, PairTarget::cnot_down, PairTarget::cnot_up};
constexpr double kWindowTolerance = 1e-10;
constexpr int kMaxScheduleWindows = 3;

}  // namespace

SmallUnitary pair_schedule_unitary(const PairSchedule &schedule) {
    std::vector<ColumnGate> gates;
    for (const auto &w : schedule.windows) {
        append_pair_window(w, schedule.pair_parity, gates);
    }
    return SmallUnitary(4, column_matrix(gates, 2));
}

WindowLibrary::WindowLibrary(std::vector<PairSchedule> schedules) : schedules_(std::move(schedules)) {
}

const PairSchedule &WindowLibrary::get(int pair_parity, PairTarget target) const {
    for (const auto &s : schedules_) {
        if (s.pair_parity == pair_parity && s.target == target) {
            return s;
        }
    }
    throw std::logic_error("window library has no schedule for " + std::string(pair_target_name(target)));
}

void WindowLibrary::check_closure() const {
    for (const auto &s : schedules_) {
        double d = SmallUnitary::distance_up_to_phase(pair_schedule_unitary(s), pair_target_unitary(s.target));
        if (!(d <= kWindowTolerance)) {
            throw std::logic_error(
                "window schedule for " + std::string(pair_target_name(s.target)) + " misses its target by " +
                std::to_string(d));
        }
    }
}

WindowLibrary derive_two_qubit_windows() {
    std::vector<PairSchedule> found;
    for (int parity : {0, 1}) {
        // Every single-window option and its unitary.
        std::vector<PairWindow> options;
        std::vector<SmallUnitary> option_unitaries;
        for (int cz = -1; cz < kSlotsPerWindow; cz++) {
            for (auto upper : kSearchSequences) {
                for (auto lower : kSearchSequences) {
                    PairWindow w{cz, upper, lower};
                    options.push_back(w);
                    option_unitaries.push_back(pair_schedule_unitary({parity, PairTarget::cz, {w}}));
                }
            }
        }

        for (PairTarget target : kPairTargets) {
            SmallUnitary goal = pair_target_unitary(target);
            bool done = false;
            for (int n = 1; n <= kMaxScheduleWindows && !done; n++) {
                std::vector<size_t> pick(static_cast<size_t>(n), 0);
                while (true) {
                    SmallUnitary u = option_unitaries[pick[0]];
                    for (int k = 1; k < n; k++) {
                        u = option_unitaries[pick[static_cast<size_t>(k)]] * u;
                    }
                    if (SmallUnitary::distance_up_to_phase(u, goal) <= kWindowTolerance) {
                        PairSchedule sched{parity, target, {}};
                        for (size_t p : pick) {
                            sched.windows.push_back(options[p]);
                        }
                        found.push_back(std::move(sched));
                        done = true;
                        break;
                    }
                    // Odometer increment over the n window choices.
                    size_t k = 0;
                    while (k < pick.size() && ++pick[k] == options.size()) {
                        pick[k++] = 0;
                    }
                    if (k == pick.size()) {
                        break;
                    }
                }
            }
            if (!done) {
                throw CompileError(
                    "no schedule of at most " + std::to_string(kMaxScheduleWindows) + " windows realises " +
                    std::string(pair_target_name(target)) + " on a pair of parity " + std::to_string(parity));
            }
        }
    }
    WindowLibrary lib(std::move(found));
    lib.check_closure();
    return lib;
}

const WindowLibrary &window_library() {
    static const WindowLibrary lib = derive_two_qubit_windows();
    return lib;
}

std::vector<ProgramColumn> layers_to_program(const LayerIR &layers) {
    int rows = 2 * layers.s;
    std::vector<ProgramColumn> out;
    out.reserve(layers.steps.size());
    for (size_t k = 0; k < layers.steps.size(); k++) {
        const auto &cells = layers.steps[k];
        if (cells.size() != static_cast<size_t>(layers.s)) {
            throw ContractError("layer step " + std::to_string(k + 1) + " does not have s cells");
        }
        int parity = static_cast<int>(k % 2);
        ProgramColumn col = ProgramColumn::zeros(rows);
        for (int j = 0; j < layers.s; j++) {
            int a = (2 * j + parity) % rows;
            int b = (a + 1) % rows;
            col.set(a, cells[static_cast<size_t>(j)].p3);
            col.set(b, cells[static_cast<size_t>(j)].p4);
        }
        out.push_back(std::move(col));
    }
    return out;
}

LayerIR program_to_layers(std::span<const ProgramColumn> columns, int s) {
    int rows = 2 * s;
    LayerIR out;
    out.s = s;
    for (size_t k = 0; k < columns.size(); k++) {
        if (columns[k].rows() != rows) {
            throw ContractError("program column " + std::to_string(k + 1) + " does not have 2s rows");
        }
        int parity = static_cast<int>(k % 2);
        std::vector<CellProgram> cells(static_cast<size_t>(s));
        for (int j = 0; j < s; j++) {
            int a = (2 * j + parity) % rows;
            int b = (a + 1) % rows;
            cells[static_cast<size_t>(j)] = {columns[k][a], columns[k][b]};
        }
        out.steps.push_back(std::move(cells));
    }
    return out;
}

namespace {

struct Macro {
    bool pair;
    int row;                     // single-qubit row, or upper row q of the pair
    std::string_view bits;       // single-qubit opportunity bits
    PairTarget target{};         // pair target
    const PairSchedule *schedule = nullptr;
    SmallUnitary goal;
    std::string label;

    size_t length() const { return pair ? schedule->windows.size() : 1; }
};

Macro single_macro(int row, std::string_view bits, SmallUnitary goal, std::string label) {
    return Macro{false, row, bits, PairTarget::cz, nullptr, std::move(goal), std::move(label)};
}

Macro pair_macro(int q, PairTarget target, std::string label) {
    const auto &sched = window_library().get(q % 2, target);
    return Macro{true, q, {}, target, &sched, pair_target_unitary(target), std::move(label)};
}

void append_adjacent_cnot(int control, int target, const std::string &label, std::vector<Macro> &out) {
    int q = std::min(control, target);
    out.push_back(pair_macro(q, control < target ? PairTarget::cnot_down : PairTarget::cnot_up, label));
}

void append_swap(int q, const std::string &label, std::vector<Macro> &out) {
    out.push_back(pair_macro(q, PairTarget::cnot_down, label));
    out.push_back(pair_macro(q, PairTarget::cnot_up, label));
    out.push_back(pair_macro(q, PairTarget::cnot_down, label));
}

std::string describe(const Gate &g, size_t index) {
    std::ostringstream out;
    out << "gate #" << index << " " << gate_name(g.kind) << "(" << g.a;
    if (g.kind == GateKind::CZ || g.kind == GateKind::CNOT || g.kind == GateKind::SWAP) {
        out << "," << g.b;
    }
    out << ")";
    return out.str();
}

std::vector<Macro> expand(const Circuit &circuit) {
    std::vector<Macro> out;
    int width = circuit.width;
    auto in_range = [&](int q) { return q >= 0 && q < width; };
    for (size_t n = 0; n < circuit.gates.size(); n++) {
        const Gate &g = circuit.gates[n];
        std::string label = describe(g, n);
        bool two = g.kind == GateKind::CZ || g.kind == GateKind::CNOT || g.kind == GateKind::SWAP;
        if (!in_range(g.a) || (two && !in_range(g.b))) {
            throw CompileError(label + ": qubit index outside 0.." + std::to_string(width - 1));
        }
        if (two && g.a == g.b) {
            throw CompileError(label + ": both operands are the same qubit");
        }
        switch (g.kind) {
            case GateKind::H:
                out.push_back(single_macro(g.a, sequences::hadamard, gates::hadamard(), label));
                break;
            case GateKind::T:
                out.push_back(single_macro(g.a, sequences::phase_pi8, gates::phase_pi8(), label));
                break;
            case GateKind::I:
                out.push_back(single_macro(g.a, sequences::identity, SmallUnitary::identity(2), label));
                break;
            case GateKind::CZ:
                if (std::abs(g.a - g.b) != 1) {
                    throw CompileError(label + ": CZ needs adjacent qubits");
                }
                out.push_back(pair_macro(std::min(g.a, g.b), PairTarget::cz, label));
                break;
            case GateKind::SWAP:
                if (std::abs(g.a - g.b) != 1) {
                    throw CompileError(label + ": SWAP needs adjacent qubits");
                }
                append_swap(std::min(g.a, g.b), label, out);
                break;
            case GateKind::CNOT: {
                int c = g.a;
                int t = g.b;
                if (std::abs(c - t) == 1) {
                    append_adjacent_cnot(c, t, label, out);
                    break;
                }
                // Walk the control next to the target, act, and walk it back.
                if (c < t) {
                    for (int k = c; k <= t - 2; k++) {
                        append_swap(k, label, out);
                    }
                    append_adjacent_cnot(t - 1, t, label, out);
                    for (int k = t - 2; k >= c; k--) {
                        append_swap(k, label, out);
                    }
                } else {
                    for (int k = c - 1; k >= t + 1; k--) {
                        append_swap(k, label, out);
                    }
                    append_adjacent_cnot(t + 1, t, label, out);
                    for (int k = t + 1; k <= c - 1; k++) {
                        append_swap(k, label, out);
                    }
                }
                break;
            }
        }
    }
    return out;
}

void set_p3(LayerIR &layers, size_t window, int row, int slot, bool value) {
    int l = slot_step(row, slot);
    int parity = l % 2;
    auto j = static_cast<size_t>((row - parity) / 2);
    layers.steps[window * kWindowSteps + static_cast<size_t>(l)][j].p3 = value;
}

void set_cz(LayerIR &layers, size_t window, int upper_row, int slot) {
    int l = slot_step(upper_row, slot);
    int parity = l % 2;
    auto j = static_cast<size_t>((upper_row - parity) / 2);
    layers.steps[window * kWindowSteps + static_cast<size_t>(l)][j].p4 = true;
}

// Recomputes the action of the emitted program on the macro's rows from the program columns alone
// and compares it with the macro's logical target.
void verify_macro(const std::vector<ProgramColumn> &program, int s, size_t first_window, const Macro &m) {
    std::vector<int> rows{m.row};
    if (m.pair) {
        rows.push_back(m.row + 1);
    }
    auto local = [&](int row) -> int {
        auto it = std::find(rows.begin(), rows.end(), row);
        return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
    };
    std::vector<ColumnGate> gates;
    size_t begin = first_window * kWindowSteps;
    size_t end = begin + m.length() * kWindowSteps;
    for (size_t k = begin; k < end; k++) {
        for (const auto &g : u_of_p(program[k], static_cast<int>(k % 2), s)) {
            int la = local(g.row);
            int lb = g.kind == ColumnGate::Kind::cz ? local(g.other_row) : -1;
            if (g.kind == ColumnGate::Kind::cz && ((la < 0) != (lb < 0))) {
                throw std::logic_error(m.label + ": emitted CZ couples the macro to an outside row");
            }
            if (la < 0) {
                continue;
            }
            gates.push_back({g.kind, la, lb});
        }
    }
    SmallUnitary got(m.pair ? 4 : 2, column_matrix(gates, static_cast<int>(rows.size())));
    double d = SmallUnitary::distance_up_to_phase(got, m.goal);
    if (!(d <= kWindowTolerance)) {
        throw std::logic_error(m.label + ": emitted window misses its target by " + std::to_string(d));
    }
}

}  // namespace

CompiledProgram compile(const Circuit &circuit, int s) {
    if (s < 1 || circuit.width != 2 * s) {
        throw CompileError(
            "circuit width " + std::to_string(circuit.width) + " does not match 2s = " + std::to_string(2 * s));
    }
    auto macros = expand(circuit);

    // As-soon-as-possible placement on whole windows; rows stay in program order.
    std::vector<size_t> next_free(static_cast<size_t>(circuit.width), 0);
    std::vector<size_t> start(macros.size());
    size_t windows = 1;
    for (size_t n = 0; n < macros.size(); n++) {
        const auto &m = macros[n];
        auto row = static_cast<size_t>(m.row);
        size_t w = next_free[row];
        if (m.pair) {
            w = std::max(w, next_free[row + 1]);
        }
        start[n] = w;
        next_free[row] = w + m.length();
        if (m.pair) {
            next_free[row + 1] = w + m.length();
        }
        windows = std::max(windows, w + m.length());
    }

    CompiledProgram out;
    out.windows = windows;
    out.r = static_cast<int>(windows) * kWindowSteps;
    out.layers.s = s;
    out.layers.steps.assign(static_cast<size_t>(out.r), std::vector<CellProgram>(static_cast<size_t>(s)));

    for (size_t n = 0; n < macros.size(); n++) {
        const auto &m = macros[n];
        if (!m.pair) {
            for (int slot = 0; slot < kSlotsPerWindow; slot++) {
                set_p3(out.layers, start[n], m.row, slot, m.bits[static_cast<size_t>(slot)] == '1');
            }
            continue;
        }
        for (size_t w = 0; w < m.schedule->windows.size(); w++) {
            const auto &pw = m.schedule->windows[w];
            for (int slot = 0; slot < kSlotsPerWindow; slot++) {
                set_p3(out.layers, start[n] + w, m.row, slot, pw.upper_bits[static_cast<size_t>(slot)] == '1');
                set_p3(out.layers, start[n] + w, m.row + 1, slot, pw.lower_bits[static_cast<size_t>(slot)] == '1');
            }
            if (pw.cz_slot >= 0) {
                set_cz(out.layers, start[n] + w, m.row, pw.cz_slot);
            }
        }
    }

    auto program = layers_to_program(out.layers);
    for (size_t n = 0; n < macros.size(); n++) {
        verify_macro(program, s, start[n], macros[n]);
    }
    return out;
}

std::vector<Complex> reference_simulate(const Circuit &circuit, std::span<const Complex> input) {
    size_t dim = size_t{1} << circuit.width;
    if (input.size() != dim) {
        throw ContractError("reference_simulate input has the wrong dimension");
    }
    std::vector<Complex> psi(input.begin(), input.end());
    const double h = 1.0 / std::sqrt(2.0);
    const Complex lo = std::polar(1.0, -std::numbers::pi / 8);
    for (const auto &g : circuit.gates) {
        size_t ma = size_t{1} << g.a;
        size_t mb = g.b >= 0 ? size_t{1} << g.b : 0;
        switch (g.kind) {
            case GateKind::I:
                break;
            case GateKind::H:
                for (size_t k = 0; k < dim; k++) {
                    if (!(k & ma)) {
                        Complex x = psi[k];
                        Complex y = psi[k | ma];
                        psi[k] = h * (x + y);
                        psi[k | ma] = h * (x - y);
                    }
                }
                break;
            case GateKind::T:
                for (size_t k = 0; k < dim; k++) {
                    psi[k] *= (k & ma) ? std::conj(lo) : lo;
                }
                break;
            case GateKind::CZ:
                for (size_t k = 0; k < dim; k++) {
                    if ((k & ma) && (k & mb)) {
                        psi[k] = -psi[k];
                    }
                }
                break;
            case GateKind::CNOT:
                for (size_t k = 0; k < dim; k++) {
                    if ((k & ma) && !(k & mb)) {
                        std::swap(psi[k], psi[k | mb]);
                    }
                }
                break;
            case GateKind::SWAP:
                for (size_t k = 0; k < dim; k++) {
                    if ((k & ma) && !(k & mb)) {
                        std::swap(psi[k], psi[(k ^ ma) | mb]);
                    }
                }
                break;
        }
    }
    return psi;
}

}  // namespace qca
