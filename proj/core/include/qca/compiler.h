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

#ifndef QCA_COMPILER_H
#define QCA_COMPILER_H

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qca/gatekit.h"

namespace qca {

// Register convention used throughout this header: logical qubit q is lattice row q, and row q is
// bit q of an amplitude index. Two-qubit matrices on rows (q, q+1) therefore use
// index = bit(q) | bit(q+1) << 1.

enum class GateKind : uint8_t { H, T, CZ, CNOT, SWAP, I };

std::string_view gate_name(GateKind kind);

/// H, T, I act on `a`. CZ and SWAP act on (a, b). CNOT has control `a` and target `b`.
struct Gate {
    GateKind kind;
    int a;
    int b = -1;

    bool operator==(const Gate &) const = default;
};

struct Circuit {
    int width = 0;  // 2s logical qubits
    std::vector<Gate> gates;
};

/// QCA steps per macro window; every logical qubit gets one opportunity every other step.
inline constexpr int kWindowSteps = 20;
inline constexpr int kSlotsPerWindow = kWindowSteps / 2;

/// Opportunity bit strings, leftmost bit applied first.
namespace sequences {
inline constexpr std::string_view identity = "0000000000";
inline constexpr std::string_view hadamard = "0101101101";
inline constexpr std::string_view phase_pi8 = "1000000000";
}  // namespace sequences

/// Local step (0..19) inside a window at which row `row` gets opportunity `slot` (0..9).
constexpr int slot_step(int row, int slot) {
    return 2 * slot + (row % 2);
}

/// Per-step, per-cell-row program bits. Step k (1-based) has parity (k - 1) mod 2.
struct LayerIR {
    int s = 0;
    std::vector<std::vector<CellProgram>> steps;  // steps[k - 1][j]

    size_t size() const { return steps.size(); }
    bool operator==(const LayerIR &) const = default;
};

/// Unitary of ten opportunities: for each bit, exp(-i pi/8 Z) if set, then H.
/// Throws ContractError unless exactly 10 bits are given.
SmallUnitary sequence_unitary(std::string_view bits);

enum class PairTarget : uint8_t {
    cz,
    cnot_down,  // control row q, target row q+1
    cnot_up,    // control row q+1, target row q
};

std::string_view pair_target_name(PairTarget target);
SmallUnitary pair_target_unitary(PairTarget target);

/// One window of a two-qubit macro on rows (q, q+1).
struct PairWindow {
    int cz_slot = -1;             // slot of row q whose cell fires CZ(q, q+1); -1 for none
    std::string_view upper_bits;  // opportunity bits of row q
    std::string_view lower_bits;  // opportunity bits of row q+1
};

struct PairSchedule {
    int pair_parity;  // q mod 2
    PairTarget target;
    std::vector<PairWindow> windows;
};

/// Composed unitary of a schedule on rows (q, q+1) for a pair of the given parity.
SmallUnitary pair_schedule_unitary(const PairSchedule &schedule);

/// Two-qubit schedules for each (pair parity, target), found by bounded search.
class WindowLibrary {
   public:
    explicit WindowLibrary(std::vector<PairSchedule> schedules);
    const PairSchedule &get(int pair_parity, PairTarget target) const;
    std::span<const PairSchedule> schedules() const { return schedules_; }

    /// Throws std::logic_error if any schedule misses its target by more than 1e-10 up to phase.
    void check_closure() const;

   private:
    std::vector<PairSchedule> schedules_;
};

/// Searches schedules of 1, 2, then 3 windows. Each window may fire CZ at one slot of the
/// upper row and runs the identity or Hadamard bit string on each row. Throws CompileError if
/// a target has no schedule within three windows.
WindowLibrary derive_two_qubit_windows();
/// Process-wide library, derived once and closure-checked.
const WindowLibrary &window_library();

struct CompiledProgram {
    LayerIR layers;
    int r = 0;
    size_t windows = 0;
};

/// Throws CompileError for gates that cannot be scheduled (out-of-range qubits, non-adjacent
/// CZ or SWAP, CNOT with control == target) or a width other than 2s.
CompiledProgram compile(const Circuit &circuit, int s);

std::vector<ProgramColumn> layers_to_program(const LayerIR &layers);
LayerIR program_to_layers(std::span<const ProgramColumn> columns, int s);

/// Applies the gates directly with T = exp(-i pi/8 Z). `input` has 2^width amplitudes.
std::vector<Complex> reference_simulate(const Circuit &circuit, std::span<const Complex> input);

}  // namespace qca

#endif
