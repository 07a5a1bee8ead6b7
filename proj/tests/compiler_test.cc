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

#include <random>

#include "gtest/gtest.h"
#include "qca/errors.h"
#include "qca/factored.h"
#include "qca/verify.h"
#include "test_util.h"

using namespace qca;
using namespace qca::testing;

namespace {

std::vector<Complex> run_compiled(const Circuit &c, int s, std::span<const Complex> input) {
    auto prog = compile(c, s);
    LatticeSpec spec(s, prog.r);
    auto assign = ColumnAssignment::zeros(spec, layers_to_program(prog.layers));
    assign.data[0].assign(input.begin(), input.end());
    FactoredState st(spec, assign);
    st.run(static_cast<uint64_t>(prog.r));
    return output_register(st);
}

Circuit random_circuit(int width, int length, std::mt19937_64 &rng) {
    Circuit c{width, {}};
    for (int k = 0; k < length; k++) {
        int q = static_cast<int>(rng() % width);
        int nb = q + 1 < width ? q + 1 : q - 1;
        switch (rng() % 6) {
            case 0: c.gates.push_back({GateKind::H, q}); break;
            case 1: c.gates.push_back({GateKind::T, q}); break;
            case 2: c.gates.push_back({GateKind::CZ, q, nb}); break;
            case 3: c.gates.push_back({GateKind::CNOT, q, static_cast<int>((q + 1 + rng() % (width - 1)) % width)}); break;
            case 4: c.gates.push_back({GateKind::SWAP, q, nb}); break;
            default: c.gates.push_back({GateKind::I, q}); break;
        }
    }
    return c;
}

}  // namespace

TEST(compiler, sequence_examples) {
    ASSERT_EQ(SmallUnitary::distance(sequence_unitary(sequences::identity), SmallUnitary::identity(2)), 0);
    ASSERT_EQ(SmallUnitary::distance(sequence_unitary(sequences::phase_pi8), gates::phase_pi8()), 0);
    auto h = sequence_unitary(sequences::hadamard);
    const auto ref = gates::hadamard();
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            ASSERT_NEAR(std::abs(h(i, j) - Complex(0, -1) * ref(i, j)), 0, 1e-12);
        }
    }
    // Reading the bits right to left would give H T H instead of T.
    ASSERT_GT(SmallUnitary::distance_up_to_phase(sequence_unitary("0000000001"), gates::phase_pi8()), 0.1);
    ASSERT_THROW(sequence_unitary("000"), ContractError);
}

TEST(compiler, window_library_closure) {
    const auto &lib = window_library();
    ASSERT_NO_THROW(lib.check_closure());
    for (int parity = 0; parity < 2; parity++) {
        for (auto target : {PairTarget::cz, PairTarget::cnot_down, PairTarget::cnot_up}) {
            const auto &sch = lib.get(parity, target);
            ASSERT_GE(sch.windows.size(), 1u);
            ASSERT_LE(sch.windows.size(), 3u);
            ASSERT_LE(SmallUnitary::distance_up_to_phase(pair_schedule_unitary(sch), pair_target_unitary(target)), 1e-10)
                << parity << " " << pair_target_name(target);
        }
    }
}

TEST(compiler, reference_simulate_examples) {
    auto h = reference_simulate({2, {{GateKind::H, 0}}}, basis_state(4, 0));
    ASSERT_NEAR(h[0].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(h[1].real(), 1 / std::sqrt(2.0), 1e-15);
    // |10> with row 0 leftmost is index 1.
    auto cx = reference_simulate({2, {{GateKind::CNOT, 0, 1}}}, basis_state(4, 1));
    ASSERT_EQ(cx[3], Complex(1));
    auto cz = reference_simulate({2, {{GateKind::CZ, 0, 1}}}, basis_state(4, 3));
    ASSERT_EQ(cz[3], Complex(-1));
    auto sw = reference_simulate({2, {{GateKind::SWAP, 0, 1}}}, basis_state(4, 2));
    ASSERT_EQ(sw[1], Complex(1));
}

TEST(compiler, empty_circuit) {
    auto prog = compile({2, {}}, 1);
    ASSERT_EQ(prog.r, 20);
    ASSERT_EQ(prog.windows, 1u);
    for (const auto &p : layers_to_program(prog.layers)) {
        ASSERT_EQ(p.to_string(), "00");
    }
    std::mt19937_64 rng(31);
    for (int k = 0; k < 4; k++) {
        auto x = random_state(4, rng);
        ASSERT_LE(max_abs_diff(run_compiled({2, {}}, 1, x), x), 1e-12);
    }
}

TEST(compiler, phase_gate_placement) {
    auto prog = compile({2, {{GateKind::T, 0}}}, 1);
    std::string upper, lower;
    for (int slot = 0; slot < kSlotsPerWindow; slot++) {
        upper += prog.layers.steps[slot_step(0, slot)][0].p3 ? '1' : '0';
        lower += prog.layers.steps[slot_step(1, slot)][0].p3 ? '1' : '0';
    }
    ASSERT_EQ(upper, "1000000000");
    ASSERT_EQ(lower, "0000000000");
    auto cols = layers_to_program(prog.layers);
    ASSERT_EQ(cols[0].to_string(), "10");
    for (size_t k = 1; k < cols.size(); k++) {
        ASSERT_EQ(cols[k].to_string(), "00");
    }
}

TEST(compiler, double_hadamard) {
    Circuit c{2, {{GateKind::H, 0}, {GateKind::H, 0}}};
    auto prog = compile(c, 1);
    ASSERT_EQ(prog.windows, 2u);
    ASSERT_EQ(prog.r, 40);
    std::mt19937_64 rng(32);
    for (int k = 0; k < 4; k++) {
        auto x = random_state(4, rng);
        ASSERT_GE(fidelity_up_to_phase(run_compiled(c, 1, x), x).fidelity, 1 - 1e-10);
    }
}

TEST(compiler, swap_pipeline) {
    auto out = run_compiled({2, {{GateKind::SWAP, 0, 1}}}, 1, basis_state(4, 2));
    ASSERT_NEAR(std::abs(out[1]), 1, 1e-10);
}

TEST(compiler, rejects_unschedulable) {
    ASSERT_THROW(compile({4, {{GateKind::CZ, 0, 2}}}, 2), CompileError);
    ASSERT_THROW(compile({4, {{GateKind::H, 4}}}, 2), CompileError);
    ASSERT_THROW(compile({4, {{GateKind::CNOT, 1, 1}}}, 2), CompileError);
    ASSERT_THROW(compile({2, {}}, 2), CompileError);
}

TEST(compiler, layer_round_trip) {
    std::mt19937_64 rng(33);
    for (int s = 1; s <= 3; s++) {
        LayerIR layers{s, {}};
        for (int k = 0; k < 40; k++) {
            std::vector<CellProgram> row;
            for (int j = 0; j < s; j++) {
                row.push_back({static_cast<bool>(rng() & 1), static_cast<bool>(rng() & 1)});
            }
            layers.steps.push_back(row);
        }
        auto cols = layers_to_program(layers);
        ASSERT_EQ(cols.size(), 40u);
        ASSERT_EQ(program_to_layers(cols, s), layers);
    }
    LayerIR zero{1, std::vector<std::vector<CellProgram>>(20, std::vector<CellProgram>(1))};
    for (const auto &p : layers_to_program(zero)) {
        ASSERT_EQ(p.basis_index(), 0u);
    }
}

TEST(compiler, ten_opportunities_per_window) {
    for (int s = 1; s <= 3; s++) {
        std::vector<int> count(2 * s, 0);
        for (int k = 1; k <= kWindowSteps; k++) {
            int parity = (k - 1) % 2;
            for (int j = 0; j < s; j++) {
                count[(2 * j + parity) % (2 * s)]++;
            }
        }
        for (int c : count) {
            ASSERT_EQ(c, kSlotsPerWindow);
        }
    }
    for (int row = 0; row < 4; row++) {
        for (int slot = 0; slot < kSlotsPerWindow; slot++) {
            ASSERT_EQ(slot_step(row, slot) % 2, row % 2);
        }
    }
}

TEST(compiler, end_to_end_soundness) {
    std::mt19937_64 rng(34);
    for (int s = 1; s <= 2; s++) {
        int width = 2 * s;
        for (int trial = 0; trial < 12; trial++) {
            auto c = random_circuit(width, 1 + static_cast<int>(rng() % 5), rng);
            for (int k = 0; k < 3; k++) {
                auto x = random_state(size_t{1} << width, rng);
                auto got = run_compiled(c, s, x);
                auto want = reference_simulate(c, x);
                ASSERT_GE(fidelity_up_to_phase(got, want).fidelity, 1 - 1e-9) << "s=" << s << " trial=" << trial;
            }
        }
    }
}

TEST(compiler, every_two_qubit_target_through_pipeline) {
    std::mt19937_64 rng(35);
    for (int q = 0; q < 3; q++) {
        for (auto g : {Gate{GateKind::CZ, q, q + 1}, Gate{GateKind::CNOT, q, q + 1}, Gate{GateKind::CNOT, q + 1, q},
                       Gate{GateKind::SWAP, q, q + 1}}) {
            Circuit c{4, {g}};
            auto x = random_state(16, rng);
            ASSERT_GE(fidelity_up_to_phase(run_compiled(c, 2, x), reference_simulate(c, x)).fidelity, 1 - 1e-9)
                << gate_name(g.kind) << " " << g.a << " " << g.b;
        }
    }
    Circuit far{4, {{GateKind::CNOT, 0, 3}, {GateKind::CNOT, 3, 0}}};
    auto x = random_state(16, rng);
    ASSERT_GE(fidelity_up_to_phase(run_compiled(far, 2, x), reference_simulate(far, x)).fidelity, 1 - 1e-9);
}
