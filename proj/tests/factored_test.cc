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

#include "qca/factored.h"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "qca/errors.h"
#include "qca/verify.h"
#include "test_util.h"

using namespace qca;
using namespace qca::testing;

namespace {

std::vector<Complex> apply_program(std::vector<Complex> v, const ProgramColumn &p, int parity, int s) {
    apply_column_gates(u_of_p(p, parity, s), v);
    return v;
}

}  // namespace

TEST(factored, two_steps_of_zero_program) {
    LatticeSpec spec(1, 2);
    FactoredState st(spec, ColumnAssignment::zeros(spec, {ProgramColumn::zeros(2), ProgramColumn::zeros(2)}));
    st.run(2);
    for (auto a : st.data(0)) {
        ASSERT_NEAR(a.real(), 0.5, 1e-15);
        ASSERT_NEAR(a.imag(), 0, 1e-15);
    }
}

TEST(factored, register_zero_sees_programs_in_order) {
    std::mt19937_64 rng(21);
    for (int s = 1; s <= 2; s++) {
        LatticeSpec spec(s, 4);
        auto assign = random_assignment(spec, rng);
        FactoredState st(spec, assign);
        st.run(spec.r());
        auto expect = assign.data[0];
        for (int k = 1; k <= spec.r(); k++) {
            expect = apply_program(expect, assign.programs[k - 1], (k - 1) % 2, s);
        }
        ASSERT_LE(max_abs_diff(output_register(st), expect), 1e-13);
        ASSERT_EQ(st.data_column(0), spec.r());
    }
}

TEST(factored, auxiliary_register_scrambled_order) {
    std::mt19937_64 rng(22);
    LatticeSpec spec(1, 2);
    auto assign = random_assignment(spec, rng);
    FactoredState st(spec, assign);
    st.run(2);
    auto expect = apply_program(apply_program(assign.data[1], assign.programs[1], 0, 1), assign.programs[0], 1, 1);
    ASSERT_LE(max_abs_diff(st.data(1), expect), 1e-13);
}

TEST(factored, positions) {
    LatticeSpec spec(2, 3);
    std::mt19937_64 rng(23);
    FactoredState st(spec, random_assignment(spec, rng));
    for (int t = 0; t < 8; t++) {
        for (int i = 0; i < spec.r(); i++) {
            ASSERT_EQ(st.data_column(i), (2 * i + t) % 6);
            ASSERT_EQ(st.program_column_of_slot(i), (2 * i + t + 1) % 6);
            int k = (i + t + 1) % 3;
            ASSERT_EQ(st.program_index_next_to(i), k == 0 ? 3 : k);
        }
        st.step();
    }
}

TEST(factored, output_register_contract) {
    LatticeSpec spec(1, 2);
    FactoredState st(spec, ColumnAssignment::zeros(spec, {ProgramColumn::zeros(2), ProgramColumn::zeros(2)}));
    ASSERT_THROW(output_register(st), ContractError);
    ASSERT_NO_THROW(output_register(st, true));
    st.run(2);
    ASSERT_NO_THROW(output_register(st));
    st.step();
    ASSERT_THROW(output_register(st), ContractError);
}

TEST(factored, identity_program) {
    std::mt19937_64 rng(24);
    LatticeSpec spec(2, 20);
    auto assign = random_assignment(spec, rng);
    for (auto &p : assign.programs) {
        p = ProgramColumn::zeros(4);
    }
    FactoredState st(spec, assign);
    st.run(20);
    ASSERT_LE(max_abs_diff(output_register(st), assign.data[0]), 1e-12);
}

TEST(factored, rejects_planar) {
    LatticeSpec spec(1, 2, Topology::planar);
    ASSERT_THROW(FactoredState(spec, ColumnAssignment::zeros(spec, {ProgramColumn::zeros(2), ProgramColumn::zeros(2)})),
                 UnsupportedTopology);
}

TEST(factored, to_dense_matches_init) {
    std::mt19937_64 rng(25);
    LatticeSpec spec(2, 2);
    auto assign = random_assignment(spec, rng);
    auto a = to_dense(FactoredState(spec, assign));
    auto b = init_state(assign, spec);
    ASSERT_LE(max_abs_diff(a.amplitudes(), b.amplitudes()), 1e-15);
    ASSERT_NEAR(a.norm(), 1, 1e-12);
}

TEST(factored, commuting_diagram) {
    std::mt19937_64 rng(26);
    for (auto [s, r] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
        LatticeSpec spec(s, r);
        for (int trial = 0; trial < 3; trial++) {
            auto assign = random_assignment(spec, rng);
            FactoredState f(spec, assign);
            auto d = init_state(assign, spec);
            for (int t = 0; t < 2 * r + 1; t++) {
                auto before = to_dense(f);
                before.step();
                f.step();
                d.step();
                auto after = to_dense(f);
                ASSERT_EQ(after.time(), d.time());
                ASSERT_GE(fidelity_up_to_phase(after.amplitudes(), before.amplitudes()).fidelity, 1 - 1e-10);
                ASSERT_GE(fidelity_up_to_phase(after.amplitudes(), d.amplitudes()).fidelity, 1 - 1e-10);
            }
            for (int k = 1; k <= r; k++) {
                ASSERT_EQ(f.program(k), assign.programs[k - 1]);
            }
        }
    }
}

TEST(factored, register_dump) {
    LatticeSpec spec(1, 2);
    FactoredState st(spec, ColumnAssignment::zeros(spec, {ProgramColumn::zeros(2), ProgramColumn::zeros(2)}));
    std::ostringstream out;
    write_register_dump(out, st);
    ASSERT_EQ(out.str(), "register 0 column 0\n0 1 0\nregister 1 column 2\n0 1 0\n");
}
