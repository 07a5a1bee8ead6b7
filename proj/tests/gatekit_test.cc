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

#include "qca/gatekit.h"

#include <cmath>
#include <algorithm>
#include <numbers>

#include "gtest/gtest.h"
#include "qca/errors.h"

using namespace qca;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Transition unitary rebuilt from bit operations on the cell basis, one column per input.
std::vector<Complex> tau_oracle_column(int input) {
    int q1 = (input >> 3) & 1, q2 = (input >> 2) & 1, q3 = (input >> 1) & 1, q4 = input & 1;
    Complex amp = 1;
    if (q1 && q2 && q4) {
        amp = -amp;
    }
    if (q3) {
        amp *= std::polar(1.0, q1 ? std::numbers::pi / 8 : -std::numbers::pi / 8);
    }
    std::vector<Complex> out(16, 0.0);
    for (int n1 = 0; n1 < 2; n1++) {
        Complex a = amp * kInvSqrt2 * ((q1 && n1) ? -1.0 : 1.0);
        // After H on q1 the swaps exchange (q1,q3) and (q2,q4).
        int idx = (q3 << 3) | (q4 << 2) | (n1 << 1) | q2;
        out[idx] += a;
    }
    return out;
}

}  // namespace

TEST(gatekit, tau_matches_bit_oracle) {
    const auto &t = tau();
    for (int c = 0; c < 16; c++) {
        auto col = tau_oracle_column(c);
        for (int r = 0; r < 16; r++) {
            ASSERT_NEAR(std::abs(t(r, c) - col[r]), 0.0, 1e-15) << r << "," << c;
        }
    }
}

TEST(gatekit, tau_examples) {
    const auto &t = tau();
    ASSERT_NEAR(std::abs(t(0b0000, 0) - kInvSqrt2), 0, 1e-15);
    ASSERT_NEAR(std::abs(t(0b0010, 0) - kInvSqrt2), 0, 1e-15);
    Complex w = -std::polar(1.0, std::numbers::pi / 8) * kInvSqrt2;
    ASSERT_NEAR(std::abs(t(0b1101, 15) - w), 0, 1e-15);
    ASSERT_NEAR(std::abs(t(0b1111, 15) + w), 0, 1e-15);
    double rest = 0;
    for (int r = 0; r < 16; r++) {
        if (r != 0b1101 && r != 0b1111) {
            rest += std::abs(t(r, 15));
        }
    }
    ASSERT_EQ(rest, 0);
}

TEST(gatekit, tau_unitary) {
    auto prod = tau().adjoint() * tau();
    ASSERT_LE(SmallUnitary::distance(prod, SmallUnitary::identity(16)), kUnitaryTolerance);
}

TEST(gatekit, small_unitary_rejects_non_unitary) {
    ASSERT_THROW(SmallUnitary(2, {1, 1, 0, 1}), ContractError);
    ASSERT_THROW(SmallUnitary(3, std::vector<Complex>(9, 0.0)), ContractError);
    ASSERT_THROW(SmallUnitary(2, {1, 0, 0}), ContractError);
}

TEST(gatekit, distance_up_to_phase) {
    auto h = gates::hadamard();
    std::vector<Complex> e(h.entries().begin(), h.entries().end());
    for (auto &z : e) {
        z *= std::polar(1.0, 0.7);
    }
    SmallUnitary hp(2, e);
    Complex phase;
    ASSERT_LE(SmallUnitary::distance_up_to_phase(hp, h, &phase), 1e-15);
    ASSERT_NEAR(std::arg(phase), -0.7, 1e-12);
    ASSERT_GT(SmallUnitary::distance_up_to_phase(gates::phase_pi8(), h), 0.1);
}

TEST(gatekit, u_of_p_examples) {
    std::vector<Complex> v = {0, 0, 0, 0};
    v[0] = 1;
    auto g = u_of_p(ProgramColumn::from_string("00"), 0, 1);
    ASSERT_EQ(g.size(), 1u);
    apply_column_gates(g, v);
    ASSERT_NEAR(v[0].real(), kInvSqrt2, 1e-15);
    ASSERT_NEAR(v[1].real(), kInvSqrt2, 1e-15);
    ASSERT_EQ(v[2], Complex(0));
    ASSERT_EQ(v[3], Complex(0));

    v = {0, 0, 0, 1};
    g = u_of_p(ProgramColumn::from_string("01"), 0, 1);
    ASSERT_EQ(g.size(), 2u);
    ASSERT_EQ(g[0].kind, ColumnGate::Kind::cz);
    apply_column_gates(g, v);
    ASSERT_NEAR(v[2].real(), -kInvSqrt2, 1e-15);
    ASSERT_NEAR(v[3].real(), kInvSqrt2, 1e-15);
    ASSERT_EQ(v[0], Complex(0));
    ASSERT_EQ(v[1], Complex(0));

    g = u_of_p(ProgramColumn::from_string("1111"), 1, 2);
    ASSERT_EQ(g.size(), 6u);
    ASSERT_EQ(g[0], (ColumnGate{ColumnGate::Kind::cz, 1, 2}));
    ASSERT_EQ(g[1], (ColumnGate{ColumnGate::Kind::phase, 1}));
    ASSERT_EQ(g[2], (ColumnGate{ColumnGate::Kind::hadamard, 1}));
    ASSERT_EQ(g[3], (ColumnGate{ColumnGate::Kind::cz, 3, 0}));
    ASSERT_EQ(g[5], (ColumnGate{ColumnGate::Kind::hadamard, 3}));

    ASSERT_THROW(u_of_p(ProgramColumn::from_string("000"), 0, 1), ContractError);
}

TEST(gatekit, u_of_p_unitary) {
    for (int s = 1; s <= 2; s++) {
        int rows = 2 * s;
        for (uint64_t bits = 0; bits < (1u << rows); bits++) {
            std::vector<uint8_t> b(rows);
            for (int y = 0; y < rows; y++) {
                b[y] = (bits >> y) & 1;
            }
            for (int parity = 0; parity < 2; parity++) {
                auto m = column_matrix(u_of_p(ProgramColumn(b), parity, s), rows);
                ASSERT_NO_THROW(SmallUnitary(size_t{1} << rows, m));
            }
        }
    }
}

TEST(gatekit, all_zero_program_twenty_steps_is_identity) {
    for (int s = 1; s <= 2; s++) {
        int rows = 2 * s;
        size_t dim = size_t{1} << rows;
        std::vector<ColumnGate> all;
        for (int k = 0; k < 20; k++) {
            auto g = u_of_p(ProgramColumn::zeros(rows), k % 2, s);
            all.insert(all.end(), g.begin(), g.end());
        }
        auto m = column_matrix(all, rows);
        ASSERT_LE(SmallUnitary::distance(SmallUnitary(dim, m), SmallUnitary::identity(dim)), 1e-12);

        std::vector<int> hits(rows, 0);
        for (int k = 0; k < 2; k++) {
            for (const auto &g : u_of_p(ProgramColumn::zeros(rows), k, s)) {
                hits[g.row]++;
            }
        }
        for (int h : hits) {
            ASSERT_EQ(h, 1);
        }
    }
}

TEST(gatekit, consistency_check) {
    auto report = tau_consistency_check();
    ASSERT_TRUE(report.ok) << report.detail;

    // Program slots always come out unchanged.
    const auto &t = tau();
    for (int c = 0; c < 16; c++) {
        int program = c & 3;
        for (int r = 0; r < 16; r++) {
            if (std::abs(t(r, c)) > 1e-12) {
                ASSERT_EQ(r >> 2, program);
            }
        }
    }
}

TEST(gatekit, consistency_check_negative_control) {
    auto bad = gates::cell_swap(1, 3) * gates::cell_swap(2, 4) * gates::cell_hadamard(1) *
               gates::cell_controlled_phase(3, 1) * gates::cell_ccz(1, 2, 3);
    auto report = tau_consistency_check(bad);
    ASSERT_FALSE(report.ok);
    ASSERT_GE(report.failing_input, 0);
    ASSERT_FALSE(report.detail.empty());
}

TEST(gatekit, program_column) {
    auto p = ProgramColumn::from_string("0110");
    ASSERT_EQ(p.rows(), 4);
    ASSERT_TRUE(p[1]);
    ASSERT_FALSE(p[3]);
    ASSERT_EQ(p.basis_index(), 6u);
    ASSERT_EQ(p.to_string(), "0110");
    ASSERT_THROW(ProgramColumn::from_string("01x"), ContractError);
}

TEST(gatekit, format_is_stable) {
    ASSERT_EQ(format_complex(Complex(-0.0, 0.0)), "0+0i");
    ASSERT_EQ(format_complex(Complex(1, -2)), "1-2i");
    auto text = format_matrix(tau());
    ASSERT_EQ(std::count(text.begin(), text.end(), '\n'), 16);
}
