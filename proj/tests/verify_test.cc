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

#include "qca/verify.h"

#include <random>

#include "gtest/gtest.h"
#include "qca/errors.h"
#include "qca/factored.h"
#include "test_util.h"

using namespace qca;
using namespace qca::testing;

TEST(verify, fidelity_examples) {
    std::mt19937_64 rng(41);
    auto x = random_state(8, rng);
    auto y = x;
    for (auto &a : y) {
        a *= std::polar(1.0, 1.3);
    }
    ASSERT_NEAR(fidelity_up_to_phase(x, x).fidelity, 1, 1e-15);
    auto rep = fidelity_up_to_phase(x, y);
    ASSERT_NEAR(rep.fidelity, 1, 1e-15);
    ASSERT_NEAR(std::arg(rep.phase), 1.3, 1e-12);
    ASSERT_TRUE(rep.pass);
    ASSERT_EQ(fidelity_up_to_phase(basis_state(4, 0), basis_state(4, 1)).fidelity, 0);
    ASSERT_FALSE(fidelity_up_to_phase(basis_state(4, 0), basis_state(4, 1)).pass);
    ASSERT_THROW(fidelity_up_to_phase(basis_state(4, 0), basis_state(8, 0)), ContractError);
}

TEST(verify, fidelity_symmetric_and_phase_invariant) {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 20; k++) {
        auto a = random_state(16, rng);
        auto b = random_state(16, rng);
        double f = fidelity_up_to_phase(a, b).fidelity;
        ASSERT_NEAR(fidelity_up_to_phase(b, a).fidelity, f, 1e-14);
        auto pa = a, pb = b;
        Complex g = std::polar(1.0, 0.1 * k);
        for (size_t i = 0; i < a.size(); i++) {
            pa[i] *= g;
            pb[i] *= g;
        }
        ASSERT_NEAR(fidelity_up_to_phase(pa, pb).fidelity, f, 1e-14);
    }
}

TEST(verify, canonical_phase) {
    std::vector<Complex> v = {Complex(0, 0.6), Complex(0, -0.8)};
    canonicalize_phase(v);
    ASSERT_NEAR(v[1].real(), 0.8, 1e-15);
    ASSERT_NEAR(v[1].imag(), 0, 1e-15);
    ASSERT_NEAR(v[0].real(), -0.6, 1e-15);
}

TEST(verify, occupancy) {
    std::mt19937_64 rng(43);
    LatticeSpec spec(2, 2);
    auto assign = random_basis_assignment(spec, rng);
    auto st = init_state(assign, spec);
    ASSERT_TRUE(check_occupancy(st, assign.programs).pass);
    st.step();
    ASSERT_TRUE(check_occupancy(st, assign.programs).pass);
    auto m = column_marginal(st, 0);
    auto p1 = assign.programs[0].basis_index();
    ASSERT_NEAR(m(p1, p1).real(), 1, 1e-10);

    auto bad = st;
    bad.flip_site(site_index(0, 1, spec));
    auto rep = check_occupancy(bad, assign.programs);
    ASSERT_FALSE(rep.pass);
    ASSERT_FALSE(rep.failure.empty());
    ASSERT_THROW(check_occupancy(init_state(assign, LatticeSpec(2, 2, Topology::planar)), assign.programs),
                 UnsupportedTopology);
}

TEST(verify, occupancy_holds_over_a_full_cycle) {
    std::mt19937_64 rng(44);
    for (auto [s, r] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
        LatticeSpec spec(s, r);
        auto assign = random_assignment(spec, rng);
        auto st = init_state(assign, spec);
        for (int t = 0; t <= 2 * r; t++) {
            auto rep = check_occupancy(st, assign.programs);
            ASSERT_TRUE(rep.pass) << rep.failure;
            st.step();
        }
    }
}

TEST(verify, program_orthogonality) {
    std::vector<ProgramColumn> a = {ProgramColumn::from_string("01"), ProgramColumn::from_string("11")};
    auto b = a;
    ASSERT_EQ(program_overlap(a, b), 1);
    ASSERT_FALSE(program_orthogonality(a, b));
    b[1].set(0, false);
    ASSERT_EQ(program_overlap(a, b), 0);
    ASSERT_TRUE(program_orthogonality(a, b));

    std::vector<std::vector<ProgramColumn>> all;
    for (const char *bits : {"00", "01", "10", "11"}) {
        all.push_back({ProgramColumn::from_string(bits)});
    }
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = 0; j < all.size(); j++) {
            ASSERT_EQ(program_orthogonality(all[i], all[j]), i != j);
        }
    }
}

TEST(verify, wavefront) {
    std::mt19937_64 rng(45);
    for (auto [s, r] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
        LatticeSpec spec(s, r, Topology::planar);
        auto assign = random_assignment(spec, rng);
        auto st = init_state(assign, spec);
        for (int t = 0; t <= r; t++) {
            auto ranks = wavefront_profile(st);
            ASSERT_EQ(ranks.size(), static_cast<size_t>(spec.columns() - 1));
            int front = spec.columns() - 1 - t;
            for (int c = 0; c < front && c < static_cast<int>(ranks.size()); c++) {
                ASSERT_EQ(ranks[c], 1u) << "s=" << s << " r=" << r << " t=" << t << " c=" << c;
            }
            if (t == 0) {
                for (auto k : ranks) {
                    ASSERT_EQ(k, 1u);
                }
            }
            ASSERT_NEAR(column_marginal(st, t).purity(), 1, 1e-9);
            auto expect = open_boundary_register(assign.data[0], assign.programs, s, t);
            ASSERT_GE(state_fidelity(column_marginal(st, t), expect), 1 - 1e-9);
            st.step();
        }
    }
    ASSERT_THROW(wavefront_profile(init_state(random_assignment(LatticeSpec(1, 2), rng), LatticeSpec(1, 2))),
                 UnsupportedTopology);
}

TEST(verify, open_boundary_register_matches_torus_law_on_even_steps_only) {
    std::mt19937_64 rng(46);
    LatticeSpec spec(2, 3);
    auto assign = random_assignment(spec, rng);
    FactoredState f(spec, assign);
    f.step();
    auto open = open_boundary_register(assign.data[0], assign.programs, 2, 1);
    ASSERT_LE(max_abs_diff(f.data(0), open), 1e-14);
    ASSERT_THROW(open_boundary_register(basis_state(8, 0), assign.programs, 2, 1), ContractError);
}
