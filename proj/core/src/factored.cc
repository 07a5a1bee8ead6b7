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

#include <cmath>
#include <cstdio>
#include <ostream>

#include "qca/errors.h"

namespace qca {

FactoredState::FactoredState(LatticeSpec spec, ColumnAssignment assign) : spec_(spec) {
    if (spec_.topology() != Topology::torus) {
        throw UnsupportedTopology("the factored backend only models the torus");
    }
    assign.validate(spec_);
    data_ = std::move(assign.data);
    programs_ = std::move(assign.programs);
}

const ProgramColumn &FactoredState::program(int k) const {
    if (k < 1 || k > spec_.r()) {
        throw std::out_of_range("program index " + std::to_string(k) + " outside 1..r");
    }
    return programs_[static_cast<size_t>(k - 1)];
}

int FactoredState::data_column(int i) const {
    auto cols = static_cast<uint64_t>(spec_.columns());
    return static_cast<int>((2 * static_cast<uint64_t>(i) + t_) % cols);
}

int FactoredState::program_index_next_to(int i) const {
    auto r = static_cast<uint64_t>(spec_.r());
    auto k = static_cast<int>((static_cast<uint64_t>(i) + t_ + 1) % r);
    return k == 0 ? spec_.r() : k;
}

int FactoredState::program_column_of_slot(int i) const {
    auto cols = static_cast<uint64_t>(spec_.columns());
    return static_cast<int>((2 * static_cast<uint64_t>(i) + t_ + 1) % cols);
}

void FactoredState::step() {
    // Register i sits on a column of parity t, so its cells pair rows with offset t mod 2.
    int parity = static_cast<int>(t_ % 2);
    for (int i = 0; i < spec_.r(); i++) {
        auto gates = u_of_p(program(program_index_next_to(i)), parity, spec_.s());
        apply_column_gates(gates, data_[static_cast<size_t>(i)]);
    }
    t_++;
}

void FactoredState::run(uint64_t steps) {
    for (uint64_t k = 0; k < steps; k++) {
        step();
    }
}

std::vector<Complex> output_register(const FactoredState &state, bool any_time) {
    const auto &spec = state.spec();
    if (!any_time && state.time() != static_cast<uint64_t>(spec.r())) {
        throw ContractError(
            "output register is read at t = r = " + std::to_string(spec.r()) + ", state is at t = " +
            std::to_string(state.time()));
    }
    if (!any_time && state.data_column(0) != spec.r()) {
        throw ContractError("register 0 is not on column r");
    }
    auto d = state.data(0);
    return {d.begin(), d.end()};
}

StateVector to_dense(const FactoredState &state) {
    const auto &spec = state.spec();
    check_dense_budget(spec);
    size_t dim = size_t{1} << spec.rows();
    std::vector<std::vector<Complex>> columns(static_cast<size_t>(spec.columns()));
    for (int i = 0; i < spec.r(); i++) {
        auto d = state.data(i);
        columns[static_cast<size_t>(state.data_column(i))].assign(d.begin(), d.end());
        std::vector<Complex> p(dim, 0.0);
        p[state.program(state.program_index_next_to(i)).basis_index()] = 1.0;
        columns[static_cast<size_t>(state.program_column_of_slot(i))] = std::move(p);
    }
    return product_state(spec, columns, state.time());
}

void write_register_dump(std::ostream &out, const FactoredState &state) {
    char buf[128];
    for (int i = 0; i < state.spec().r(); i++) {
        out << "register " << i << " column " << state.data_column(i) << '\n';
        auto d = state.data(i);
        for (size_t k = 0; k < d.size(); k++) {
            if (std::abs(d[k]) > 1e-14) {
                std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g\n", k, d[k].real() + 0.0, d[k].imag() + 0.0);
                out << buf;
            }
        }
    }
}

}  // namespace qca
