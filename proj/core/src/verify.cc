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

#include <algorithm>
#include <cmath>

#include "qca/errors.h"

namespace qca {

EquivalenceReport fidelity_up_to_phase(std::span<const Complex> a, std::span<const Complex> b, double tolerance) {
    if (a.size() != b.size()) {
        throw ContractError(
            "cannot compare states of dimension " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    Complex overlap = 0;
    for (size_t k = 0; k < a.size(); k++) {
        overlap += std::conj(a[k]) * b[k];
    }
    double f = std::abs(overlap);
    Complex phase = f > 0 ? overlap / f : Complex(1);
    return {f, phase, tolerance, f >= 1 - tolerance};
}

void canonicalize_phase(std::span<Complex> amplitudes) {
    if (amplitudes.empty()) {
        return;
    }
    double peak = 0;
    for (auto a : amplitudes) {
        peak = std::max(peak, std::abs(a));
    }
    if (peak == 0) {
        return;
    }
    // Ties within round-off resolve to the lowest index so both backends agree.
    size_t pick = 0;
    while (std::abs(amplitudes[pick]) < peak * (1 - 1e-9)) {
        pick++;
    }
    Complex rot = std::conj(amplitudes[pick]) / std::abs(amplitudes[pick]);
    for (auto &a : amplitudes) {
        a *= rot;
    }
    amplitudes[pick] = std::abs(amplitudes[pick]);
}

OccupancyReport check_occupancy(const StateVector &state, std::span<const ProgramColumn> programs) {
    const auto &spec = state.spec();
    if (spec.topology() != Topology::torus) {
        throw UnsupportedTopology("occupancy is defined by the torus position law");
    }
    if (programs.size() != static_cast<size_t>(spec.r())) {
        throw ContractError("check_occupancy needs r programs");
    }
    uint64_t t = state.time();
    auto r = static_cast<uint64_t>(spec.r());
    auto cols = static_cast<uint64_t>(spec.columns());
    OccupancyReport report;
    for (uint64_t i = 0; i < r; i++) {
        auto data_col = static_cast<int>((2 * i + t) % cols);
        auto prog_col = static_cast<int>((2 * i + t + 1) % cols);
        uint64_t k = (i + t + 1) % r;
        const ProgramColumn &p = programs[k == 0 ? r - 1 : k - 1];

        auto rho = column_marginal(state, prog_col);
        uint64_t idx = p.basis_index();
        double worst = 0;
        for (size_t a = 0; a < rho.dim; a++) {
            for (size_t b = 0; b < rho.dim; b++) {
                Complex want = (a == idx && b == idx) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(rho(a, b) - want));
            }
        }
        if (worst > kEvolutionTolerance) {
            report.pass = false;
            report.failure = "column " + std::to_string(prog_col) + " should hold program p_" +
                             std::to_string(k == 0 ? r : k) + " = " + p.to_string() + " (deviation " +
                             std::to_string(worst) + ")";
            return report;
        }
        auto data_rho = column_marginal(state, data_col);
        if (std::abs(data_rho.purity() - 1) > kEvolutionTolerance) {
            report.pass = false;
            report.failure = "data column " + std::to_string(data_col) + " is not pure";
            return report;
        }
    }
    return report;
}

int program_overlap(std::span<const ProgramColumn> a, std::span<const ProgramColumn> b) {
    if (a.size() != b.size()) {
        throw ContractError("program sets have different sizes");
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].rows() != b[i].rows()) {
            throw ContractError("program columns have different heights");
        }
        if (a[i].basis_index() != b[i].basis_index()) {
            return 0;
        }
    }
    return 1;
}

bool program_orthogonality(std::span<const ProgramColumn> a, std::span<const ProgramColumn> b) {
    return program_overlap(a, b) == 0;
}

std::vector<size_t> wavefront_profile(const StateVector &state) {
    if (state.spec().topology() != Topology::planar) {
        throw UnsupportedTopology("the wavefront profile is a planar-sheet probe");
    }
    std::vector<size_t> ranks;
    for (int c = 0; c + 1 < state.spec().columns(); c++) {
        ranks.push_back(schmidt_rank_at_cut(state, c).rank);
    }
    return ranks;
}

std::vector<Complex> open_boundary_register(std::span<const Complex> data0, std::span<const ProgramColumn> programs,
                                            int s, uint64_t steps) {
    int rows = 2 * s;
    if (data0.size() != (size_t{1} << rows)) {
        throw ContractError("register has the wrong dimension");
    }
    if (programs.empty()) {
        throw ContractError("no programs");
    }
    std::vector<Complex> reg(data0.begin(), data0.end());
    auto r = programs.size();
    for (uint64_t t = 0; t < steps; t++) {
        int parity = static_cast<int>(t % 2);
        auto gates = u_of_p(programs[t % r], parity, s);
        // At odd steps the cell on rows (2s-1, 0) does not exist on an open sheet.
        std::erase_if(gates, [&](const ColumnGate &g) { return parity == 1 && g.row == rows - 1; });
        apply_column_gates(gates, reg);
    }
    return reg;
}

double state_fidelity(const DensityMatrix &rho, std::span<const Complex> psi) {
    if (psi.size() != rho.dim) {
        throw ContractError("register and density matrix dimensions differ");
    }
    Complex acc = 0;
    for (size_t a = 0; a < rho.dim; a++) {
        for (size_t b = 0; b < rho.dim; b++) {
            acc += std::conj(psi[a]) * rho(a, b) * psi[b];
        }
    }
    return acc.real();
}

}  // namespace qca
