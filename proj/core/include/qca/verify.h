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

#ifndef QCA_VERIFY_H
#define QCA_VERIFY_H

#include <span>
#include <string>
#include <vector>

#include "qca/dense.h"
#include "qca/gatekit.h"

namespace qca {

struct EquivalenceReport {
    double fidelity;  // |<a|b>|
    Complex phase;    // arg of <a|b> as a unit complex number
    double tolerance;
    bool pass;        // fidelity >= 1 - tolerance
};

/// Throws ContractError on a dimension mismatch.
EquivalenceReport fidelity_up_to_phase(std::span<const Complex> a, std::span<const Complex> b,
                                       double tolerance = kEvolutionTolerance);

/// Multiplies by a unit phase so the largest-magnitude amplitude (lowest index on ties) is real
/// and positive.
void canonicalize_phase(std::span<Complex> amplitudes);

struct OccupancyReport {
    bool pass = true;
    std::string failure;  // first failing column, empty on success
};

/// Predicted program columns carry exactly |p>, data columns are pure, at the state's time.
/// `programs` holds p_1..p_r. Torus only.
OccupancyReport check_occupancy(const StateVector &state, std::span<const ProgramColumn> programs);

/// <A|B> of the two full program basis states (1 or 0).
int program_overlap(std::span<const ProgramColumn> a, std::span<const ProgramColumn> b);
/// True iff the full program states are orthogonal.
bool program_orthogonality(std::span<const ProgramColumn> a, std::span<const ProgramColumn> b);

/// Schmidt rank at every vertical cut, left to right (cut c separates columns 0..c). Planar only.
std::vector<size_t> wavefront_profile(const StateVector &state);

/// Register 0 after `steps` steps of the open-boundary network: the torus register law without
/// the cell that wraps from row 2s-1 to row 0 at odd steps, which a planar sheet does not have.
std::vector<Complex> open_boundary_register(std::span<const Complex> data0, std::span<const ProgramColumn> programs,
                                            int s, uint64_t steps);

/// <psi| rho |psi> for a normalized register.
double state_fidelity(const DensityMatrix &rho, std::span<const Complex> psi);

}  // namespace qca

#endif
