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

#ifndef QCA_FACTORED_H
#define QCA_FACTORED_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qca/dense.h"
#include "qca/gatekit.h"
#include "qca/lattice.h"

namespace qca {

/// Column-product state of a torus QCA: r data registers, the r program columns, and the time.
///
/// At time t data register i sits on column [2i+t]_{2r} and program p_{[i+t+1]_r} on column
/// [2i+t+1]_{2r}, where p_0 denotes p_r. A step costs O(r s 2^(2s)) and never materialises the
/// 2^(4sr) lattice state, so widths far beyond the dense budget are fine.
class FactoredState {
   public:
    /// Throws UnsupportedTopology on a planar spec.
    FactoredState(LatticeSpec spec, ColumnAssignment assign);

    const LatticeSpec &spec() const { return spec_; }
    uint64_t time() const { return t_; }

    /// U(p_{[i+t+1]_r}, t mod 2) on every data register, then t + 1.
    void step();
    void run(uint64_t steps);

    std::span<const Complex> data(int i) const { return data_[static_cast<size_t>(i)]; }
    /// Program p_k for k in 1..r.
    const ProgramColumn &program(int k) const;
    std::span<const ProgramColumn> programs() const { return programs_; }

    int data_column(int i) const;
    /// Index k (1..r) of the program adjacent to data register i at the current time.
    int program_index_next_to(int i) const;
    int program_column_of_slot(int i) const;

   private:
    LatticeSpec spec_;
    std::vector<std::vector<Complex>> data_;
    std::vector<ProgramColumn> programs_;  // programs_[k-1] = p_k
    uint64_t t_ = 0;
};

/// Data register 0. Unless `any_time` is set, requires t = r (when it sits on column r).
std::vector<Complex> output_register(const FactoredState &state, bool any_time = false);

/// Embeds every register and program at its position-law column.
StateVector to_dense(const FactoredState &state);

/// For each register: "register i column c" followed by "index re im" lines above 1e-14.
void write_register_dump(std::ostream &out, const FactoredState &state);

}  // namespace qca

#endif
