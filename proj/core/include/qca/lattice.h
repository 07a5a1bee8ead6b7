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

#ifndef QCA_LATTICE_H
#define QCA_LATTICE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qca {

enum class Topology : uint8_t { torus, planar };

std::string_view topology_name(Topology topology);
/// Throws ContractError for anything other than "torus" or "planar".
Topology parse_topology(std::string_view name);

/// Which planar remainder cells exchange their sites at odd steps. The default swaps the 1x2
/// cells on the top and bottom rows and leaves the 2x1 cells on the edge columns alone; the dual
/// swaps the edge-column cells instead. Ignored on the torus.
enum class RemainderRule : uint8_t { horizontal_swap, vertical_swap };

/// A 2s x 2r qubit lattice. Columns are indexed by x in [0, 2r), rows by y in [0, 2s).
class LatticeSpec {
   public:
    LatticeSpec(int s, int r, Topology topology = Topology::torus,
                RemainderRule remainders = RemainderRule::horizontal_swap);

    int s() const { return s_; }
    int r() const { return r_; }
    Topology topology() const { return topology_; }
    RemainderRule remainders() const { return remainders_; }
    int rows() const { return 2 * s_; }
    int columns() const { return 2 * r_; }
    size_t num_qubits() const { return 4 * static_cast<size_t>(s_) * static_cast<size_t>(r_); }

    bool operator==(const LatticeSpec &) const = default;

   private:
    int s_;
    int r_;
    Topology topology_;
    RemainderRule remainders_;
};

/// Column-major site numbering: the qubit at (x, y) is bit x*2s + y of an amplitude index.
/// Throws std::out_of_range for coordinates outside the lattice.
size_t site_index(int x, int y, const LatticeSpec &spec);

/// A Margolus cell: left column `column`, cell-row `cell_row` and the step parity it belongs to.
struct CellAddress {
    int column;
    int cell_row;
    int parity;
};

/// Sites of a full 2x2 cell in cell-local order q1 (top-left), q2 (bottom-left),
/// q3 (top-right), q4 (bottom-right). The left column carries data, the right column program.
struct CellSites {
    size_t q1, q2, q3, q4;
    std::array<size_t, 4> as_array() const { return {q1, q2, q3, q4}; }
};

/// Rows a = [2j + parity]_{2s}, b = [a + 1]_{2s}; columns i and [i + 1]_{2r}.
/// On the torus the column parity must match the step parity. On the planar sheet the cell
/// must lie inside the sheet without wrapping.
CellSites cell_sites(const CellAddress &addr, const LatticeSpec &spec);

enum class CellKind : uint8_t {
    tau,       // full 2x2 cell, transition unitary applied
    swap,      // 1x2 boundary cell, the two sites are exchanged
    identity,  // boundary cell left untouched
};

struct Cell {
    CellKind kind;
    uint8_t size;                // number of valid entries in `sites`
    std::array<size_t, 4> sites; // full cells use q1..q4 order
};

/// The cells acting at one time step.
struct Partition {
    int parity;
    std::vector<Cell> cells;

    size_t count(CellKind kind) const;
};

/// Full cells of parity t mod 2 (torus), or the planar tiling including boundary remainders.
Partition cells_of_step(uint64_t t, const LatticeSpec &spec);

}  // namespace qca

#endif
