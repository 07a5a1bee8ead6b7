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

#include "qca/lattice.h"

#include <stdexcept>

#include "qca/errors.h"

namespace qca {

std::string_view topology_name(Topology topology) {
    return topology == Topology::torus ? "torus" : "planar";
}

Topology parse_topology(std::string_view name) {
    if (name == "torus") {
        return Topology::torus;
    }
    if (name == "planar") {
        return Topology::planar;
    }
    throw ContractError("unknown topology '" + std::string(name) + "' (expected torus or planar)");
}

LatticeSpec::LatticeSpec(int s, int r, Topology topology, RemainderRule remainders)
    : s_(s), r_(r), topology_(topology), remainders_(remainders) {
    if (s < 1) {
        throw ContractError("lattice needs s >= 1, got s=" + std::to_string(s));
    }
    // r == 1 makes the data and program columns neighbours on both sides.
    if (r < 2) {
        throw ContractError("lattice needs r >= 2, got r=" + std::to_string(r));
    }
}

size_t site_index(int x, int y, const LatticeSpec &spec) {
    if (x < 0 || x >= spec.columns() || y < 0 || y >= spec.rows()) {
        throw std::out_of_range(
            "site (" + std::to_string(x) + ", " + std::to_string(y) + ") outside a " + std::to_string(spec.rows()) +
            "x" + std::to_string(spec.columns()) + " lattice");
    }
    return static_cast<size_t>(x) * static_cast<size_t>(spec.rows()) + static_cast<size_t>(y);
}

CellSites cell_sites(const CellAddress &addr, const LatticeSpec &spec) {
    int rows = spec.rows();
    int cols = spec.columns();
    if (addr.parity != 0 && addr.parity != 1) {
        throw ContractError("cell parity must be 0 or 1");
    }
    if (addr.column < 0 || addr.column >= cols || addr.cell_row < 0 || addr.cell_row >= spec.s()) {
        throw std::out_of_range("cell address outside the lattice");
    }
    int a = (2 * addr.cell_row + addr.parity) % rows;
    int b = (a + 1) % rows;
    int left = addr.column;
    int right = (left + 1) % cols;
    if (spec.topology() == Topology::torus) {
        if (left % 2 != addr.parity) {
            throw ContractError(
                "cell column " + std::to_string(left) + " does not match step parity " + std::to_string(addr.parity));
        }
    } else if (right == 0 || b == 0) {
        throw ContractError("cell wraps around the edge of a planar sheet");
    }
    return CellSites{
        site_index(left, a, spec),
        site_index(left, b, spec),
        site_index(right, a, spec),
        site_index(right, b, spec),
    };
}

size_t Partition::count(CellKind kind) const {
    size_t n = 0;
    for (const auto &c : cells) {
        n += c.kind == kind;
    }
    return n;
}

namespace {

Cell full_cell(const CellSites &q) {
    return Cell{CellKind::tau, 4, q.as_array()};
}

Cell pair_cell(CellKind kind, size_t u, size_t v) {
    return Cell{kind, 2, {u, v, 0, 0}};
}

Cell single_cell(size_t u) {
    return Cell{CellKind::identity, 1, {u, 0, 0, 0}};
}

}  // namespace

Partition cells_of_step(uint64_t t, const LatticeSpec &spec) {
    Partition out;
    out.parity = static_cast<int>(t % 2);
    int phi = out.parity;
    int rows = spec.rows();
    int cols = spec.columns();

    if (spec.topology() == Topology::torus || phi == 0) {
        out.cells.reserve(static_cast<size_t>(spec.s()) * spec.r());
        for (int k = 0; k < spec.r(); k++) {
            for (int j = 0; j < spec.s(); j++) {
                out.cells.push_back(full_cell(cell_sites({2 * k + phi, j, phi}, spec)));
            }
        }
        return out;
    }

    // Planar sheet, odd step: interior cells have their upper-left corner at odd (column, row).
    bool dual = spec.remainders() == RemainderRule::vertical_swap;
    CellKind horizontal = dual ? CellKind::identity : CellKind::swap;
    CellKind vertical = dual ? CellKind::swap : CellKind::identity;
    for (int i = 1; i <= cols - 3; i += 2) {
        for (int j = 0; 2 * j + 2 <= rows - 2; j++) {
            out.cells.push_back(full_cell(cell_sites({i, j, 1}, spec)));
        }
        out.cells.push_back(pair_cell(horizontal, site_index(i, 0, spec), site_index(i + 1, 0, spec)));
        out.cells.push_back(
            pair_cell(horizontal, site_index(i, rows - 1, spec), site_index(i + 1, rows - 1, spec)));
    }
    for (int x : {0, cols - 1}) {
        for (int a = 1; a + 1 <= rows - 2; a += 2) {
            out.cells.push_back(pair_cell(vertical, site_index(x, a, spec), site_index(x, a + 1, spec)));
        }
        out.cells.push_back(single_cell(site_index(x, 0, spec)));
        out.cells.push_back(single_cell(site_index(x, rows - 1, spec)));
    }
    return out;
}

}  // namespace qca
