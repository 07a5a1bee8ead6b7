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

#include "qca/dense.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "linalg.h"
#include "qca/errors.h"

namespace qca {

namespace {

struct SparseEntry {
    uint8_t row;
    uint8_t col;
    Complex value;
};

std::vector<SparseEntry> sparse_entries(const SmallUnitary &u) {
    std::vector<SparseEntry> out;
    for (size_t i = 0; i < u.dim(); i++) {
        for (size_t j = 0; j < u.dim(); j++) {
            if (std::abs(u(i, j)) > 0) {
                out.push_back({static_cast<uint8_t>(i), static_cast<uint8_t>(j), u(i, j)});
            }
        }
    }
    return out;
}

// Spreads the bits of `compact` over the positions not listed in `zero_bits` (ascending).
inline size_t insert_zero_bits(size_t compact, std::span<const size_t> zero_bits) {
    for (size_t b : zero_bits) {
        size_t low = compact & ((size_t{1} << b) - 1);
        compact = ((compact >> b) << (b + 1)) | low;
    }
    return compact;
}

size_t column_bits(const LatticeSpec &spec) {
    return static_cast<size_t>(spec.rows());
}

}  // namespace

void check_dense_budget(const LatticeSpec &spec) {
    if (spec.num_qubits() > kMaxDenseQubits) {
        throw ResourceError(
            "dense state of " + std::to_string(spec.num_qubits()) + " qubits exceeds the " +
            std::to_string(kMaxDenseQubits) + "-qubit budget");
    }
}

ColumnAssignment ColumnAssignment::zeros(const LatticeSpec &spec, std::vector<ProgramColumn> programs) {
    ColumnAssignment out;
    size_t dim = size_t{1} << spec.rows();
    out.data.assign(static_cast<size_t>(spec.r()), std::vector<Complex>(dim, 0.0));
    for (auto &d : out.data) {
        d[0] = 1.0;
    }
    out.programs = std::move(programs);
    return out;
}

void ColumnAssignment::validate(const LatticeSpec &spec) const {
    auto r = static_cast<size_t>(spec.r());
    if (data.size() != r || programs.size() != r) {
        throw ContractError(
            "column assignment needs " + std::to_string(r) + " data registers and programs, got " +
            std::to_string(data.size()) + " and " + std::to_string(programs.size()));
    }
    size_t dim = size_t{1} << spec.rows();
    for (size_t i = 0; i < r; i++) {
        if (data[i].size() != dim) {
            throw ContractError("data register " + std::to_string(i) + " has the wrong dimension");
        }
        double n2 = 0;
        for (auto a : data[i]) {
            n2 += std::norm(a);
        }
        if (std::abs(std::sqrt(n2) - 1.0) > kEvolutionTolerance) {
            throw ContractError("data register " + std::to_string(i) + " is not normalized");
        }
        if (programs[i].rows() != spec.rows()) {
            throw ContractError("program " + std::to_string(i + 1) + " has the wrong number of rows");
        }
    }
}

StateVector::StateVector(LatticeSpec spec, std::vector<Complex> amplitudes, uint64_t t)
    : spec_(spec), amplitudes_(std::move(amplitudes)), t_(t) {
    check_dense_budget(spec_);
    if (amplitudes_.size() != (size_t{1} << spec_.num_qubits())) {
        throw ContractError("amplitude count does not match the lattice");
    }
}

double StateVector::norm() const {
    double n2 = 0;
    for (auto a : amplitudes_) {
        n2 += std::norm(a);
    }
    return std::sqrt(n2);
}

void StateVector::apply_partition(const Partition &partition, const SmallUnitary &cell_unitary) {
    const auto entries = sparse_entries(cell_unitary);
    const size_t n_compact = amplitudes_.size() >> 4;
    std::array<Complex, 16> in{};
    std::array<Complex, 16> out{};
    std::array<size_t, 16> offsets{};

    for (const auto &cell : partition.cells) {
        if (cell.kind == CellKind::identity) {
            continue;
        }
        if (cell.kind == CellKind::swap) {
            size_t mu = size_t{1} << cell.sites[0];
            size_t mv = size_t{1} << cell.sites[1];
            for (size_t k = 0; k < amplitudes_.size(); k++) {
                if ((k & mu) && !(k & mv)) {
                    std::swap(amplitudes_[k], amplitudes_[(k ^ mu) | mv]);
                }
            }
            continue;
        }

        // Local index bit 3 is q1, bit 0 is q4.
        for (size_t l = 0; l < 16; l++) {
            size_t off = 0;
            for (size_t q = 0; q < 4; q++) {
                if ((l >> (3 - q)) & 1) {
                    off |= size_t{1} << cell.sites[q];
                }
            }
            offsets[l] = off;
        }
        std::array<size_t, 4> sorted = cell.sites;
        std::sort(sorted.begin(), sorted.end());

        for (size_t c = 0; c < n_compact; c++) {
            size_t base = insert_zero_bits(c, sorted);
            for (size_t l = 0; l < 16; l++) {
                in[l] = amplitudes_[base | offsets[l]];
                out[l] = 0;
            }
            for (const auto &e : entries) {
                out[e.row] += e.value * in[e.col];
            }
            for (size_t l = 0; l < 16; l++) {
                amplitudes_[base | offsets[l]] = out[l];
            }
        }
    }
}

void StateVector::step() {
    apply_partition(cells_of_step(t_, spec_), tau());
    t_++;
}

void StateVector::inverse_step() {
    if (t_ == 0) {
        throw ContractError("inverse_step at t = 0");
    }
    static const SmallUnitary tau_dagger = tau().adjoint();
    apply_partition(cells_of_step(t_ - 1, spec_), tau_dagger);
    t_--;
}

void StateVector::run(uint64_t steps) {
    for (uint64_t k = 0; k < steps; k++) {
        step();
    }
}

void StateVector::flip_site(size_t site) {
    size_t m = size_t{1} << site;
    if (site >= spec_.num_qubits()) {
        throw std::out_of_range("site outside the lattice");
    }
    for (size_t k = 0; k < amplitudes_.size(); k++) {
        if (!(k & m)) {
            std::swap(amplitudes_[k], amplitudes_[k | m]);
        }
    }
}

StateVector product_state(const LatticeSpec &spec, std::span<const std::vector<Complex>> columns, uint64_t t) {
    check_dense_budget(spec);
    size_t width = column_bits(spec);
    size_t dim = size_t{1} << width;
    if (columns.size() != static_cast<size_t>(spec.columns())) {
        throw ContractError("product_state needs one vector per column");
    }
    std::vector<Complex> amps{1.0};
    for (size_t x = 0; x < columns.size(); x++) {
        if (columns[x].size() != dim) {
            throw ContractError("column vector has the wrong dimension");
        }
        std::vector<Complex> next(amps.size() * dim);
        for (size_t a = 0; a < dim; a++) {
            Complex c = columns[x][a];
            for (size_t k = 0; k < amps.size(); k++) {
                next[k | (a << (x * width))] = amps[k] * c;
            }
        }
        amps = std::move(next);
    }
    return StateVector(spec, std::move(amps), t);
}

StateVector init_state(const ColumnAssignment &assign, const LatticeSpec &spec) {
    check_dense_budget(spec);
    assign.validate(spec);
    size_t dim = size_t{1} << spec.rows();
    std::vector<std::vector<Complex>> columns;
    columns.reserve(static_cast<size_t>(spec.columns()));
    for (int i = 0; i < spec.r(); i++) {
        columns.push_back(assign.data[static_cast<size_t>(i)]);
        std::vector<Complex> p(dim, 0.0);
        p[assign.programs[static_cast<size_t>(i)].basis_index()] = 1.0;
        columns.push_back(std::move(p));
    }
    return product_state(spec, columns, 0);
}

Complex DensityMatrix::trace() const {
    Complex tr = 0;
    for (size_t k = 0; k < dim; k++) {
        tr += entries[k * dim + k];
    }
    return tr;
}

std::vector<double> DensityMatrix::eigenvalues() const {
    return linalg::hermitian_eigen(entries, dim, false).values;
}

std::vector<Complex> DensityMatrix::leading_eigenvector() const {
    return linalg::hermitian_eigen(entries, dim, true).vectors.front();
}

double DensityMatrix::purity() const {
    double p = 0;
    for (auto e : entries) {
        p += std::norm(e);
    }
    return p;
}

DensityMatrix column_marginal(const StateVector &state, int x) {
    const auto &spec = state.spec();
    if (x < 0 || x >= spec.columns()) {
        throw std::out_of_range("column " + std::to_string(x) + " outside the lattice");
    }
    size_t width = column_bits(spec);
    size_t dim = size_t{1} << width;
    size_t shift = static_cast<size_t>(x) * width;
    size_t mask = (dim - 1) << shift;
    DensityMatrix rho{dim, std::vector<Complex>(dim * dim, 0.0)};
    auto amps = state.amplitudes();
    std::vector<Complex> slice(dim);
    for (size_t rest = 0; rest < amps.size(); rest++) {
        if (rest & mask) {
            continue;
        }
        bool any = false;
        for (size_t a = 0; a < dim; a++) {
            slice[a] = amps[rest | (a << shift)];
            any |= slice[a] != Complex(0);
        }
        if (!any) {
            continue;
        }
        for (size_t a = 0; a < dim; a++) {
            if (slice[a] == Complex(0)) {
                continue;
            }
            for (size_t b = 0; b < dim; b++) {
                rho.entries[a * dim + b] += slice[a] * std::conj(slice[b]);
            }
        }
    }
    return rho;
}

namespace {

std::vector<double> column_probabilities(const StateVector &state, int x) {
    const auto &spec = state.spec();
    if (x < 0 || x >= spec.columns()) {
        throw std::out_of_range("column " + std::to_string(x) + " outside the lattice");
    }
    size_t width = column_bits(spec);
    size_t dim = size_t{1} << width;
    size_t shift = static_cast<size_t>(x) * width;
    std::vector<double> probs(dim, 0.0);
    auto amps = state.amplitudes();
    for (size_t k = 0; k < amps.size(); k++) {
        probs[(k >> shift) & (dim - 1)] += std::norm(amps[k]);
    }
    return probs;
}

std::string outcome_bits(uint64_t outcome, size_t width) {
    std::string bits(width, '0');
    for (size_t y = 0; y < width; y++) {
        if ((outcome >> y) & 1) {
            bits[y] = '1';
        }
    }
    return bits;
}

std::vector<MeasureResult> sample_probabilities(std::span<const double> probs, size_t width, uint64_t seed,
                                                size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<MeasureResult> out;
    out.reserve(count);
    size_t last_nonzero = 0;
    for (size_t k = 0; k < probs.size(); k++) {
        if (probs[k] > 0) {
            last_nonzero = k;
        }
    }
    for (size_t n = 0; n < count; n++) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        size_t pick = last_nonzero;
        double acc = 0;
        for (size_t k = 0; k < probs.size(); k++) {
            acc += probs[k];
            if (u < acc) {
                pick = k;
                break;
            }
        }
        out.push_back({outcome_bits(pick, width), pick, probs[pick]});
    }
    return out;
}

}  // namespace

std::vector<MeasureResult> sample_column(const StateVector &state, int x, uint64_t seed, size_t count) {
    auto probs = column_probabilities(state, x);
    return sample_probabilities(probs, column_bits(state.spec()), seed, count);
}

MeasureResult measure_column(const StateVector &state, int x, uint64_t seed) {
    return sample_column(state, x, seed, 1).front();
}

std::vector<MeasureResult> sample_register(std::span<const Complex> amplitudes, uint64_t seed, size_t count) {
    if (!std::has_single_bit(amplitudes.size())) {
        throw ContractError("register length must be a power of two");
    }
    std::vector<double> probs(amplitudes.size());
    for (size_t k = 0; k < amplitudes.size(); k++) {
        probs[k] = std::norm(amplitudes[k]);
    }
    auto width = static_cast<size_t>(std::countr_zero(amplitudes.size()));
    return sample_probabilities(probs, width, seed, count);
}

SchmidtResult schmidt_rank_of_columns(const StateVector &state, std::span<const int> columns) {
    const auto &spec = state.spec();
    size_t width = column_bits(spec);
    std::vector<int> side(columns.begin(), columns.end());
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    for (int x : side) {
        if (x < 0 || x >= spec.columns()) {
            throw std::out_of_range("column " + std::to_string(x) + " outside the lattice");
        }
    }

    // Bit positions of side A, then of side B, in ascending order.
    std::vector<size_t> bits_a;
    std::vector<size_t> bits_b;
    for (int x = 0; x < spec.columns(); x++) {
        bool in_a = std::binary_search(side.begin(), side.end(), x);
        for (size_t y = 0; y < width; y++) {
            (in_a ? bits_a : bits_b).push_back(static_cast<size_t>(x) * width + y);
        }
    }
    size_t dim_a = size_t{1} << bits_a.size();
    size_t dim_b = size_t{1} << bits_b.size();

    // Column-major dim_a x dim_b matrix M[ia, ib] = psi(ia, ib).
    std::vector<Complex> m(dim_a * dim_b);
    auto amps = state.amplitudes();
    for (size_t k = 0; k < amps.size(); k++) {
        size_t ia = 0;
        size_t ib = 0;
        for (size_t q = 0; q < bits_a.size(); q++) {
            ia |= ((k >> bits_a[q]) & 1) << q;
        }
        for (size_t q = 0; q < bits_b.size(); q++) {
            ib |= ((k >> bits_b[q]) & 1) << q;
        }
        m[ia + ib * dim_a] = amps[k];
    }

    SchmidtResult out;
    out.side = std::move(side);
    out.singular_values = linalg::singular_values(m, dim_a, dim_b);
    out.rank = static_cast<size_t>(std::count_if(out.singular_values.begin(), out.singular_values.end(),
                                                 [](double v) { return v > kSchmidtThreshold; }));
    return out;
}

SchmidtResult schmidt_rank_at_cut(const StateVector &state, int c) {
    const auto &spec = state.spec();
    if (c < 0 || c >= spec.columns() - 1) {
        throw std::out_of_range("cut after column " + std::to_string(c) + " does not split the lattice");
    }
    std::vector<int> left;
    for (int x = 0; x <= c; x++) {
        left.push_back(x);
    }
    return schmidt_rank_of_columns(state, left);
}

void write_state_dump(std::ostream &out, const StateVector &state) {
    const auto &spec = state.spec();
    out << "qca-state " << spec.s() << ' ' << spec.r() << ' ' << topology_name(spec.topology()) << ' '
        << state.time() << '\n';
    auto amps = state.amplitudes();
    char buf[128];
    for (size_t k = 0; k < amps.size(); k++) {
        if (std::abs(amps[k]) > 1e-14) {
            std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g\n", k, amps[k].real() + 0.0, amps[k].imag() + 0.0);
            out << buf;
        }
    }
}

}  // namespace qca
