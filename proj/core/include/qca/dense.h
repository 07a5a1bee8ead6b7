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

#ifndef QCA_DENSE_H
#define QCA_DENSE_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qca/gatekit.h"
#include "qca/lattice.h"

namespace qca {

/// Dense backends refuse lattices above this many qubits (1 GiB of amplitudes).
inline constexpr size_t kMaxDenseQubits = 26;

/// Initial column contents: data register i on column 2i, program p_{i+1} on column 2i+1.
/// Each data register is a normalized vector of 2^(2s) amplitudes (row y is bit y).
struct ColumnAssignment {
    std::vector<std::vector<Complex>> data;
    std::vector<ProgramColumn> programs;

    /// All-|0..0> data with the given programs.
    static ColumnAssignment zeros(const LatticeSpec &spec, std::vector<ProgramColumn> programs);
    /// Throws ContractError unless sizes and norms fit `spec`.
    void validate(const LatticeSpec &spec) const;
};

/// Full state vector over all 4sr lattice qubits, plus the current time.
class StateVector {
   public:
    /// Throws ResourceError above kMaxDenseQubits.
    StateVector(LatticeSpec spec, std::vector<Complex> amplitudes, uint64_t t = 0);

    const LatticeSpec &spec() const { return spec_; }
    uint64_t time() const { return t_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    size_t size() const { return amplitudes_.size(); }

    double norm() const;

    /// Applies the global transition for the current time and advances t.
    void step();
    /// Undoes the most recent step. Throws ContractError at t = 0.
    void inverse_step();
    void run(uint64_t steps);

    /// Flips one site in the computational basis. Only for fault-injection checks.
    void flip_site(size_t site);

   private:
    void apply_partition(const Partition &partition, const SmallUnitary &cell_unitary);

    LatticeSpec spec_;
    std::vector<Complex> amplitudes_;
    uint64_t t_;
};

/// Throws ResourceError when a dense state for `spec` would exceed kMaxDenseQubits.
void check_dense_budget(const LatticeSpec &spec);

StateVector init_state(const ColumnAssignment &assign, const LatticeSpec &spec);

/// Builds a product state from one 2^(2s) vector per column (column x at bits x*2s..).
StateVector product_state(const LatticeSpec &spec, std::span<const std::vector<Complex>> columns, uint64_t t);

/// Square Hermitian matrix stored row-major.
struct DensityMatrix {
    size_t dim = 0;
    std::vector<Complex> entries;

    const Complex &operator()(size_t i, size_t j) const { return entries[i * dim + j]; }
    Complex trace() const;
    /// Eigenvalues in descending order.
    std::vector<double> eigenvalues() const;
    /// Normalized eigenvector of the largest eigenvalue.
    std::vector<Complex> leading_eigenvector() const;
    double purity() const;
};

/// Reduced density operator of column x (row y is bit y).
DensityMatrix column_marginal(const StateVector &state, int x);

struct MeasureResult {
    std::string bits;  // row 0 first
    uint64_t outcome;  // basis index, row y is bit y
    double probability;
};

inline constexpr const char *kSamplerName = "mt19937_64";

/// Samples column x in the computational basis from a mt19937_64 stream seeded with `seed`.
MeasureResult measure_column(const StateVector &state, int x, uint64_t seed);
/// Draws `count` outcomes from one stream.
std::vector<MeasureResult> sample_column(const StateVector &state, int x, uint64_t seed, size_t count);
/// Same sampling procedure applied to an explicit register.
std::vector<MeasureResult> sample_register(std::span<const Complex> amplitudes, uint64_t seed, size_t count);

inline constexpr double kSchmidtThreshold = 1e-8;

struct SchmidtResult {
    size_t rank;
    std::vector<double> singular_values;  // descending
    /// Columns on the "left" side of the bipartition.
    std::vector<int> side;
};

/// Bipartition {columns 0..c} | {c+1..2r-1}. On the torus this bipartition is bounded by two cuts,
/// after column c and after column 2r-1 (the wrap cut).
SchmidtResult schmidt_rank_at_cut(const StateVector &state, int c);
/// Bipartition of the given columns against all the others.
SchmidtResult schmidt_rank_of_columns(const StateVector &state, std::span<const int> columns);

/// "qca-state s r topology t" then "index re im" for each amplitude above 1e-14 in magnitude.
void write_state_dump(std::ostream &out, const StateVector &state);

}  // namespace qca

#endif
