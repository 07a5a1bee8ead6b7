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

#ifndef QCA_GATEKIT_H
#define QCA_GATEKIT_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qca {

using Complex = std::complex<double>;

inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kEvolutionTolerance = 1e-10;

/// A dense unitary of dimension 2, 4 or 16, stored row-major.
///
/// Unitarity (max-norm of U^dagger U - I at most 1e-12) is checked on construction.
class SmallUnitary {
   public:
    SmallUnitary(size_t dim, std::vector<Complex> entries);

    static SmallUnitary identity(size_t dim);

    size_t dim() const { return dim_; }
    const Complex &operator()(size_t row, size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const Complex> entries() const { return entries_; }

    SmallUnitary adjoint() const;
    /// Matrix product; `(a * b)` applies b first.
    SmallUnitary operator*(const SmallUnitary &other) const;

    std::vector<Complex> apply(std::span<const Complex> vec) const;

    /// Max-norm distance |a - b|.
    static double distance(const SmallUnitary &a, const SmallUnitary &b);
    /// Max-norm distance after multiplying `a` by the unit phase that best aligns it with `b`.
    static double distance_up_to_phase(const SmallUnitary &a, const SmallUnitary &b, Complex *phase = nullptr);

   private:
    struct Unchecked {};
    SmallUnitary(size_t dim, std::vector<Complex> entries, Unchecked);

    size_t dim_;
    std::vector<Complex> entries_;
};

namespace gates {

SmallUnitary hadamard();
/// exp(-i pi/8 Z) = diag(e^{-i pi/8}, e^{i pi/8}).
SmallUnitary phase_pi8();
/// Controlled-Z on two qubits, basis |ab> with a the more significant bit.
SmallUnitary cz();

// Four-qubit cell factors. Labels are 1..4; the cell basis is |q1 q2 q3 q4> with q1 the most
// significant bit of the 16-dimensional index.
SmallUnitary cell_swap(int a, int b);
SmallUnitary cell_hadamard(int q);
/// exp(-i (pi/8) ((1 - Z_control)/2) Z_target).
SmallUnitary cell_controlled_phase(int control, int target);
/// exp(i pi (1-Z_a)/2 (1-Z_b)/2 (1-Z_c)/2): -1 exactly when qubits a, b and c are all |1>.
SmallUnitary cell_ccz(int a, int b, int c);

}  // namespace gates

/// The 16x16 cell transition unitary
///   S(1,3) S(2,4) H_1 exp(-i pi/8 (1-Z_3)/2 Z_1) exp(i pi (1-Z_4)/2 (1-Z_1)/2 (1-Z_2)/2),
/// rightmost factor first, in the |q1 q2 q3 q4> basis (q1 most significant).
const SmallUnitary &tau();
SmallUnitary build_tau();

/// The two classical program bits a cell carries: p3 gates the pi/8 phase, p4 gates the CZ.
struct CellProgram {
    bool p3 = false;
    bool p4 = false;

    bool operator==(const CellProgram &) const = default;
};

/// One classical program column of 2s bits, indexed by row.
class ProgramColumn {
   public:
    ProgramColumn() = default;
    explicit ProgramColumn(std::vector<uint8_t> bits);
    /// Row 0 first; only '0' and '1' are accepted.
    static ProgramColumn from_string(std::string_view text);
    static ProgramColumn zeros(int rows) { return ProgramColumn(std::vector<uint8_t>(rows, 0)); }

    int rows() const { return static_cast<int>(bits_.size()); }
    bool operator[](int row) const { return bits_[row] != 0; }
    void set(int row, bool value) { bits_[row] = value ? 1 : 0; }
    std::span<const uint8_t> bits() const { return bits_; }
    /// Basis index of the column state (row y is bit y).
    uint64_t basis_index() const;
    std::string to_string() const;

    bool operator==(const ProgramColumn &) const = default;

   private:
    std::vector<uint8_t> bits_;
};

/// A primitive acting on a 2s-qubit column register where row y is bit y of the index.
struct ColumnGate {
    enum class Kind : uint8_t { cz, phase, hadamard };
    Kind kind;
    int row;           // target row (phase, hadamard) or upper row a (cz)
    int other_row = -1;  // lower row b for cz

    bool operator==(const ColumnGate &) const = default;
};

/// Gates controlled by `program` at a step of parity `parity`, in application order.
///
/// For each cell-row j, rows a = [2j + parity]_{2s}, b = [a + 1]_{2s}: CZ(a, b) if p[b], then
/// exp(-i pi/8 Z) on a if p[a], then H on a.
std::vector<ColumnGate> u_of_p(const ProgramColumn &program, int parity, int s);

/// In-place application to a register of 2^rows amplitudes.
void apply_column_gates(std::span<const ColumnGate> gates, std::span<Complex> amplitudes);

/// Dense matrix of a column gate list on `rows` qubits. Only meant for small registers.
std::vector<Complex> column_matrix(std::span<const ColumnGate> gates, int rows);

struct ConsistencyReport {
    bool ok = true;
    /// First failing cell-basis input |d1 d2 p3 p4> (q1 most significant), or -1.
    int failing_input = -1;
    std::string detail;
};

/// Checks tau(|D>_12 (x) |p>_34) = |p>_12 (x) (U(p)|D>)_34 for all 16 basis inputs.
ConsistencyReport tau_consistency_check(const SmallUnitary &candidate);
ConsistencyReport tau_consistency_check();

/// One row per line, entries "re+imi" with 17 significant digits separated by spaces.
std::string format_matrix(const SmallUnitary &u);
std::string format_complex(Complex z);

}  // namespace qca

#endif
