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

#include "qca/gatekit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qca/errors.h"

namespace qca {

namespace {

constexpr size_t kCellDim = 16;

double unitarity_error(size_t dim, std::span<const Complex> m) {
    double worst = 0;
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            Complex acc = 0;
            for (size_t k = 0; k < dim; k++) {
                acc += std::conj(m[k * dim + i]) * m[k * dim + j];
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

// Label 1..4 -> bit position in the 16-dimensional cell index.
int cell_bit(int label) {
    if (label < 1 || label > 4) {
        throw ContractError("cell qubit labels are 1..4");
    }
    return 4 - label;
}

SmallUnitary cell_diagonal(auto &&phase_of_index) {
    std::vector<Complex> m(kCellDim * kCellDim, 0.0);
    for (size_t k = 0; k < kCellDim; k++) {
        m[k * kCellDim + k] = phase_of_index(k);
    }
    return SmallUnitary(kCellDim, std::move(m));
}

}  // namespace

SmallUnitary::SmallUnitary(size_t dim, std::vector<Complex> entries, Unchecked)
    : dim_(dim), entries_(std::move(entries)) {
}

SmallUnitary::SmallUnitary(size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim != 2 && dim != 4 && dim != 16) {
        throw ContractError("SmallUnitary dimension must be 2, 4 or 16, got " + std::to_string(dim));
    }
    if (entries_.size() != dim * dim) {
        throw ContractError("SmallUnitary entry count does not match its dimension");
    }
    double err = unitarity_error(dim_, entries_);
    if (!(err <= kUnitaryTolerance)) {
        throw ContractError("matrix is not unitary (max |U^dag U - I| = " + std::to_string(err) + ")");
    }
}

SmallUnitary SmallUnitary::identity(size_t dim) {
    std::vector<Complex> m(dim * dim, 0.0);
    for (size_t k = 0; k < dim; k++) {
        m[k * dim + k] = 1.0;
    }
    return SmallUnitary(dim, std::move(m));
}

SmallUnitary SmallUnitary::adjoint() const {
    std::vector<Complex> m(dim_ * dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            m[j * dim_ + i] = std::conj(entries_[i * dim_ + j]);
        }
    }
    return SmallUnitary(dim_, std::move(m), Unchecked{});
}

SmallUnitary SmallUnitary::operator*(const SmallUnitary &other) const {
    if (dim_ != other.dim_) {
        throw ContractError("SmallUnitary dimension mismatch in product");
    }
    std::vector<Complex> m(dim_ * dim_, 0.0);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = entries_[i * dim_ + k];
            if (a == Complex(0)) {
                continue;
            }
            for (size_t j = 0; j < dim_; j++) {
                m[i * dim_ + j] += a * other.entries_[k * dim_ + j];
            }
        }
    }
    // Products of unitaries are unitary.
    return SmallUnitary(dim_, std::move(m), Unchecked{});
}

std::vector<Complex> SmallUnitary::apply(std::span<const Complex> vec) const {
    if (vec.size() != dim_) {
        throw ContractError("vector length does not match unitary dimension");
    }
    std::vector<Complex> out(dim_, 0.0);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            out[i] += entries_[i * dim_ + j] * vec[j];
        }
    }
    return out;
}

double SmallUnitary::distance(const SmallUnitary &a, const SmallUnitary &b) {
    if (a.dim_ != b.dim_) {
        throw ContractError("SmallUnitary dimension mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < a.entries_.size(); k++) {
        worst = std::max(worst, std::abs(a.entries_[k] - b.entries_[k]));
    }
    return worst;
}

double SmallUnitary::distance_up_to_phase(const SmallUnitary &a, const SmallUnitary &b, Complex *phase) {
    if (a.dim_ != b.dim_) {
        throw ContractError("SmallUnitary dimension mismatch");
    }
    // tr(a^dag b) points along the phase that best maps a onto b.
    Complex overlap = 0;
    for (size_t k = 0; k < a.entries_.size(); k++) {
        overlap += std::conj(a.entries_[k]) * b.entries_[k];
    }
    Complex ph = std::abs(overlap) > 1e-300 ? overlap / std::abs(overlap) : Complex(1);
    if (phase != nullptr) {
        *phase = ph;
    }
    double worst = 0;
    for (size_t k = 0; k < a.entries_.size(); k++) {
        worst = std::max(worst, std::abs(ph * a.entries_[k] - b.entries_[k]));
    }
    return worst;
}

namespace gates {

SmallUnitary hadamard() {
    double h = 1.0 / std::sqrt(2.0);
    return SmallUnitary(2, {h, h, h, -h});
}

SmallUnitary phase_pi8() {
    Complex lo = std::polar(1.0, -std::numbers::pi / 8);
    return SmallUnitary(2, {lo, 0.0, 0.0, std::conj(lo)});
}

SmallUnitary cz() {
    return SmallUnitary(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
}

SmallUnitary cell_swap(int a, int b) {
    int ba = cell_bit(a);
    int bb = cell_bit(b);
    std::vector<Complex> m(kCellDim * kCellDim, 0.0);
    for (size_t k = 0; k < kCellDim; k++) {
        size_t va = (k >> ba) & 1;
        size_t vb = (k >> bb) & 1;
        size_t image = k;
        if (va != vb) {
            image ^= (size_t{1} << ba) | (size_t{1} << bb);
        }
        m[image * kCellDim + k] = 1.0;
    }
    return SmallUnitary(kCellDim, std::move(m));
}

SmallUnitary cell_hadamard(int q) {
    int bq = cell_bit(q);
    double h = 1.0 / std::sqrt(2.0);
    std::vector<Complex> m(kCellDim * kCellDim, 0.0);
    for (size_t k = 0; k < kCellDim; k++) {
        size_t k0 = k & ~(size_t{1} << bq);
        size_t k1 = k0 | (size_t{1} << bq);
        bool one = (k >> bq) & 1;
        // <row| H |k>: row k0 gets +h, row k1 gets +h or -h.
        m[k0 * kCellDim + k] = h;
        m[k1 * kCellDim + k] = one ? -h : h;
    }
    return SmallUnitary(kCellDim, std::move(m));
}

SmallUnitary cell_controlled_phase(int control, int target) {
    int bc = cell_bit(control);
    int bt = cell_bit(target);
    Complex lo = std::polar(1.0, -std::numbers::pi / 8);
    return cell_diagonal([&](size_t k) -> Complex {
        if (((k >> bc) & 1) == 0) {
            return 1.0;
        }
        return ((k >> bt) & 1) ? std::conj(lo) : lo;
    });
}

SmallUnitary cell_ccz(int a, int b, int c) {
    size_t mask = (size_t{1} << cell_bit(a)) | (size_t{1} << cell_bit(b)) | (size_t{1} << cell_bit(c));
    return cell_diagonal([&](size_t k) -> Complex { return (k & mask) == mask ? -1.0 : 1.0; });
}

}  // namespace gates

SmallUnitary build_tau() {
    using namespace gates;
    return cell_swap(1, 3) * cell_swap(2, 4) * cell_hadamard(1) * cell_controlled_phase(3, 1) * cell_ccz(4, 1, 2);
}

const SmallUnitary &tau() {
    static const SmallUnitary instance = build_tau();
    return instance;
}

ProgramColumn::ProgramColumn(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        if (b > 1) {
            throw ContractError("program bits must be 0 or 1");
        }
    }
}

ProgramColumn ProgramColumn::from_string(std::string_view text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ContractError("program column '" + std::string(text) + "' contains a non-binary character");
        }
        bits.push_back(c == '1');
    }
    return ProgramColumn(std::move(bits));
}

uint64_t ProgramColumn::basis_index() const {
    uint64_t k = 0;
    for (size_t y = 0; y < bits_.size(); y++) {
        k |= uint64_t{bits_[y]} << y;
    }
    return k;
}

std::string ProgramColumn::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::vector<ColumnGate> u_of_p(const ProgramColumn &program, int parity, int s) {
    int rows = 2 * s;
    if (s < 1 || program.rows() != rows) {
        throw ContractError(
            "program column has " + std::to_string(program.rows()) + " rows, expected " + std::to_string(rows));
    }
    if (parity != 0 && parity != 1) {
        throw ContractError("parity must be 0 or 1");
    }
    std::vector<ColumnGate> out;
    out.reserve(3 * static_cast<size_t>(s));
    for (int j = 0; j < s; j++) {
        int a = (2 * j + parity) % rows;
        int b = (a + 1) % rows;
        if (program[b]) {
            out.push_back({ColumnGate::Kind::cz, a, b});
        }
        if (program[a]) {
            out.push_back({ColumnGate::Kind::phase, a});
        }
        out.push_back({ColumnGate::Kind::hadamard, a});
    }
    return out;
}

void apply_column_gates(std::span<const ColumnGate> gates, std::span<Complex> amplitudes) {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex lo = std::polar(1.0, -std::numbers::pi / 8);
    const Complex hi = std::conj(lo);
    size_t n = amplitudes.size();
    for (const auto &g : gates) {
        size_t ma = size_t{1} << g.row;
        if (ma >= n) {
            throw ContractError("column gate row outside the register");
        }
        switch (g.kind) {
            case ColumnGate::Kind::cz: {
                size_t mask = ma | (size_t{1} << g.other_row);
                for (size_t k = 0; k < n; k++) {
                    if ((k & mask) == mask) {
                        amplitudes[k] = -amplitudes[k];
                    }
                }
                break;
            }
            case ColumnGate::Kind::phase:
                for (size_t k = 0; k < n; k++) {
                    amplitudes[k] *= (k & ma) ? hi : lo;
                }
                break;
            case ColumnGate::Kind::hadamard:
                for (size_t k = 0; k < n; k++) {
                    if (k & ma) {
                        continue;
                    }
                    Complex a0 = amplitudes[k];
                    Complex a1 = amplitudes[k | ma];
                    amplitudes[k] = h * (a0 + a1);
                    amplitudes[k | ma] = h * (a0 - a1);
                }
                break;
        }
    }
}

std::vector<Complex> column_matrix(std::span<const ColumnGate> gates, int rows) {
    size_t dim = size_t{1} << rows;
    std::vector<Complex> m(dim * dim, 0.0);
    std::vector<Complex> col(dim);
    for (size_t j = 0; j < dim; j++) {
        std::fill(col.begin(), col.end(), Complex(0));
        col[j] = 1.0;
        apply_column_gates(gates, col);
        for (size_t i = 0; i < dim; i++) {
            m[i * dim + j] = col[i];
        }
    }
    return m;
}

ConsistencyReport tau_consistency_check(const SmallUnitary &candidate) {
    ConsistencyReport report;
    if (candidate.dim() != kCellDim) {
        report.ok = false;
        report.detail = "candidate is not 16x16";
        return report;
    }
    for (int input = 0; input < 16; input++) {
        int d1 = (input >> 3) & 1;
        int d2 = (input >> 2) & 1;
        int p3 = (input >> 1) & 1;
        int p4 = input & 1;

        // Single-cell column: row 0 = (q1 | q3), row 1 = (q2 | q4).
        std::vector<Complex> reg(4, 0.0);
        reg[static_cast<size_t>(d1 | (d2 << 1))] = 1.0;
        ProgramColumn program(std::vector<uint8_t>{static_cast<uint8_t>(p3), static_cast<uint8_t>(p4)});
        apply_column_gates(u_of_p(program, 0, 1), reg);

        std::vector<Complex> expected(kCellDim, 0.0);
        for (size_t k = 0; k < 4; k++) {
            size_t local = (size_t(p3) << 3) | (size_t(p4) << 2) | ((k & 1) << 1) | (k >> 1);
            expected[local] = reg[k];
        }
        double worst = 0;
        for (size_t row = 0; row < kCellDim; row++) {
            worst = std::max(worst, std::abs(candidate(row, static_cast<size_t>(input)) - expected[row]));
        }
        if (worst > kUnitaryTolerance) {
            report.ok = false;
            report.failing_input = input;
            std::ostringstream msg;
            msg << "basis input |" << d1 << d2 << p3 << p4 << "> deviates by " << worst;
            report.detail = msg.str();
            return report;
        }
    }
    return report;
}

ConsistencyReport tau_consistency_check() {
    return tau_consistency_check(tau());
}

std::string format_complex(Complex z) {
    // Adding +0.0 folds negative zero into positive zero.
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real() + 0.0, z.imag() + 0.0);
    return buf;
}

std::string format_matrix(const SmallUnitary &u) {
    std::string out;
    for (size_t i = 0; i < u.dim(); i++) {
        for (size_t j = 0; j < u.dim(); j++) {
            if (j) {
                out.push_back(' ');
            }
            out += format_complex(u(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace qca
