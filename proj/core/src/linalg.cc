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

#include "linalg.h"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>

namespace qca::linalg {

std::vector<double> singular_values(std::span<const Complex> column_major, size_t rows, size_t cols) {
    Eigen::Map<const Eigen::MatrixXcd> m(column_major.data(), static_cast<Eigen::Index>(rows),
                                         static_cast<Eigen::Index>(cols));
    Eigen::VectorXd sv;
    if (rows <= cols) {
        Eigen::MatrixXcd wide = m.adjoint();
        sv = Eigen::BDCSVD<Eigen::MatrixXcd>(wide).singularValues();
    } else {
        sv = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
    }
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

HermitianEigen hermitian_eigen(std::span<const Complex> row_major, size_t dim, bool with_vectors) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * dim + j];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        m, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    HermitianEigen out;
    // Eigen sorts ascending.
    for (Eigen::Index k = static_cast<Eigen::Index>(dim) - 1; k >= 0; k--) {
        out.values.push_back(solver.eigenvalues()(k));
        if (with_vectors) {
            auto v = solver.eigenvectors().col(k);
            out.vectors.emplace_back(v.data(), v.data() + v.size());
        }
    }
    return out;
}

}  // namespace qca::linalg
