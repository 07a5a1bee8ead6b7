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

#ifndef QCA_SRC_LINALG_H
#define QCA_SRC_LINALG_H

#include <span>
#include <vector>

#include "qca/gatekit.h"

namespace qca::linalg {

/// Singular values (descending) of a rows x cols matrix stored column-major.
std::vector<double> singular_values(std::span<const Complex> column_major, size_t rows, size_t cols);

struct HermitianEigen {
    std::vector<double> values;                // descending
    std::vector<std::vector<Complex>> vectors; // vectors[k] pairs with values[k]
};

/// Eigen-decomposition of a dim x dim Hermitian matrix stored row-major.
HermitianEigen hermitian_eigen(std::span<const Complex> row_major, size_t dim, bool with_vectors);

}  // namespace qca::linalg

#endif
