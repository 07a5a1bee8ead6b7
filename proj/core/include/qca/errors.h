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

#ifndef QCA_ERRORS_H
#define QCA_ERRORS_H

#include <stdexcept>
#include <string>

namespace qca {

/// A caller violated a documented precondition (wrong length, wrong parity, bad time, ...).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested operation is not defined for the lattice topology it was given.
struct UnsupportedTopology : ContractError {
    using ContractError::ContractError;
};

/// A dense allocation would exceed the qubit budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A circuit could not be turned into a program.
struct CompileError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qca

#endif
