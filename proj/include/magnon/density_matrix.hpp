// Copyright 2026 The magnon-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGNON_DENSITY_MATRIX_HPP
#define MAGNON_DENSITY_MATRIX_HPP

#include <vector>

#include <Eigen/Dense>

#include "magnon/state_vector.hpp"

namespace magnon {

// Hermitian, unit-trace, positive-semidefinite 2^n x 2^n matrix over the same
// big-endian qubit ordering as StateVector. Construction validates all three
// properties and throws MatrixError on violation.
class DensityMatrix {
  public:
    DensityMatrix(int num_qubits, Eigen::MatrixXcd entries);

    static DensityMatrix from_state(const StateVector& s);

    int num_qubits() const { return num_qubits_; }
    const Eigen::MatrixXcd& entries() const { return entries_; }

  private:
    int num_qubits_;
    Eigen::MatrixXcd entries_;
};

// Reduced density matrix on the kept qubits (result ordered by ascending
// original index). Throws ArgumentError for an empty or invalid keep set.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// -sum(lambda log2 lambda) over eigenvalues above kEntropyCutoff, in bits.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace magnon

#endif  // MAGNON_DENSITY_MATRIX_HPP
