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

#ifndef MAGNON_STATE_VECTOR_HPP
#define MAGNON_STATE_VECTOR_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace magnon {

// Normalized pure state of n qubits, stored as 2^n complex amplitudes in
// big-endian order: qubit 0 is the most significant bit of the amplitude
// index, so |q0 q1 ... q_{n-1}> sits at index (q0 << (n-1)) | ... | q_{n-1}.
class StateVector {
  public:
    // Throws ArgumentError when the length is not 2^num_qubits and
    // NormalizationError when the squared norm deviates from 1 by more
    // than kDefaultTolerance.
    StateVector(int num_qubits, std::vector<std::complex<double>> amplitudes);

    // Basis state |index> of an n-qubit register.
    static StateVector computational_basis(int num_qubits, std::size_t index);

    // Deduces the qubit count from the length, which must be a power of two.
    static StateVector from_amplitudes(std::vector<std::complex<double>> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
    std::complex<double> amplitude(std::size_t index) const;
    double norm_squared() const;

  private:
    int num_qubits_;
    std::vector<std::complex<double>> amplitudes_;
};

// Kronecker product; a's qubits become the more significant indices.
StateVector tensor(const StateVector& a, const StateVector& b);

// <a|b>. Throws ArgumentError on mismatched qubit counts.
std::complex<double> inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|^2; invariant under global phases of either argument.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace magnon

#endif  // MAGNON_STATE_VECTOR_HPP
