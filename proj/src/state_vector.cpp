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

#include "magnon/state_vector.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "magnon/errors.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

namespace {

int qubits_for_length(std::size_t length) {
    if (length < 2) {
        throw ArgumentError("amplitude array must have at least 2 entries, got " +
                            std::to_string(length));
    }
    int n = 0;
    std::size_t d = length;
    while (d > 1) {
        if (d % 2 != 0) {
            throw ArgumentError("amplitude array length " + std::to_string(length) +
                                " is not a power of two");
        }
        d /= 2;
        ++n;
    }
    return n;
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<std::complex<double>> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1) {
        throw ArgumentError("state must have at least one qubit, got " +
                            std::to_string(num_qubits_));
    }
    const std::size_t expected = std::size_t{1} << num_qubits_;
    if (amplitudes_.size() != expected) {
        throw ArgumentError("expected " + std::to_string(expected) + " amplitudes for " +
                            std::to_string(num_qubits_) + " qubits, got " +
                            std::to_string(amplitudes_.size()));
    }
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > kDefaultTolerance) {
        throw NormalizationError("state norm^2 deviates from 1 by " +
                                 std::to_string(std::abs(n2 - 1.0)));
    }
}

StateVector StateVector::computational_basis(int num_qubits, std::size_t index) {
    if (num_qubits < 1) {
        throw ArgumentError("state must have at least one qubit");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw IndexError("basis index " + std::to_string(index) + " out of range for " +
                         std::to_string(num_qubits) + " qubits");
    }
    std::vector<std::complex<double>> amps(dim, 0.0);
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<std::complex<double>> amplitudes) {
    const int n = qubits_for_length(amplitudes.size());
    return StateVector(n, std::move(amplitudes));
}

std::complex<double> StateVector::amplitude(std::size_t index) const {
    if (index >= amplitudes_.size()) {
        throw IndexError("amplitude index " + std::to_string(index) + " out of range");
    }
    return amplitudes_[index];
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<std::complex<double>> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a.amplitudes()[i] * b.amplitudes()[j];
        }
    }
    return StateVector(a.num_qubits() + b.num_qubits(), std::move(out));
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ArgumentError("inner product requires equal qubit counts, got " +
                            std::to_string(a.num_qubits()) + " and " +
                            std::to_string(b.num_qubits()));
    }
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

}  // namespace magnon
