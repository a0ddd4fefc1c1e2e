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

#ifndef MAGNON_MEASUREMENT_HPP
#define MAGNON_MEASUREMENT_HPP

#include <optional>
#include <vector>

#include "magnon/state_vector.hpp"

namespace magnon {

// One branch of a projective measurement. outcome_index is the position of
// the basis vector, or -1 for the residual branch of an explicitly
// incomplete basis. post_state lives on the unmeasured qubits in ascending
// index order; it is absent when no qubits remain or the branch probability
// is numerically zero.
struct MeasurementRecord {
    int outcome_index = 0;
    double probability = 0.0;
    std::optional<StateVector> post_state;
};

// Projective von Neumann measurement of the listed qubits in the given basis.
// The basis vectors live on the subset qubits in the order listed in
// `subset` (subset[0] = most significant). The basis must be pairwise
// orthonormal within kDefaultTolerance and complete on the subset unless
// allow_incomplete is set, in which case a residual record with
// outcome_index -1 carries the remaining probability. Throws BasisError for
// non-orthonormal or wrongly sized bases and IndexError for bad subsets.
std::vector<MeasurementRecord> project_measure(const StateVector& s,
                                               const std::vector<StateVector>& basis,
                                               const std::vector<int>& subset,
                                               bool allow_incomplete = false);

}  // namespace magnon

#endif  // MAGNON_MEASUREMENT_HPP
