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

#ifndef MAGNON_TOLERANCES_HPP
#define MAGNON_TOLERANCES_HPP

namespace magnon {

// Absolute tolerance for norms, orthogonality, hermiticity, and equality of
// amplitudes. All registers are at most 7 qubits, so exact arithmetic sits
// far above this floor.
inline constexpr double kDefaultTolerance = 1e-10;

// Tolerance on protocol success fidelities.
inline constexpr double kFidelityTolerance = 1e-9;

// Eigenvalues below this cutoff are treated as zero inside entropies.
inline constexpr double kEntropyCutoff = 1e-12;

// Residual bound guaranteed by the analytic constraint samplers.
inline constexpr double kSamplerResidualBound = 1e-12;

// Hand-entered amplitudes whose squared norm is off by at most this much are
// rescaled (with a warning flag) instead of rejected.
inline constexpr double kRescaleWindow = 1e-6;

// Branches with probability below this threshold are reported as vacuous.
inline constexpr double kVacuousProbability = 1e-12;

}  // namespace magnon

#endif  // MAGNON_TOLERANCES_HPP
