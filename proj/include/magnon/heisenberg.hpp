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

#ifndef MAGNON_HEISENBERG_HPP
#define MAGNON_HEISENBERG_HPP

#include <complex>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "magnon/state_vector.hpp"

namespace magnon {

// Three-spin Heisenberg ring A-B-C with a tunable A-C bond:
//   H = j * (S_A.S_B + S_B.S_C + delta * S_A.S_C),  S = sigma / 2.
// Qubits: A = 0, B = 1, C = 2.
struct HeisenbergParams {
    double j = 1.0;
    double delta = 1.0;
    double t = 0.0;
};

// 8x8 Hamiltonian matrix in the computational basis.
Eigen::MatrixXcd build_hamiltonian(const HeisenbergParams& params);

// U = exp(-i H t) via eigendecomposition. Throws ArgumentError if j == 0.
Eigen::MatrixXcd evolution_operator(const HeisenbergParams& params);

// Applies exp(-i H t) to a three-qubit state. Throws ArgumentError if the
// state is not three qubits or j == 0.
StateVector evolve(const StateVector& state, const HeisenbergParams& params);

// The evolution time at which |100> reaches the analyzed one-magnon
// superposition: t* = (2 / (3 j)) * arccos(1/8), for delta = 1.
double t_star(double j);

// Amplitudes of the delta = 1 ring evolving |100> for time t*(j), written
// in the one-magnon basis alpha|100> + beta|010> + gamma|001>.
struct WGenerationReport {
    std::complex<double> alpha;
    std::complex<double> beta;
    std::complex<double> gamma;
    // | |alpha|^2 + |beta|^2 - |gamma|^2 |. The evolved state has
    // beta = gamma, so this equals |alpha|^2 = 11/18 rather than zero; it is
    // reported as a diagnostic, not asserted to vanish.
    double condition_residual = 0.0;
    // Total weight in the one-magnon sector (should be 1).
    double one_magnon_weight = 0.0;
    double t_star = 0.0;
    std::string initial_state = "100";

    nlohmann::json to_json() const;
};

// Evolves |100> under the delta = 1 ring for t*(j) and reads off the
// one-magnon amplitudes.
WGenerationReport w_generation_check(double j);

}  // namespace magnon

#endif  // MAGNON_HEISENBERG_HPP
